"""Obstructions to isotopy of braided tori.

Both tests are one-sided: a mismatch of invariants proves the tori are not
isotopic, a match proves nothing.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .alexpoly import collapse, hosokawa, link_alexander, relabelings, symmetrize
from .braid import BraidWord, closure_components
from .errors import ArityMismatch, StrandMismatch
from .laurent import AssociateClass, LaurentPoly
from .linkpresent import AXIS_VAR


class Status(str, enum.Enum):
    NOT_ISOTOPIC = "NOT_ISOTOPIC"
    NOT_DISTINGUISHED = "NOT_DISTINGUISHED"


@dataclass(frozen=True)
class ObstructionVerdict:
    status: Status
    evidence: dict = field(default_factory=dict)

    @property
    def distinguished(self) -> bool:
        return self.status is Status.NOT_ISOTOPIC

    def to_dict(self) -> dict:
        ev = {}
        for key, value in self.evidence.items():
            if isinstance(value, LaurentPoly):
                ev[key] = value.to_dict()
            elif isinstance(value, list):
                ev[key] = [v.to_dict() if isinstance(v, LaurentPoly) else v for v in value]
            else:
                ev[key] = value
        return {"status": self.status.value, "evidence": ev}


def strands_from_genus(g: int) -> int:
    """Strand count m = 2g + 4 of the branch braid for a genus-g fibered link."""
    if g < 0:
        raise ValueError(f"genus must be non-negative, got {g}")
    return 2 * g + 4


def axis_invariant(b: BraidWord) -> LaurentPoly:
    """Symmetrized Delta_{L_B} at squared variables; braid variables first, then tau."""
    return symmetrize(link_alexander(b, axis=True))


def _braid_variants(p: LaurentPoly) -> list[LaurentPoly]:
    """p under every re-orientation and relabelling of the braid-component variables.

    The axis variable is held fixed.  For a knot closure this is just
    tau' -> tau'^{+-1}.
    """
    braid_vars = [v for v in p.vars if v != AXIS_VAR]
    out = []
    for relabelled in relabelings(p, braid_vars):
        for signs in itertools.product((False, True), repeat=len(braid_vars)):
            flipped = [v for v, s in zip(braid_vars, signs) if s]
            out.append(relabelled.invert_vars(flipped))
    return out


def braided_torus_obstruction(b1: BraidWord, b2: BraidWord) -> ObstructionVerdict:
    """Compare Delta^sym_{L_B}(t^2, tau^2) and Delta^sym_{L_B'}(t^2, tau'^{+-2})."""
    if b1.strands != b2.strands:
        raise StrandMismatch(f"strand counts differ: {b1.strands} vs {b2.strands}")
    p1 = axis_invariant(b1)
    p2 = axis_invariant(b2)
    k1, _ = closure_components(b1)
    k2, _ = closure_components(b2)
    evidence = {"first": p1, "second": p2, "components": [k1, k2]}
    if k1 != k2:
        return ObstructionVerdict(Status.NOT_ISOTOPIC, evidence)
    target = AssociateClass(p1)
    evidence["second_inverted"] = p2.invert_vars([v for v in p2.vars if v != AXIS_VAR])
    if any(AssociateClass(v) == target for v in _braid_variants(p2)):
        return ObstructionVerdict(Status.NOT_DISTINGUISHED, evidence)
    return ObstructionVerdict(Status.NOT_ISOTOPIC, evidence)


def squared_hosokawa(delta: LaurentPoly | AssociateClass, k: int, var: str = "t") -> LaurentPoly:
    """Symmetrized Hosokawa polynomial at t^2, collapsing variables first if needed."""
    if isinstance(delta, AssociateClass):
        delta = delta.poly
    if delta.vars != (var,):
        delta = collapse(delta, var)
    return symmetrize(hosokawa(delta, k))


def simple_cover_obstruction(
    delta1: LaurentPoly | AssociateClass, delta2: LaurentPoly | AssociateClass, k1: int = 3, k2: int = 3
) -> ObstructionVerdict:
    """Compare the squared symmetric Hosokawa polynomials of two three-component links."""
    if k1 != 3 or k2 != 3:
        raise ArityMismatch(f"threefold simple covers need 3-component links, got {k1} and {k2}")
    h1 = squared_hosokawa(delta1, k1)
    h2 = squared_hosokawa(delta2, k2)
    evidence = {"first": h1, "second": h2}
    if AssociateClass(h1) == AssociateClass(h2):
        return ObstructionVerdict(Status.NOT_DISTINGUISHED, evidence)
    return ObstructionVerdict(Status.NOT_ISOTOPIC, evidence)
