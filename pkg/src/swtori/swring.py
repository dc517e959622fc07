"""Seiberg-Witten invariants as elements of an integral group ring.

A :class:`ManifoldBlock` carries its invariant as a Laurent polynomial over
named homology classes.  Blocks flagged ``relative`` store the relative
invariant SW * (t - t^-1) along their torus instead of SW itself; the
E(1) block is stored this way with relative value 1, so the formal
inverse (t - t^-1)^-1 never has to be represented.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from .alexpoly import link_alexander, specialize, symmetrize
from .braid import BraidWord, closure_components
from .errors import ArityMismatch, MalformedInput, PreconditionError, UnknownClass
from .laurent import AssociateClass, Exponent, LaurentPoly
from .linkpresent import AXIS_VAR


@dataclass(frozen=True)
class ManifoldBlock:
    name: str
    classes: tuple[str, ...]
    sw: LaurentPoly
    parity: int = 0
    closed: bool = True
    relative: bool = False
    # torus class -> {class: intersection number with that torus}
    pairings: Mapping[str, Mapping[str, int]] = field(default_factory=dict)
    psc_split: bool = False

    def __post_init__(self):
        classes = tuple(self.classes)
        if len(set(classes)) != len(classes):
            raise MalformedInput(f"class names not unique: {classes}")
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "sw", self.sw.extend_vars(classes))
        if self.parity not in (0, 1):
            raise MalformedInput(f"parity must be 0 or 1, got {self.parity!r}")
        for torus, table in self.pairings.items():
            for c in (torus, *table):
                if c not in classes:
                    raise UnknownClass(f"pairing table mentions unknown class {c!r}")

    def torus(self, name: str | None = None) -> str:
        if name is None:
            if not self.classes:
                raise UnknownClass(f"block {self.name!r} has no classes")
            return self.classes[0]
        if name not in self.classes:
            raise UnknownClass(f"{name!r} is not a class of block {self.name!r}")
        return name

    def relative_sw(self, torus: str | None = None) -> LaurentPoly:
        """SW * (t - t^-1) along ``torus``; the stored value for relative blocks."""
        if self.relative:
            return self.sw
        t = LaurentPoly.var(self.torus(torus), self.classes)
        return self.sw * (t - t ** -1)

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "classes": list(self.classes),
            "parity": self.parity,
            "closed": self.closed,
            "sw": self.sw.to_dict(),
        }
        if self.relative:
            out["relative"] = True
        if self.pairings:
            out["pairings"] = {k: dict(sorted(v.items())) for k, v in sorted(self.pairings.items())}
        if self.psc_split:
            out["psc_split"] = True
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> ManifoldBlock:
        try:
            classes = tuple(str(c) for c in data["classes"])
            sw = LaurentPoly.from_dict(data["sw"])
            return cls(
                name=str(data["name"]),
                classes=classes,
                sw=sw,
                parity=int(data.get("parity", 0)),
                closed=bool(data.get("closed", True)),
                relative=bool(data.get("relative", False)),
                pairings={
                    str(k): {str(c): int(x) for c, x in v.items()} for k, v in data.get("pairings", {}).items()
                },
                psc_split=bool(data.get("psc_split", False)),
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise MalformedInput(f"bad block JSON: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> ManifoldBlock:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise MalformedInput(str(exc)) from exc


def e1_block(fiber: str = "t_F") -> ManifoldBlock:
    """E(1) with its elliptic fiber, stored as relative invariant 1."""
    # (e + sign)/4 = (12 - 8)/4 = 1
    return ManifoldBlock("E(1)", (fiber,), LaurentPoly.const(1, (fiber,)), parity=1, closed=False, relative=True)


def basic_classes(m: ManifoldBlock) -> list[tuple[Exponent, int]]:
    """Support of the invariant with coefficients; the zero class is included."""
    return m.sw.items()


def check_symmetry(m: ManifoldBlock) -> bool:
    if not m.closed:
        raise PreconditionError(f"block {m.name!r} is not closed")
    sign = -1 if m.parity else 1
    for exp, c in m.sw.items():
        if m.sw.coefficient(tuple(-x for x in exp)) != sign * c:
            return False
    return True


def adjunction_check(g: int, s: int, pairings: Sequence[int]) -> bool:
    """2g - 2 >= s + p for every pairing p of a basic class with the surface."""
    if g < 1:
        raise ValueError(f"adjunction inequality needs genus >= 1, got {g}")
    return all(2 * g - 2 >= s + p for p in pairings)


def _one_variable(delta: LaurentPoly | AssociateClass) -> LaurentPoly:
    if isinstance(delta, AssociateClass):
        delta = delta.poly
    used = delta.used_vars()
    if len(used) > 1:
        raise ArityMismatch(f"knot polynomial must be one-variable, got {used}")
    return delta


def knot_surgery(
    x: ManifoldBlock, delta: LaurentPoly | AssociateClass, torus: str | None = None, knot: str = "K"
) -> ManifoldBlock:
    """SW of X_K = symmetrized Delta_K(t^2) * SW_X, with t the torus class."""
    c = x.torus(torus)
    delta = _one_variable(delta)
    sym = symmetrize(delta)
    factor = specialize(sym, {v: {c: 1} for v in sym.vars}, x.classes)
    return replace(x, name=f"{x.name}_{knot}", sw=factor * x.sw, pairings=dict(x.pairings))


def _block_aliases(blocks: Sequence[ManifoldBlock], tori: Sequence[str], link_vars: Sequence[str]):
    """Rename each block's classes into one alphabet.

    The chosen torus of block j becomes ``link_vars[j]``; other classes keep
    their names unless two blocks share one, in which case ``_j`` is appended.
    """
    counts: dict[str, int] = {}
    for b, t in zip(blocks, tori):
        for c in b.classes:
            if c != t:
                counts[c] = counts.get(c, 0) + 1
    aliases = []
    for j, (b, t) in enumerate(zip(blocks, tori)):
        m = {}
        for c in b.classes:
            if c == t:
                m[c] = link_vars[j]
            elif counts[c] > 1 or c in link_vars:
                m[c] = f"{c}_{j + 1}"
            else:
                m[c] = c
        aliases.append(m)
    return aliases


def link_surgery(
    blocks: Sequence[ManifoldBlock],
    delta: LaurentPoly | AssociateClass,
    tori: Sequence[str | None] | None = None,
    name: str = "L",
) -> ManifoldBlock:
    """Link surgery: Delta^sym_L(t_1^2..t_n^2) * prod_j SW_j (t_j - t_j^-1).

    Block j is glued along its torus ``tori[j]`` to component j of the
    link, whose variable is the j-th variable of ``delta``.  For n >= 2 the
    result is a closed block with parity the sum of the input parities; for
    n = 1 it is the relative invariant of the knot-surgered block.
    """
    if isinstance(delta, AssociateClass):
        delta = delta.poly
    n = len(blocks)
    if n != len(delta.vars):
        raise ArityMismatch(f"{n} blocks for a {len(delta.vars)}-variable polynomial")
    if tori is None:
        tori = [None] * n
    if len(tori) != n:
        raise ArityMismatch("one torus class per block is required")
    tori = [b.torus(t) for b, t in zip(blocks, tori)]
    link_vars = delta.vars
    aliases = _block_aliases(blocks, tori, link_vars)
    alphabet: list[str] = list(link_vars)
    for m in aliases:
        for c in m.values():
            if c not in alphabet:
                alphabet.append(c)
    alphabet_t = tuple(alphabet)
    total = symmetrize(delta).extend_vars(alphabet_t)
    for b, t, m in zip(blocks, tori, aliases):
        total = total * b.relative_sw(t).rename(m).extend_vars(alphabet_t)
    parity = sum(b.parity for b in blocks) % 2
    pairings: dict[str, dict[str, int]] = {}
    for b, m in zip(blocks, aliases):
        for torus, table in b.pairings.items():
            pairings[m[torus]] = {m[c]: x for c, x in table.items()}
    return ManifoldBlock(
        name=f"X({','.join(b.name for b in blocks)};{name})",
        classes=alphabet_t,
        sw=total,
        parity=parity,
        closed=n >= 2,
        relative=n == 1,
        pairings=pairings,
    )


def check_orthogonal(x: ManifoldBlock, torus: str) -> None:
    """Require every basic class to pair trivially with a square-zero torus."""
    table = x.pairings.get(torus, {})
    index = {c: i for i, c in enumerate(x.classes)}
    products = []
    for exp, _ in basic_classes(x):
        p = sum(exp[index[c]] * k for c, k in table.items())
        products.extend((p, -p))
    if not adjunction_check(1, 0, products):
        raise PreconditionError(
            f"a basic class of {x.name!r} pairs nontrivially with torus {torus!r}"
        )


def fibersum_relative(
    x: ManifoldBlock, b: BraidWord, m: int | None = None, torus: str | None = None, rim: str = "tau"
) -> ManifoldBlock:
    """Relative invariant of (X, T_B): Delta^sym_{L_B}(t^2, tau^2) * SW_X * (t - t^-1).

    ``t`` is the torus class of ``x`` (the axis meridian of L_B) and ``tau``
    the rim-torus class of the braid meridian.  The result is the invariant
    of the fiber sum of X with E(1) along T_B.
    """
    if m is None:
        m = b.strands
    if m != b.strands:
        raise ArityMismatch(f"braid has {b.strands} strands, expected {m}")
    t = x.torus(torus)
    check_orthogonal(x, t)
    k, _ = closure_components(b)
    rims = (rim,) if k == 1 else tuple(f"{rim}{j + 1}" for j in range(k))
    clash = set(rims) & set(x.classes)
    if clash:
        raise UnknownClass(f"rim class names {sorted(clash)} already used by {x.name!r}")
    delta = link_alexander(b, axis=True).poly
    sym = symmetrize(delta)
    sigma = {v: {r: 1} for v, r in zip(delta.vars[:-1], rims)}
    sigma[AXIS_VAR] = {t: 1}
    classes = x.classes + rims
    factor = specialize(sym, sigma, classes)
    sw = factor * x.relative_sw(t).extend_vars(classes)
    # symmetry sign of the product: (-1)^(k+1) * (-1)^parity * (-1)
    return ManifoldBlock(
        name=f"{x.name}#_{{T_B=F}}E(1)",
        classes=classes,
        sw=sw,
        parity=(x.parity + k) % 2,
        closed=True,
        relative=False,
        pairings=dict(x.pairings),
    )


def fiber_to_torus(p: LaurentPoly, m: int, fiber: str = "t_F", torus: str = "t") -> LaurentPoly:
    """Rewrite a polynomial in t_F using t_F = t^m."""
    sigma = {v: {v: 1} for v in p.vars if v != fiber}
    sigma[fiber] = {torus: m}
    order = tuple(torus if v == fiber else v for v in p.vars)
    return specialize(p, sigma, tuple(dict.fromkeys(order)))


def cover_pushforward(
    delta: LaurentPoly | AssociateClass, x: ManifoldBlock, torus: str | None = None
) -> LaurentPoly:
    """p_* of the threefold cover invariant: Delta^sym(t^2,t^2,t^2) SW_X^3 (t - t^-1)^3."""
    if isinstance(delta, AssociateClass):
        delta = delta.poly
    if len(delta.vars) != 3:
        raise ArityMismatch(f"expected a 3-variable link polynomial, got {delta.vars}")
    t = x.torus(torus)
    sym = symmetrize(delta)
    collapsed = specialize(sym, {v: {t: 1} for v in sym.vars}, x.classes)
    return collapsed * x.relative_sw(t) ** 3


def vanishing_flag(x: ManifoldBlock, split: bool = True) -> ManifoldBlock:
    """Record a declared positive-scalar-curvature splitting; the invariant becomes 0."""
    if not split:
        return x
    return replace(x, sw=LaurentPoly.zero(x.classes), psc_split=True)
