"""Free groups, the Artin action, and presentations of link complements.

Two builders are provided: the closed braid alone, and the closed braid
together with its axis.  Both produce meridional presentations of
deficiency one, ready for Fox calculus.

Variable naming: a one-component closure uses ``t``, otherwise ``t1..tk``
in component order (component of strand 1 first).  The axis meridian is
generator ``a`` with variable ``tau``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .braid import BraidWord, closure_components
from .errors import MalformedInput

Letter = tuple[int, int]

AXIS_VAR = "tau"


class FreeWord:
    """A word in free generators, stored as (generator id, +-1) pairs.

    Nothing is reduced implicitly; call :meth:`reduce`.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple((int(g), int(e)) for g, e in letters)
        for g, e in letters:
            if e not in (1, -1):
                raise MalformedInput(f"exponent {e} on generator {g} is not +-1")
        self.letters = letters

    @classmethod
    def gen(cls, g: int, e: int = 1) -> FreeWord:
        return cls(((g, e),))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        w = object.__new__(FreeWord)
        w.letters = self.letters + other.letters
        return w

    def inverse(self) -> FreeWord:
        w = object.__new__(FreeWord)
        w.letters = tuple((g, -e) for g, e in reversed(self.letters))
        return w

    def reduce(self) -> FreeWord:
        stack: list[Letter] = []
        for g, e in self.letters:
            if stack and stack[-1] == (g, -e):
                stack.pop()
            else:
                stack.append((g, e))
        w = object.__new__(FreeWord)
        w.letters = tuple(stack)
        return w

    def is_reduced(self) -> bool:
        return all(a != (b[0], -b[1]) for a, b in zip(self.letters, self.letters[1:]))

    def exponent_sums(self) -> dict[int, int]:
        sums: dict[int, int] = {}
        for g, e in self.letters:
            sums[g] = sums.get(g, 0) + e
        return {g: s for g, s in sums.items() if s}

    def signed_ids(self) -> list[int]:
        """1-based signed generator ids, the JSON form."""
        return [(g + 1) * e for g, e in self.letters]

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"FreeWord({self.signed_ids()})"


def cyclic_reduce(w: FreeWord) -> FreeWord:
    letters = list(w.reduce().letters)
    while len(letters) > 1 and letters[0] == (letters[-1][0], -letters[-1][1]):
        letters = letters[1:-1]
    return FreeWord(letters)


@dataclass(frozen=True)
class FreeGroupEndomorphism:
    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, n: int) -> FreeGroupEndomorphism:
        return cls(tuple(FreeWord.gen(i) for i in range(n)))

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, w: FreeWord) -> FreeWord:
        out: list[Letter] = []
        for g, e in w:
            img = self.images[g]
            out.extend(img.letters if e == 1 else img.inverse().letters)
        return FreeWord(out)

    def compose(self, other: FreeGroupEndomorphism) -> FreeGroupEndomorphism:
        """``self o other``: apply ``other`` first."""
        return FreeGroupEndomorphism(tuple(self(img).reduce() for img in other.images))

    def reduced(self) -> FreeGroupEndomorphism:
        return FreeGroupEndomorphism(tuple(w.reduce() for w in self.images))


def _sigma_images(n: int, w: int) -> list[FreeWord]:
    i = abs(w) - 1
    x, y = FreeWord.gen(i), FreeWord.gen(i + 1)
    images = [FreeWord.gen(k) for k in range(n)]
    if w > 0:
        images[i] = x * y * x.inverse()
        images[i + 1] = x
    else:
        images[i] = y
        images[i + 1] = y.inverse() * x * y
    return images


def artin_action(b: BraidWord) -> FreeGroupEndomorphism:
    """Automorphism phi_{w1} o phi_{w2} o ... of the free group on the strands.

    sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.  Images are
    kept freely reduced.
    """
    images = [FreeWord.gen(k) for k in range(b.strands)]
    current = FreeGroupEndomorphism(tuple(images))
    for w in b.letters:
        step = _sigma_images(b.strands, w)
        current = FreeGroupEndomorphism(tuple(current(s).reduce() for s in step))
    return current


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    components: tuple[int, ...]
    relators: tuple[FreeWord, ...]
    abelianization: tuple[str, ...]  # variable name per generator
    variables: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.variables:
            seen: list[str] = []
            for v in self.abelianization:
                if v not in seen:
                    seen.append(v)
            object.__setattr__(self, "variables", tuple(seen))
        if not (len(self.generators) == len(self.components) == len(self.abelianization)):
            raise MalformedInput("generator, component and abelianization tables differ in length")
        comp_var: dict[int, str] = {}
        for c, v in zip(self.components, self.abelianization):
            if comp_var.setdefault(c, v) != v:
                raise MalformedInput(f"component {c} maps to two variables")
            if v not in self.variables:
                raise MalformedInput(f"variable {v!r} not declared")
        for r in self.relators:
            for g, _ in r:
                if not 0 <= g < len(self.generators):
                    raise MalformedInput(f"relator uses unknown generator id {g}")

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)

    def abelianize(self, w: FreeWord) -> dict[str, int]:
        out: dict[str, int] = {}
        for g, e in w:
            v = self.abelianization[g]
            out[v] = out.get(v, 0) + e
        return {v: s for v, s in out.items() if s}

    def check(self) -> None:
        """Raise unless every relator abelianizes to 0 and the deficiency is 0 or 1."""
        for k, r in enumerate(self.relators):
            if self.abelianize(r):
                raise MalformedInput(f"relator {k} is not meridionally consistent")
        if self.deficiency not in (0, 1):
            raise MalformedInput(f"deficiency {self.deficiency} not in (0, 1)")

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "components": list(self.components),
            "relators": [r.signed_ids() for r in self.relators],
            "abelianization": dict(zip(self.generators, self.abelianization)),
            "variables": list(self.variables),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> GroupPresentation:
        gens = tuple(data["generators"])
        relators = tuple(
            FreeWord((abs(s) - 1, 1 if s > 0 else -1) for s in r) for r in data["relators"]
        )
        ab = tuple(data["abelianization"][g] for g in gens)
        return cls(gens, tuple(data["components"]), relators, ab, tuple(data.get("variables", ())))


def component_variables(k: int) -> tuple[str, ...]:
    return ("t",) if k == 1 else tuple(f"t{j + 1}" for j in range(k))


def closed_braid_presentation(b: BraidWord) -> GroupPresentation:
    """<x_1..x_n | beta(x_i) x_i^-1, i < n> for the closure of ``b``."""
    n = b.strands
    k, label = closure_components(b)
    names = component_variables(k)
    beta = artin_action(b)
    relators = tuple(
        beta.images[i] * FreeWord.gen(i, -1) for i in range(n - 1)
    )
    return GroupPresentation(
        generators=tuple(f"x{i + 1}" for i in range(n)),
        components=label,
        relators=relators,
        abelianization=tuple(names[c] for c in label),
        variables=names,
    )


def braid_axis_presentation(b: BraidWord) -> GroupPresentation:
    """Presentation of the complement of the closed braid plus its axis.

    Relators are a beta(x_i) a^-1 x_i^-1 for every strand; the axis
    meridian ``a`` is the last generator.
    """
    n = b.strands
    k, label = closure_components(b)
    names = component_variables(k)
    beta = artin_action(b)
    a = FreeWord.gen(n)
    relators = tuple(
        a * beta.images[i] * a.inverse() * FreeWord.gen(i, -1) for i in range(n)
    )
    return GroupPresentation(
        generators=tuple(f"x{i + 1}" for i in range(n)) + ("a",),
        components=label + (k,),
        relators=relators,
        abelianization=tuple(names[c] for c in label) + (AXIS_VAR,),
        variables=names + (AXIS_VAR,),
    )
