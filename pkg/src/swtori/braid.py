"""Braid words, their permutations, closures and Markov moves.

Letter ``+i`` is the positive crossing sigma_i of strands i and i+1; words
compose left to right.  Strands are numbered from 1 in text and in
:class:`Permutation` images, from 0 in internal loops.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LetterOutOfRange, MalformedInput

_BRAID_RE = re.compile(r"^\s*(\d+)\s*:(.*)$", re.DOTALL)
_INT_RE = re.compile(r"^[+-]?\d+$")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(w) for w in self.letters))
        if not isinstance(self.strands, int) or self.strands < 1:
            raise MalformedInput(f"strand count must be a positive integer, got {self.strands!r}")
        for w in self.letters:
            if w == 0 or abs(w) >= self.strands:
                raise LetterOutOfRange(f"letter {w} out of range for {self.strands} strands")

    def __str__(self) -> str:
        return format_braid(self)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-w for w in reversed(self.letters)))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise LetterOutOfRange("cannot multiply braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)


def parse_braid(text: str) -> BraidWord:
    """Parse ``"n: w1 w2 ..."`` into a :class:`BraidWord`."""
    m = _BRAID_RE.match(text)
    if not m:
        raise MalformedInput(f"expected '<n>: <letters>', got {text!r}")
    tokens = m.group(2).split()
    for tok in tokens:
        if not _INT_RE.match(tok):
            raise MalformedInput(f"bad braid letter {tok!r}")
    return BraidWord(int(m.group(1)), tuple(int(tok) for tok in tokens))


def format_braid(b: BraidWord) -> str:
    if not b.letters:
        return f"{b.strands}:"
    return f"{b.strands}: " + " ".join(str(w) for w in b.letters)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise MalformedInput(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(i)) for i in range(1, len(self.images) + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles ordered by their smallest element, each starting there."""
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))


def braid_permutation(b: BraidWord) -> Permutation:
    """The product s_{|w1|} o s_{|w2|} o ... of adjacent transpositions.

    Read as functions (rightmost first), so ``"3: 1 2"`` gives 1->2->3->1.
    Equivalently perm(p) is the start position of the strand ending at p.
    """
    images = list(range(1, b.strands + 1))
    for w in b.letters:
        i = abs(w) - 1
        images[i], images[i + 1] = images[i + 1], images[i]
    return Permutation(tuple(images))


def closure_components(b: BraidWord) -> tuple[int, tuple[int, ...]]:
    """Number of closure components and the 0-based component of each strand."""
    cycles = braid_permutation(b).cycles()
    label = [0] * b.strands
    for k, cyc in enumerate(cycles):
        for s in cyc:
            label[s - 1] = k
    return len(cycles), tuple(label)


def conjugate(b: BraidWord, g: int) -> BraidWord:
    """Markov move I: the word g . b . g^-1."""
    if g == 0 or abs(g) >= b.strands:
        raise LetterOutOfRange(f"generator {g} out of range for {b.strands} strands")
    return BraidWord(b.strands, (g,) + b.letters + (-g,))


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """Markov move II: add a strand and the letter sign * n."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return BraidWord(b.strands + 1, b.letters + (sign * b.strands,))
