"""Torus-surgery families I(X, T) from the Morgan-Mrowka-Szabo formula.

The reduced invariant of X_T(p, q, r) is p*A + q*B + r*C, where A, B, C are
the values at (1,0,0), (0,1,0), (0,0,1) in the basis (S^1 direction,
Lagrangian-framing pushoff, meridian).  A family is stored as that
generating triple and compared by exact integer linear algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import MalformedInput
from .laurent import Exponent, LaurentPoly


@dataclass(frozen=True)
class SurgeryBasisTriple:
    A: LaurentPoly
    B: LaurentPoly
    C: LaurentPoly

    def __post_init__(self):
        names: list[str] = []
        for p in (self.A, self.B, self.C):
            for v in p.vars:
                if v not in names:
                    names.append(v)
        for label in "ABC":
            object.__setattr__(self, label, getattr(self, label).extend_vars(names))

    @property
    def vars(self) -> tuple[str, ...]:
        return self.A.vars

    def generators(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
        return self.A, self.B, self.C

    def to_dict(self) -> dict:
        return {"A": self.A.to_dict(), "B": self.B.to_dict(), "C": self.C.to_dict()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> SurgeryBasisTriple:
        try:
            return cls(*(LaurentPoly.from_dict(data[k]) for k in "ABC"))
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad triple JSON: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> SurgeryBasisTriple:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise MalformedInput(str(exc)) from exc


@dataclass(frozen=True)
class FamilyVerdict:
    equal: bool
    witness: LaurentPoly | None = None

    def __post_init__(self):
        if not self.equal and self.witness is None:
            raise ValueError("an inequality verdict needs a witness")

    def to_dict(self) -> dict:
        return {"equal": self.equal, "witness": None if self.witness is None else self.witness.to_dict()}


def mms_evaluate(tr: SurgeryBasisTriple, p: int, q: int, r: int) -> LaurentPoly:
    return tr.A * p + tr.B * q + tr.C * r


# -- integer linear algebra ---------------------------------------------


def _column_hermite(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Column-style echelon form H = M U with U unimodular.

    Returns (H, U).  H is in column echelon form: column j has its first
    nonzero entry strictly below that of column j - 1, and zero columns
    come last.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    h = [list(r) for r in rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(dst: int, src: int, k: int) -> None:
        # column dst += k * column src
        for mat in (h, u):
            for row in mat:
                row[dst] += k * row[src]

    def swap(a: int, b: int) -> None:
        for mat in (h, u):
            for row in mat:
                row[a], row[b] = row[b], row[a]

    def negate(a: int) -> None:
        for mat in (h, u):
            for row in mat:
                row[a] = -row[a]

    piv = 0
    for i in range(m):
        if piv >= n:
            break
        # Euclid across columns piv..n-1 on row i
        while True:
            nz = [j for j in range(piv, n) if h[i][j]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(h[i][j]))
            if j0 != piv:
                swap(piv, j0)
            done = True
            for j in range(piv + 1, n):
                if h[i][j]:
                    colop(j, piv, -(h[i][j] // h[i][piv]))
                    if h[i][j]:
                        done = False
            if done:
                break
        if h[i][piv]:
            if h[i][piv] < 0:
                negate(piv)
            piv += 1
    return h, u


def solve_integer_system(rows: list[list[int]], rhs: list[int]) -> list[int] | None:
    """One integer solution x of M x = rhs, or None."""
    n = len(rows[0]) if rows else 0
    if not rows:
        return [0] * n
    h, u = _column_hermite(rows)
    y = [0] * n
    col = 0
    for i, row in enumerate(h):
        residual = rhs[i] - sum(row[j] * y[j] for j in range(col))
        if col < n and row[col]:
            q, rem = divmod(residual, row[col])
            if rem:
                return None
            y[col] = q
            col += 1
        elif residual:
            return None
    return [sum(u[i][j] * y[j] for j in range(n)) for i in range(n)]


def _coefficient_rows(polys: Sequence[LaurentPoly], target: LaurentPoly) -> tuple[list[list[int]], list[int]]:
    support: set[Exponent] = set(target.terms)
    for p in polys:
        support.update(p.terms)
    order = sorted(support, reverse=True)
    rows = [[p.coefficient(e) for p in polys] for e in order]
    rhs = [target.coefficient(e) for e in order]
    return rows, rhs


def family_membership(tr: SurgeryBasisTriple, p: LaurentPoly) -> tuple[int, int, int] | None:
    """Integers (p, q, r) with p*A + q*B + r*C == P, or None."""
    names = list(tr.vars) + [v for v in p.vars if v not in tr.vars]
    gens = [g.extend_vars(names) for g in tr.generators()]
    target = p.extend_vars(names)
    rows, rhs = _coefficient_rows(gens, target)
    if not rows:
        return (0, 0, 0)
    sol = solve_integer_system(rows, rhs)
    return None if sol is None else tuple(sol)


def family_equal(tr1: SurgeryBasisTriple, tr2: SurgeryBasisTriple) -> FamilyVerdict:
    """Two families agree iff each generating triple lies in the other's span."""
    for gen in tr1.generators():
        if family_membership(tr2, gen) is None:
            return FamilyVerdict(False, gen)
    for gen in tr2.generators():
        if family_membership(tr1, gen) is None:
            return FamilyVerdict(False, gen)
    return FamilyVerdict(True)


def lagrangian_pair_triples(var: str = "t_F") -> tuple[SurgeryBasisTriple, SurgeryBasisTriple]:
    """The triples for the homologous Lagrangian tori T and T'.

    Both have value 0 at (1,0,0) and (t^2 - 1 + t^-2)^2 at (0,0,1); they
    differ at (0,1,0), where T gives 0 and T' gives 1.
    """
    t = LaurentPoly.var(var)
    c = (t ** 2 - 1 + t ** -2) ** 2
    zero = LaurentPoly.zero((var,))
    one = LaurentPoly.const(1, (var,))
    return SurgeryBasisTriple(zero, zero, c), SurgeryBasisTriple(zero, one, c)
