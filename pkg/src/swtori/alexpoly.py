"""Fox calculus and Alexander-type polynomials of links.

The Alexander polynomial of a deficiency-one meridional presentation is
computed from one deleted-column minor of the Alexander matrix.  For a
link with at least two components that minor equals
``Delta * (v_j - 1)`` and is divided exactly; for a knot the minor is
``Delta`` itself.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Mapping, Sequence

from .errors import (
    ArityMismatch,
    AsymmetricSupport,
    DegenerateMatrix,
    NonSquare,
    NotDivisible,
    UnmappedGenerator,
    UnmappedVariable,
)
from .laurent import AssociateClass, Exponent, LaurentPoly, normalize_units
from .braid import BraidWord
from .linkpresent import FreeWord, GroupPresentation, braid_axis_presentation, closed_braid_presentation

Matrix = list[list[LaurentPoly]]


# -- Fox calculus -------------------------------------------------------


def fox_derivative(
    w: FreeWord, x: int, phi: Mapping[int, Exponent] | Sequence[Exponent], vars: Sequence[str]
) -> LaurentPoly:
    """Abelianized Fox derivative d w / d x.

    ``phi[g]`` is the exponent vector (over ``vars``) of generator ``g``.
    """
    n = len(vars)
    prefix = [0] * n
    acc: dict[Exponent, int] = {}
    for g, e in w:
        try:
            img = phi[g]
        except (KeyError, IndexError):
            raise UnmappedGenerator(f"generator {g} has no abelianization") from None
        if e == 1:
            if g == x:
                key = tuple(prefix)
                acc[key] = acc.get(key, 0) + 1
            for i in range(n):
                prefix[i] += img[i]
        else:
            for i in range(n):
                prefix[i] -= img[i]
            if g == x:
                key = tuple(prefix)
                acc[key] = acc.get(key, 0) - 1
    return LaurentPoly(vars, acc)


def generator_exponents(p: GroupPresentation) -> list[Exponent]:
    index = {v: i for i, v in enumerate(p.variables)}
    out = []
    for v in p.abelianization:
        e = [0] * len(p.variables)
        e[index[v]] = 1
        out.append(tuple(e))
    return out


def alexander_matrix(p: GroupPresentation) -> Matrix:
    phi = generator_exponents(p)
    return [
        [fox_derivative(r, k, phi, p.variables) for k in range(len(p.generators))]
        for r in p.relators
    ]


# -- determinants -------------------------------------------------------


def exact_determinant(m: Matrix, vars: Sequence[str] | None = None) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over the Laurent ring.

    Each row is first multiplied by a monomial that makes all its exponents
    non-negative; the product of those monomials is divided back out at the
    end.  All intermediate divisions are exact.
    """
    size = len(m)
    if any(len(row) != size for row in m):
        raise NonSquare(f"matrix is not square: {size} rows, row lengths {[len(r) for r in m]}")
    if vars is None:
        vars = _common_vars(m)
    if size == 0:
        return LaurentPoly.const(1, vars)
    rows = [[entry.extend_vars(vars) if entry.vars != tuple(vars) else entry for entry in row] for row in m]
    nv = len(vars)
    total_shift = [0] * nv
    cleared = []
    for row in rows:
        lows = [0] * nv
        for entry in row:
            if entry:
                for i, x in enumerate(entry.min_exponents()):
                    lows[i] = min(lows[i], x)
        shift = tuple(-x for x in lows)
        cleared.append([entry.shift(shift) for entry in row])
        for i in range(nv):
            total_shift[i] += shift[i]
    det = _bareiss(cleared, vars)
    return det.shift(tuple(-s for s in total_shift))


def _common_vars(m: Matrix) -> tuple[str, ...]:
    names: list[str] = []
    for row in m:
        for entry in row:
            for v in entry.vars:
                if v not in names:
                    names.append(v)
    return tuple(names)


def _bareiss(a: Matrix, vars: Sequence[str]) -> LaurentPoly:
    n = len(a)
    a = [list(row) for row in a]
    sign = 1
    prev = LaurentPoly.const(1, vars)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return LaurentPoly.zero(vars)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = pivot * a[i][j] - aik * a[k][j]
                a[i][j] = num.exquo(prev) if num else num
            a[i][k] = LaurentPoly.zero(vars)
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def cofactor_determinant(m: Matrix, vars: Sequence[str] | None = None) -> LaurentPoly:
    """Laplace expansion along the first row; exponential, for checking only."""
    if vars is None:
        vars = _common_vars(m)
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare("matrix is not square")
    if n == 0:
        return LaurentPoly.const(1, vars)
    total = LaurentPoly.zero(vars)
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * cofactor_determinant(minor, vars)
        total = total + term if j % 2 == 0 else total - term
    return total


# -- Alexander polynomial -----------------------------------------------


def deleted_column_minor(p: GroupPresentation, column: int) -> LaurentPoly:
    if len(p.relators) != len(p.generators) - 1:
        raise DegenerateMatrix(
            f"need #relators = #generators - 1, got {len(p.relators)} and {len(p.generators)}"
        )
    m = alexander_matrix(p)
    square = [row[:column] + row[column + 1:] for row in m]
    return exact_determinant(square, p.variables)


def alexander_polynomial(p: GroupPresentation, column: int | None = None) -> AssociateClass:
    """Multivariable Alexander polynomial from the minor deleting ``column``.

    ``column`` defaults to the last generator.
    """
    if column is None:
        column = len(p.generators) - 1
    if not 0 <= column < len(p.generators):
        raise IndexError(f"column {column} out of range")
    if not p.relators and len(p.generators) == 1:
        return AssociateClass(LaurentPoly.const(1, p.variables))
    minor = deleted_column_minor(p, column)
    if len(p.variables) == 1:
        return AssociateClass(minor)
    v = p.abelianization[column]
    divisor = LaurentPoly.var(v, p.variables) - 1
    try:
        delta = minor.exquo(divisor)
    except NotDivisible as exc:
        raise NotDivisible(
            f"deleted-column minor is not divisible by ({v} - 1); presentation outside the supported class"
        ) from exc
    return AssociateClass(delta)


def link_alexander(b: BraidWord, axis: bool = False) -> AssociateClass:
    """Alexander polynomial of a closed braid, or of closed braid plus axis."""
    p = braid_axis_presentation(b) if axis else closed_braid_presentation(b)
    return alexander_polynomial(p)


# -- specialisation and symmetric forms ---------------------------------


def specialize(
    p: LaurentPoly,
    sigma: Mapping[str, Mapping[str, int]],
    target_vars: Sequence[str] | None = None,
) -> LaurentPoly:
    """Ring map sending each variable of ``p`` to a monomial.

    ``sigma[v]`` is a dict of target-variable exponents; ``{}`` sends ``v``
    to 1.  Unused variables of ``p`` may be omitted from ``sigma``.
    """
    for v in p.used_vars():
        if v not in sigma:
            raise UnmappedVariable(f"no image for variable {v!r}")
    if target_vars is None:
        names: list[str] = []
        for v in p.vars:
            for w in sigma.get(v, {}):
                if w not in names:
                    names.append(w)
        target_vars = tuple(names)
    target_vars = tuple(target_vars)
    index = {w: i for i, w in enumerate(target_vars)}
    images = []
    for v in p.vars:
        img = [0] * len(target_vars)
        for w, e in sigma.get(v, {}).items():
            if w not in index:
                raise UnmappedVariable(f"target variable {w!r} not in {target_vars}")
            img[index[w]] += e
        images.append(img)
    out: dict[Exponent, int] = {}
    for exp, c in p.items():
        new = [0] * len(target_vars)
        for x, img in zip(exp, images):
            if x:
                for i, y in enumerate(img):
                    new[i] += x * y
        key = tuple(new)
        out[key] = out.get(key, 0) + c
    return LaurentPoly(target_vars, out)


def collapse(p: LaurentPoly, var: str = "t") -> LaurentPoly:
    """Set every variable equal to ``var``."""
    return specialize(p, {v: {var: 1} for v in p.vars}, (var,))


def relabelings(p: LaurentPoly, names: Sequence[str]) -> Iterator[LaurentPoly]:
    """``p`` under every permutation of the variables ``names``; others stay put."""
    names = list(names)
    for perm in itertools.permutations(names):
        sigma = {v: {v: 1} for v in p.vars}
        sigma.update({v: {w: 1} for v, w in zip(names, perm)})
        yield specialize(p, sigma, p.vars)


def equal_up_to_relabel(a: AssociateClass, b: AssociateClass) -> bool:
    """Associate equality after some permutation of component variables.

    Component numbering of a closed braid depends on the word, so two
    braids with isotopic closures can list the same components in a
    different order.
    """
    if a.poly.vars != b.poly.vars:
        return a == b
    return any(AssociateClass(q) == a for q in relabelings(b.poly, b.poly.vars))


def symmetrize(p: LaurentPoly | AssociateClass, squared: bool = True) -> LaurentPoly:
    """Symmetric representative, by default evaluated at squared variables.

    The unit-normalized polynomial has its exponents doubled and is then
    shifted so its support is centred at the origin.  With
    ``squared=False`` the exponents are halved again, which is possible
    only when every degree is even.  Raises :class:`AsymmetricSupport`
    when the result is not symmetric up to a global sign under inverting
    all variables, or when the unsquared form would need half-integer
    exponents.
    """
    if isinstance(p, AssociateClass):
        p = p.poly
    if p.is_zero():
        return p
    q = normalize_units(p)
    deg = q.max_exponents()
    centred = LaurentPoly(
        q.vars, {tuple(2 * x - d for x, d in zip(e, deg)): c for e, c in q.items()}
    )
    mirrored = centred.invert_vars(centred.vars)
    if mirrored != centred and mirrored != -centred:
        raise AsymmetricSupport(f"{p} has no symmetric associate")
    if squared:
        return centred
    if any(x % 2 for e in centred.terms for x in e):
        raise AsymmetricSupport(f"{p} is only symmetric after squaring its variables")
    return LaurentPoly(centred.vars, {tuple(x // 2 for x in e): c for e, c in centred.items()})


def symmetry_sign(p: LaurentPoly) -> int:
    """+1 or -1 with p(v^-1) = sign * p(v); 0 if neither holds."""
    mirrored = p.invert_vars(p.vars)
    if mirrored == p:
        return 1
    if mirrored == -p:
        return -1
    return 0


def hosokawa(delta: LaurentPoly | AssociateClass, k: int) -> AssociateClass:
    """Exact quotient of a one-variable Delta(t,...,t) by (t - 1)^(k - 2)."""
    if isinstance(delta, AssociateClass):
        delta = delta.poly
    if k < 2:
        raise ArityMismatch(f"Hosokawa polynomial needs k >= 2 components, got {k}")
    used = delta.used_vars()
    if len(used) > 1:
        raise ArityMismatch(f"expected a one-variable polynomial, got variables {used}")
    if delta.is_zero() or k == 2:
        return AssociateClass(delta)
    var = used[0] if used else (delta.vars[0] if delta.vars else "t")
    delta = delta.extend_vars((var,))
    divisor = (LaurentPoly.var(var) - 1) ** (k - 2)
    return AssociateClass(delta.exquo(divisor))


def evaluate_at_one(p: LaurentPoly) -> int:
    return sum(c for _, c in p.items())
