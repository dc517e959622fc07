"""Integer Laurent polynomials in named variables.

A :class:`LaurentPoly` is a finitely supported map from integer exponent
vectors to nonzero Python ints.  Values are immutable; arithmetic between
polynomials over different variable lists first aligns them to the union
of both lists (left operand's order first).

    >>> t = LaurentPoly.var("t")
    >>> (t - t**-1) * (t + t**-1)
    LaurentPoly('t^2 - t^-2')
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence

from .errors import MalformedInput, NotDivisible, VariableMismatch

Exponent = tuple[int, ...]


def _check_vars(names: Sequence[str]) -> tuple[str, ...]:
    names = tuple(names)
    if len(set(names)) != len(names):
        raise VariableMismatch(f"duplicate variable names in {names!r}")
    for name in names:
        if not isinstance(name, str) or not name:
            raise VariableMismatch(f"bad variable name {name!r}")
    return names


class LaurentPoly:
    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: Sequence[str] = (), terms: Mapping[Exponent, int] | None = None):
        self.vars = _check_vars(vars)
        n = len(self.vars)
        clean: dict[Exponent, int] = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise VariableMismatch(f"exponent {exp} does not match variables {self.vars}")
            if coef:
                clean[exp] = clean.get(exp, 0) + int(coef)
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Exponent, int]) -> LaurentPoly:
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.vars = vars
        p._terms = terms
        p._hash = None
        return p

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str] = ()) -> LaurentPoly:
        return cls(vars)

    @classmethod
    def const(cls, c: int, vars: Sequence[str] = ()) -> LaurentPoly:
        vars = _check_vars(vars)
        return cls._raw(vars, {(0,) * len(vars): int(c)} if c else {})

    @classmethod
    def var(cls, name: str, vars: Sequence[str] | None = None) -> LaurentPoly:
        vars = _check_vars(vars if vars is not None else (name,))
        if name not in vars:
            raise VariableMismatch(f"{name!r} not in {vars}")
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls._raw(vars, {exp: 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coef: int = 1, vars: Sequence[str] | None = None) -> LaurentPoly:
        vars = _check_vars(vars if vars is not None else tuple(exps))
        unknown = set(exps) - set(vars)
        if unknown:
            raise VariableMismatch(f"variables {sorted(unknown)} not in {vars}")
        exp = tuple(int(exps.get(v, 0)) for v in vars)
        return cls._raw(vars, {exp: int(coef)} if coef else {})

    # -- basic accessors ------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms in canonical (lexicographically descending) order."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def leading(self) -> tuple[Exponent, int]:
        exp = max(self._terms)
        return exp, self._terms[exp]

    def min_exponents(self) -> Exponent:
        n = len(self.vars)
        if not self._terms:
            return (0,) * n
        return tuple(min(e[i] for e in self._terms) for i in range(n))

    def max_exponents(self) -> Exponent:
        n = len(self.vars)
        if not self._terms:
            return (0,) * n
        return tuple(max(e[i] for e in self._terms) for i in range(n))

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self._terms))

    # -- variable alignment ---------------------------------------------

    def extend_vars(self, vars: Sequence[str]) -> LaurentPoly:
        """Re-express over ``vars``, which must contain every variable in use."""
        vars = _check_vars(vars)
        if vars == self.vars:
            return self
        index = {v: i for i, v in enumerate(vars)}
        for v in self.used_vars():
            if v not in index:
                raise VariableMismatch(f"cannot drop variable {v!r} in use")
        pos = [index.get(v) for v in self.vars]
        n = len(vars)
        terms = {}
        for exp, c in self._terms.items():
            new = [0] * n
            for i, e in enumerate(exp):
                if e:
                    new[pos[i]] = e
            terms[tuple(new)] = c
        return LaurentPoly._raw(vars, terms)

    def rename(self, mapping: Mapping[str, str]) -> LaurentPoly:
        return LaurentPoly._raw(_check_vars(mapping.get(v, v) for v in self.vars), dict(self._terms))

    def _align(self, other) -> tuple[LaurentPoly, LaurentPoly]:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(int(other), self.vars)
        if other.vars == self.vars:
            return self, other
        union = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.extend_vars(union), other.extend_vars(union)

    # -- ring operations ------------------------------------------------

    def __add__(self, other) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        a, b = self._align(other)
        terms = dict(a._terms)
        for exp, c in b._terms.items():
            s = terms.get(exp, 0) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return LaurentPoly._raw(a.vars, terms)

    def __radd__(self, other) -> LaurentPoly:
        return self + other

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw(self.vars, {})
            return LaurentPoly._raw(self.vars, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._align(other)
        terms: dict[Exponent, int] = {}
        bt = list(b._terms.items())
        for ea, ca in a._terms.items():
            for eb, cb in bt:
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return LaurentPoly._raw(a.vars, {e: c for e, c in terms.items() if c})

    def __rmul__(self, other) -> LaurentPoly:
        return self * other

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials are invertible in a Laurent ring")
            (exp, c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible(f"coefficient {c} is not a unit")
            return LaurentPoly._raw(self.vars, {tuple(e * k for e in exp): c ** (-k)})
        result = LaurentPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial with exponent vector ``exp``."""
        exp = tuple(exp)
        return LaurentPoly._raw(
            self.vars, {tuple(x + y for x, y in zip(e, exp)): c for e, c in self._terms.items()}
        )

    def invert_vars(self, names: Iterable[str]) -> LaurentPoly:
        """Substitute v -> v^-1 for every v in ``names``."""
        flip = [v in set(names) for v in self.vars]
        return LaurentPoly._raw(
            self.vars,
            {tuple(-x if f else x for x, f in zip(e, flip)): c for e, c in self._terms.items()},
        )

    def exquo(self, other: LaurentPoly | int) -> LaurentPoly:
        """Exact quotient; raises :class:`NotDivisible` when there is none."""
        a, b = self._align(other)
        return _exact_divide(a, b)

    # -- comparison -----------------------------------------------------

    def _key(self) -> frozenset:
        return frozenset(
            (frozenset((v, x) for v, x in zip(self.vars, e) if x), c) for e, c in self._terms.items()
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.vars == self.vars:
            return self._terms == other._terms
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    # -- output ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.items():
            mono = "*".join(
                (v if e == 1 else f"{v}^{e}") for v, e in zip(self.vars, exp) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.items()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> LaurentPoly:
        try:
            vars = [str(v) for v in data["vars"]]
            terms: dict[Exponent, int] = {}
            for t in data["terms"]:
                exp = tuple(int(x) for x in t["exp"])
                if exp in terms:
                    raise MalformedInput(f"repeated exponent {list(exp)}")
                terms[exp] = int(t["coef"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, VariableMismatch):
                raise
            raise MalformedInput(f"bad polynomial JSON: {exc}") from exc
        return cls(vars, terms)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(str(exc)) from exc
        return cls.from_dict(data)


def _exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if b.is_zero():
        raise NotDivisible("division by zero")
    if a.is_zero():
        return LaurentPoly._raw(a.vars, {})
    if b.is_monomial():
        (eb, cb), = b._terms.items()
        out = {}
        for e, c in a._terms.items():
            q, r = divmod(c, cb)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {cb}")
            out[tuple(x - y for x, y in zip(e, eb))] = q
        return LaurentPoly._raw(a.vars, out)
    # Any exact quotient has its exponents inside this box; a lex-leading
    # quotient term outside it proves non-divisibility and bounds the loop.
    lo = tuple(x - y for x, y in zip(a.min_exponents(), b.min_exponents()))
    hi = tuple(x - y for x, y in zip(a.max_exponents(), b.max_exponents()))
    lead_e, lead_c = b.leading()
    bt = list(b._terms.items())
    rem = dict(a._terms)
    quot: dict[Exponent, int] = {}
    while rem:
        e = max(rem)
        c = rem[e]
        qe = tuple(x - y for x, y in zip(e, lead_e))
        qc, r = divmod(c, lead_c)
        if r or any(q < l or q > h for q, l, h in zip(qe, lo, hi)):
            raise NotDivisible(f"{a} is not divisible by {b}")
        quot[qe] = qc
        for eb, cb in bt:
            k = tuple(x + y for x, y in zip(qe, eb))
            v = rem.get(k, 0) - qc * cb
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly._raw(a.vars, quot)


class AssociateClass:
    """A Laurent polynomial up to multiplication by a unit +-(monomial)."""

    __slots__ = ("poly",)

    def __init__(self, poly: LaurentPoly):
        self.poly = normalize_units(poly)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            other = AssociateClass(other)
        if not isinstance(other, AssociateClass):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    @property
    def vars(self) -> tuple[str, ...]:
        return self.poly.vars

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __repr__(self) -> str:
        return f"AssociateClass({str(self.poly)!r})"

    def __str__(self) -> str:
        return str(self.poly)


def normalize_units(p: LaurentPoly) -> LaurentPoly:
    """Canonical associate: every minimum exponent 0, lex-leading coefficient positive."""
    if p.is_zero():
        return p
    shifted = p.shift(tuple(-m for m in p.min_exponents()))
    if shifted.leading()[1] < 0:
        shifted = -shifted
    return shifted
