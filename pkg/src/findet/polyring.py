"""Sparse multivariate polynomials over an exact field.

Polynomials stand in for power-series germs: every power-series operation
(substitution in particular) takes an explicit truncation degree ``D`` and
works modulo the ``D``-th power of the maximal ideal.

Monomials are exponent tuples.  The fixed monomial order is total degree
first, then lexicographic on the exponent tuple; iteration, printing and
serialisation all follow it.
"""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .scalars import Field, FieldElem, FieldMismatchError

__all__ = [
    "Poly", "Monomial", "INFINITY", "monomial_key", "monomials_of_degree",
    "monomials_below", "ord", "partial", "truncate", "substitute",
    "div_by_monomial", "exact_div", "NotDivisibleError",
]

Monomial = tuple


class _Infinity:
    """Order of the zero series.  Deliberately not a number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class NotDivisibleError(ArithmeticError, ValueError):
    pass


def monomial_key(m: Monomial):
    return (sum(m), m)


def monomials_of_degree(s: int, d: int) -> list[Monomial]:
    """All exponent tuples of total degree ``d`` in ``s`` variables, in lex order."""
    out = []
    for combo in combinations_with_replacement(range(s), d):
        e = [0] * s
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort()
    return out


def monomials_below(s: int, D: int, start: int = 0) -> list[Monomial]:
    """Monomials of degree in ``[start, D)`` in the fixed monomial order."""
    out = []
    for d in range(start, D):
        out.extend(monomials_of_degree(s, d))
    return out


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables over ``field``.

    ``terms`` maps exponent tuples to nonzero raw field values.
    """

    __slots__ = ("field", "nvars", "_terms", "_hash")

    def __init__(self, field: Field, nvars: int, terms: Mapping | None = None, *, _clean: bool = False):
        self.field = field
        self.nvars = nvars
        self._hash = None
        if not terms:
            self._terms = {}
        elif _clean:
            self._terms = terms
        else:
            t = {}
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars or any(e < 0 for e in m):
                    raise ValueError(f"bad exponent vector {m} for {nvars} variables")
                c = field.convert(c)
                if c:
                    t[m] = field.reduce(t.get(m, 0) + c) if m in t else c
            self._terms = {m: c for m, c in t.items() if c}

    # constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "Poly":
        return cls(field, nvars)

    @classmethod
    def constant(cls, field: Field, nvars: int, c) -> "Poly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, field: Field, exps: Sequence[int], c=1) -> "Poly":
        return cls(field, len(exps), {tuple(exps): c})

    @classmethod
    def gens(cls, field: Field, nvars: int) -> list["Poly"]:
        """The coordinate functions x_1, ..., x_s."""
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls(field, nvars, {tuple(e): field.one}, _clean=True))
        return out

    # basic protocol ------------------------------------------------------

    @property
    def terms(self) -> dict:
        return self._terms

    def items(self) -> list[tuple[Monomial, object]]:
        """Terms sorted by the fixed monomial order."""
        return sorted(self._terms.items(), key=lambda kv: monomial_key(kv[0]))

    def coefficient(self, m: Sequence[int]) -> FieldElem:
        return FieldElem(self._terms.get(tuple(m), self.field.zero), self.field)

    def coeff(self, m: Sequence[int]):
        """Raw coefficient of the monomial ``m`` (zero if absent)."""
        return self._terms.get(tuple(m), self.field.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, FieldElem)) or hasattr(other, "denominator"):
            return self == Poly.constant(self.field, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def ord(self):
        return min((sum(m) for m in self._terms), default=INFINITY)

    def constant_term(self):
        return self._terms.get((0,) * self.nvars, self.field.zero)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    # arithmetic ----------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(self.field, self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self._terms)
        red = self.field.reduce
        for m, c in other._terms.items():
            v = red(t.get(m, 0) + c)
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Poly(self.field, self.nvars, t, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        red = self.field.reduce
        return Poly(self.field, self.nvars, {m: red(-c) for m, c in self._terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        c = self.field.convert(c)
        if not c:
            return Poly(self.field, self.nvars)
        red = self.field.reduce
        return Poly(self.field, self.nvars, {m: red(v * c) for m, v in self._terms.items()}, _clean=True)

    def mul_trunc(self, other: "Poly", D: int | None = None) -> "Poly":
        """Product, dropping every term of total degree >= ``D`` when given."""
        other = self._coerce(other)
        acc: dict = {}
        get = acc.get
        for m1, c1 in self._terms.items():
            d1 = sum(m1)
            for m2, c2 in other._terms.items():
                if D is not None and d1 + sum(m2) >= D:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = get(m, 0) + c1 * c2
        red = self.field.reduce
        t = {}
        for m, c in acc.items():
            c = red(c)
            if c:
                t[m] = c
        return Poly(self.field, self.nvars, t, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        return self.mul_trunc(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.constant(self.field, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mul_monomial(self, m: Sequence[int], c=None) -> "Poly":
        t = {tuple(a + b for a, b in zip(k, m)): v for k, v in self._terms.items()}
        p = Poly(self.field, self.nvars, t, _clean=True)
        return p if c is None else p.scale(c)

    # calculus and truncation ---------------------------------------------

    def partial(self, i: int) -> "Poly":
        """Formal partial derivative in the variable with 0-based index ``i``."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        red = self.field.reduce
        t = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                v = red(c * e)
                if v:
                    m2 = m[:i] + (e - 1,) + m[i + 1:]
                    t[m2] = v
        return Poly(self.field, self.nvars, t, _clean=True)

    def truncate(self, D: int) -> "Poly":
        """Terms of total degree strictly below ``D``."""
        if D < 0:
            raise ValueError("truncation degree must be >= 0")
        return Poly(self.field, self.nvars,
                    {m: c for m, c in self._terms.items() if sum(m) < D}, _clean=True)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.field, self.nvars,
                    {m: c for m, c in self._terms.items() if sum(m) == d}, _clean=True)

    def evaluate(self, point: Sequence):
        """Evaluate at a point of K^s; returns a raw field value."""
        f = self.field
        vals = [f.convert(v) for v in point]
        total = 0
        for m, c in self._terms.items():
            term = c
            for v, e in zip(vals, m):
                if e:
                    term = term * v ** e
            total += term
        return f.reduce(total)

    def substitute(self, phi: Sequence["Poly"], D: int | None) -> "Poly":
        """``f(phi_1, ..., phi_s)`` modulo terms of degree >= ``D``.

        Each ``phi_i`` must lie in the maximal ideal so the result is a
        well-defined germ; ``D=None`` keeps every term (exact polynomial
        composition).
        """
        if len(phi) != self.nvars:
            raise ValueError(f"need {self.nvars} substitutions, got {len(phi)}")
        if not phi:
            return self
        target = phi[0]
        for q in phi:
            target._check(q)
            if q.field != self.field:
                raise FieldMismatchError(f"{q.field} vs {self.field}")
            if q.constant_term():
                raise ValueError("substitution has a nonzero constant term (not in the maximal ideal)")
        out_nvars = target.nvars
        powers: list[list[Poly]] = [[Poly.constant(self.field, out_nvars, 1)] for _ in phi]

        def power(i: int, e: int) -> Poly:
            cache = powers[i]
            while len(cache) <= e:
                cache.append(cache[-1].mul_trunc(phi[i], D))
            return cache[e]

        acc: dict = {}
        for m, c in self._terms.items():
            # every phi_i has order >= 1, so this term has order >= deg(m)
            if D is not None and sum(m) >= D:
                continue
            term = Poly.constant(self.field, out_nvars, c)
            for i, e in enumerate(m):
                if e:
                    term = term.mul_trunc(power(i, e), D)
                    if not term:
                        break
            for k, v in term._terms.items():
                acc[k] = acc.get(k, 0) + v
        red = self.field.reduce
        t = {k: red(v) for k, v in acc.items()}
        return Poly(self.field, out_nvars, {k: v for k, v in t.items() if v}, _clean=True)

    def div_by_monomial(self, m: Sequence[int]) -> "Poly":
        m = tuple(m)
        if len(m) != self.nvars:
            raise ValueError("monomial arity mismatch")
        t = {}
        for k, c in self._terms.items():
            q = tuple(a - b for a, b in zip(k, m))
            if any(e < 0 for e in q):
                raise NotDivisibleError(f"term with exponents {k} is not divisible by {m}")
            t[q] = c
        return Poly(self.field, self.nvars, t, _clean=True)

    def leading(self):
        """Leading (monomial, coefficient) under the fixed order."""
        m = max(self._terms, key=monomial_key)
        return m, self._terms[m]

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient ``self / other``; raises if ``other`` does not divide ``self``."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        lm, lc = other.leading()
        lc_inv = self.field.inv(lc)
        rem = self
        quot: dict = {}
        red = self.field.reduce
        while rem:
            m, c = rem.leading()
            q = tuple(a - b for a, b in zip(m, lm))
            if any(e < 0 for e in q):
                raise NotDivisibleError("division leaves a nonzero remainder")
            qc = red(c * lc_inv)
            quot[q] = qc
            rem = rem - other.mul_monomial(q, qc)
        return Poly(self.field, self.nvars, quot, _clean=True)

    def map_coefficients(self, field: Field) -> "Poly":
        """Reinterpret coefficients in another field (e.g. reduce Q -> F_p)."""
        return Poly(field, self.nvars, {m: c for m, c in self._terms.items()})

    # serialisation -------------------------------------------------------

    def to_json(self) -> list:
        return [[self.field.value_to_json(c), list(m)] for m, c in self.items()]

    @classmethod
    def from_json(cls, obj, field: Field, nvars: int) -> "Poly":
        if not isinstance(obj, list):
            raise ValueError(f"polynomial must be a term list, got {obj!r}")
        acc: dict = {}
        for term in obj:
            if not (isinstance(term, list) and len(term) == 2 and isinstance(term[1], list)):
                raise ValueError(f"bad term {term!r}; expected [c, [e1, ..., es]]")
            c, e = term
            if any(not isinstance(x, int) or isinstance(x, bool) for x in e):
                raise ValueError(f"bad exponents {e!r}")
            m = tuple(e)
            acc[m] = field.reduce(acc.get(m, 0) + field.convert(c))
        return cls(field, nvars, acc)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return self.format()

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)] if self.nvars > 3 else ["x", "y", "z"][: self.nvars]
        parts = []
        for m, c in self.items():
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            cs = self.field.format(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)


# functional aliases ----------------------------------------------------------

def ord(f: Poly):
    return f.ord()


def partial(f: Poly, i: int) -> Poly:
    return f.partial(i)


def truncate(f: Poly, D: int) -> Poly:
    return f.truncate(D)


def substitute(f: Poly, phi: Sequence[Poly], D: int | None) -> Poly:
    return f.substitute(phi, D)


def div_by_monomial(f: Poly, m: Sequence[int]) -> Poly:
    return f.div_by_monomial(m)


def exact_div(f: Poly, g: Poly) -> Poly:
    return f.exact_div(g)


def linear_combination(polys: Iterable[Poly], coeffs: Iterable) -> Poly:
    polys = list(polys)
    out = Poly.zero(polys[0].field, polys[0].nvars)
    for p, c in zip(polys, coeffs):
        out = out + p.scale(c)
    return out
