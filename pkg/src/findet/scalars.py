"""Exact scalar fields: the rationals and prime fields F_p.

Polynomials and matrices in this package store *raw* canonical values
(``Fraction`` for Q, ``int`` in ``[0, p)`` for F_p) and ask their
:class:`Field` to normalise them.  :class:`FieldElem` wraps a raw value
together with its field for callers who want checked arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "Field", "FieldElem", "FieldMismatchError", "QQ", "GF",
    "add", "sub", "mul", "neg", "inv", "characteristic", "is_prime",
]

# p * p must stay well inside a signed 64-bit word
MAX_PRIME = 2**31


class FieldMismatchError(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


Raw = Union[int, Fraction]


@dataclass(frozen=True)
class Field:
    """Q when ``p == 0``, otherwise the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0:
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
            if self.p >= MAX_PRIME:
                raise ValueError(f"modulus {self.p} exceeds 2^31")

    @property
    def kind(self) -> str:
        return "Q" if self.p == 0 else "Fp"

    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.p == 0 else 1

    # raw arithmetic -----------------------------------------------------

    def convert(self, value) -> Raw:
        """Coerce an int, Fraction, ``"n/d"`` string or FieldElem into a raw value."""
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatchError(f"{value.field} element used in {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot convert {value!r} into {self}")
        if self.p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        return value % self.p

    def reduce(self, value: Raw) -> Raw:
        """Canonicalise the result of plain ``+``/``*`` on raw values."""
        return value if self.p == 0 else value % self.p

    def inv(self, value: Raw) -> Raw:
        if not value:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / value
        return pow(value, -1, self.p)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.reduce(a * self.inv(b))

    def random_element(self, rng, nonzero: bool = False, bound: int = 9) -> Raw:
        """Uniform over F_p; small integers in ``[-bound, bound]`` over Q."""
        if self.p:
            lo = 1 if nonzero else 0
            return rng.randrange(lo, self.p)
        while True:
            v = rng.randint(-bound, bound)
            if v or not nonzero:
                return Fraction(v)

    def __call__(self, value) -> "FieldElem":
        return FieldElem(self.convert(value), self)

    # serialisation ------------------------------------------------------

    def to_json(self):
        return "Q" if self.p == 0 else {"Fp": self.p}

    @classmethod
    def from_json(cls, obj) -> "Field":
        if obj == "Q":
            return cls(0)
        if isinstance(obj, dict) and set(obj) == {"Fp"}:
            return cls(int(obj["Fp"]))
        raise ValueError(f"bad field spec {obj!r}; expected \"Q\" or {{\"Fp\": p}}")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse the command-line form: ``Q`` or ``Fp:101``."""
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls(0)
        if t.startswith("Fp:"):
            try:
                return cls(int(t[3:]))
            except ValueError as exc:
                raise ValueError(f"bad field {text!r}: {exc}") from None
        raise ValueError(f"bad field {text!r}; expected Q or Fp:<prime>")

    def format(self, value: Raw) -> str:
        if self.p:
            return str(value)
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"

    def value_to_json(self, value: Raw):
        return value if self.p else self.format(value)

    def __str__(self):
        return "Q" if self.p == 0 else f"F_{self.p}"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


@dataclass(frozen=True)
class FieldElem:
    value: Raw
    field: Field

    def _other(self, other) -> Raw:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.value
        return self.field.convert(other)

    def __add__(self, other):
        return FieldElem(self.field.reduce(self.value + self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field.reduce(self.value - self._other(other)), self.field)

    def __rsub__(self, other):
        return FieldElem(self.field.reduce(self._other(other) - self.value), self.field)

    def __mul__(self, other):
        return FieldElem(self.field.reduce(self.value * self._other(other)), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(self.field.reduce(-self.value), self.field)

    def __truediv__(self, other):
        return FieldElem(self.field.div(self.value, self._other(other)), self.field)

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field.inv(self.value), self.field)

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.format(self.value)


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def sub(a: FieldElem, b: FieldElem) -> FieldElem:
    return a - b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def neg(a: FieldElem) -> FieldElem:
    return -a


def inv(a: FieldElem) -> FieldElem:
    return a.inverse()


def characteristic(f: Field) -> int:
    return f.characteristic()
