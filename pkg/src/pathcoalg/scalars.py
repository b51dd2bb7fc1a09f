"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values.  Prime field
residues are :class:`Residue` instances that refuse to mix with residues of a
different characteristic or with fractions.
"""

from __future__ import annotations

import re
from fractions import Fraction


class FieldMismatch(TypeError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Residue:
    """An element of GF(p), stored as the canonical representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            raise FieldMismatch(f"cannot combine GF({self.p}) with {type(other).__name__}")
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            raise FieldMismatch(f"cannot combine GF({self.p}) with {type(other).__name__}")
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            raise FieldMismatch(f"cannot combine GF({self.p}) with {type(other).__name__}")
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return Residue(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Residue(other, self.p)
        if not isinstance(other, Residue):
            raise FieldMismatch(f"cannot combine GF({self.p}) with {type(other).__name__}")
        self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Residue(other, self.p) / self

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Common interface of the two scalar fields."""

    name = "field"

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, c) -> str:
        return str(c)

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))


_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class Rationals(Field):
    name = "q"

    def __call__(self, x) -> Fraction:
        if isinstance(x, Residue):
            raise FieldMismatch("GF(p) residue used over the rationals")
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        m = _RATIONAL.match(text)
        if not m:
            raise ValueError(f"not a rational: {text!r}")
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den) if den else 1)

    def format(self, c) -> str:
        c = Fraction(c)
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    def __repr__(self):
        return "Rationals()"


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def name(self):
        return f"f{self.p}"

    def __call__(self, x) -> Residue:
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldMismatch(f"GF({x.p}) residue used over GF({self.p})")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return Residue(x.numerator, self.p) / Residue(x.denominator, self.p)
        return Residue(int(x), self.p)

    def parse(self, text: str) -> Residue:
        m = _RATIONAL.match(text)
        if not m or m.group(2) is not None:
            raise ValueError(f"coefficients over GF({self.p}) are integers: {text!r}")
        return Residue(int(m.group(1)), self.p)

    def elements(self):
        return [Residue(i, self.p) for i in range(self.p)]

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = Rationals()


def parse_field(spec: str) -> Field:
    """``q`` for the rationals, ``f<p>`` (e.g. ``f2``) for GF(p)."""
    spec = spec.strip().lower()
    if spec in ("q", "qq", "rational", "rationals"):
        return QQ
    m = re.fullmatch(r"f(\d+)", spec)
    if m:
        return PrimeField(int(m.group(1)))
    raise ValueError(f"unknown field {spec!r}; use q or f<p>")
