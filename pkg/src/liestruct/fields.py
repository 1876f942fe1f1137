"""Exact coefficient fields: the rationals and prime fields GF(p).

Scalars are plain Python values (``fractions.Fraction`` over the rationals,
``int`` residues in ``[0, p)`` over GF(p)); a ``Field`` object supplies the
arithmetic.  Everything is exact, hashable and immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]

# Prime moduli are capped so exhaustive finite-field enumeration stays sane.
MAX_PRIME = 1 << 16


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface for the two supported exact fields."""

    kind: str

    def zero(self) -> Scalar:
        raise NotImplementedError

    def one(self) -> Scalar:
        raise NotImplementedError

    def coerce(self, x) -> Scalar:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def characteristic(self) -> int:
        raise NotImplementedError

    def scalar_to_str(self, a) -> str:
        raise NotImplementedError

    def scalar_from_str(self, s: str) -> Scalar:
        raise NotImplementedError


class Rationals(Field):
    """The field of rational numbers with arbitrary-precision arithmetic."""

    kind = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise FieldError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def characteristic(self):
        return 0

    def scalar_to_str(self, a):
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def scalar_from_str(self, s):
        return Fraction(s)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(("field", "Q"))

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    """GF(p) for a prime p < 2**16; elements are residues in [0, p)."""

    kind = "GF"

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"modulus {p!r} is not prime")
        if p >= MAX_PRIME:
            raise FieldError(f"modulus {p} exceeds the supported bound {MAX_PRIME}")
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise FieldError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        raise FieldError(f"cannot coerce {x!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def characteristic(self):
        return self.p

    def elements(self):
        return range(self.p)

    def scalar_to_str(self, a):
        return str(a % self.p)

    def scalar_from_str(self, s):
        return self.coerce(Fraction(s))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("field", "GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_to_doc(field: Field) -> dict:
    if isinstance(field, Rationals):
        return {"kind": "Q"}
    if isinstance(field, PrimeField):
        return {"kind": "GF", "p": field.p}
    raise FieldError(f"unknown field {field!r}")


def field_from_doc(doc: dict) -> Field:
    kind = doc.get("kind")
    if kind == "Q":
        return QQ
    if kind == "GF":
        return GF(int(doc["p"]))
    raise FieldError(f"unknown field document {doc!r}")
