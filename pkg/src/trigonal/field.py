"""Exact field arithmetic: prime fields F_p (p > 3) and the rationals.

Fields are small immutable descriptors that know how to canonicalise a raw
Python number (``int`` residues for F_p, ``gmpy2.mpq`` for Q).  Polynomial and
matrix code works directly on raw values and calls :meth:`Field.reduce`, while
:class:`FieldElement` wraps a raw value for the public scalar API.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import gmpy2
from gmpy2 import mpq

from .errors import BadField, DivisionByZero, FieldMismatch, FieldTooLarge

#: exhaustive scans (roots, fibres, singular points) are allowed below this size
SMALL_FIELD_BOUND = 1 << 16


class Field:
    kind: str = ""

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    @property
    def is_small(self) -> bool:
        """True when exhaustive enumeration of the field is permitted."""
        return False

    def reduce(self, v):
        raise NotImplementedError

    def inv(self, v):
        raise NotImplementedError

    def parse(self, v):
        """Turn an int, decimal/fraction string or foreign number into a raw value."""
        if isinstance(v, FieldElement):
            self.check(v.field)
            return v.value
        if isinstance(v, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(v, str):
            text = v.strip()
            if "/" in text:
                num, den = text.split("/", 1)
                return self.div(self.reduce(int(num)), self.reduce(int(den)))
            return self.reduce(int(text))
        if isinstance(v, Fraction):
            return self.div(self.reduce(v.numerator), self.reduce(v.denominator))
        if isinstance(v, type(mpq())):
            return self.div(self.reduce(int(v.numerator)), self.reduce(int(v.denominator)))
        return self.reduce(int(v))

    def div(self, a, b):
        return self.reduce(a * self.inv(b))

    def format(self, v) -> str:
        return str(v)

    def sort_key(self, v):
        return v

    def check(self, other: "Field") -> None:
        if other is not self and other != self:
            raise FieldMismatch(f"operands live in {self} and {other}")

    def __call__(self, v) -> "FieldElement":
        return FieldElement(self, self.parse(v))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, self.reduce(0))

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self.reduce(1))

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class PrimeField(Field):
    p: int
    kind = "prime"

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p <= 3:
            raise BadField(f"characteristic must be a prime > 3, got {self.p!r}", p=self.p)
        if not gmpy2.is_prime(self.p):
            raise BadField(f"{self.p} is not prime", p=self.p)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_small(self) -> bool:
        return self.p < SMALL_FIELD_BOUND

    def reduce(self, v):
        return int(v) % self.p

    def inv(self, v):
        v %= self.p
        if v == 0:
            raise DivisionByZero("inverse of zero")
        return pow(v, -1, self.p)

    def elements(self) -> Iterator[int]:
        if not self.is_small:
            raise FieldTooLarge(f"refusing to enumerate F_{self.p}", p=self.p)
        return iter(range(self.p))

    def to_json(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class RationalField(Field):
    kind = "rational"

    @property
    def characteristic(self) -> int:
        return 0

    def reduce(self, v):
        return mpq(v)

    def inv(self, v):
        if v == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / mpq(v)

    def to_json(self) -> dict:
        return {"kind": "rational"}

    def __str__(self):
        return "Q"


QQ = RationalField()


def field_from_json(doc: dict) -> Field:
    kind = doc.get("kind")
    if kind == "prime":
        return PrimeField(int(doc["p"]))
    if kind == "rational":
        return QQ
    raise BadField(f"unknown field kind {kind!r}")


class FieldElement:
    """An immutable element of a :class:`Field` in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            self.field.check(other.field)
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.parse(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.reduce(self.value + o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.reduce(self.value - o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.reduce(o - self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.reduce(self.value * o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(o, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.reduce(-self.value))

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        if isinstance(self.field, PrimeField):
            return FieldElement(self.field, pow(self.value, n, self.field.p))
        return FieldElement(self.field, self.field.reduce(self.value ** n))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.field.reduce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def sort_key(self):
        return self.field.sort_key(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field}({self.field.format(self.value)})"


# Named operations; thin wrappers over the operators.

def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inv()
