"""Dense univariate polynomials over a :class:`~trigonal.field.Field`.

Coefficients are stored little-endian as canonical raw field values, with the
highest-index coefficient nonzero (the zero polynomial is the empty tuple).
``degree`` of the zero polynomial is -1.
"""

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .errors import DivisionByZero, FieldMismatch, FieldTooLarge, NotDivisible, RationalFieldUnsupported
from .field import Field, FieldElement, PrimeField


def _trim(c: List) -> Tuple:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


class Poly:
    __slots__ = ("field", "c")

    def __init__(self, field: Field, coeffs: Iterable = (), *, raw: bool = False):
        self.field = field
        if raw:
            self.c = _trim(list(coeffs))
        else:
            self.c = _trim([field.parse(v) for v in coeffs])

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, (), raw=True)

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (field.reduce(1),), raw=True)

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (field.reduce(0), field.reduce(1)), raw=True)

    @classmethod
    def constant(cls, field: Field, v) -> "Poly":
        return cls(field, (field.parse(v),), raw=True)

    @classmethod
    def monomial(cls, field: Field, n: int, coeff=1) -> "Poly":
        return cls(field, [field.reduce(0)] * n + [field.parse(coeff)], raw=True)

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable) -> "Poly":
        """Monic product of (x - r) over ``roots``."""
        out = cls.one(field)
        for r in roots:
            v = field.parse(r)
            out = out * cls(field, (field.reduce(-v), field.reduce(1)), raw=True)
        return out

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    @property
    def coeffs(self) -> List[FieldElement]:
        return [FieldElement(self.field, v) for v in self.c]

    def __getitem__(self, i: int) -> FieldElement:
        v = self.c[i] if 0 <= i < len(self.c) else self.field.reduce(0)
        return FieldElement(self.field, v)

    def coeff(self, i: int):
        """Raw coefficient of x**i (zero outside the stored range)."""
        return self.c[i] if 0 <= i < len(self.c) else 0

    @property
    def lc(self) -> FieldElement:
        if not self.c:
            return self.field.zero
        return FieldElement(self.field, self.c[-1])

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == 1

    def monic(self) -> "Poly":
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale_raw(self.field.inv(self.c[-1]))

    # -- arithmetic ---------------------------------------------------------

    def _other(self, other) -> "Poly":
        if isinstance(other, Poly):
            self.field.check(other.field)
            return other
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return Poly.constant(self.field, other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        o = self._other(other)
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        red = self.field.reduce
        out = list(a)
        for i, v in enumerate(b):
            out[i] = red(out[i] + v)
        return Poly(self.field, out, raw=True)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        red = self.field.reduce
        return Poly(self.field, [red(-v) for v in self.c], raw=True)

    def __sub__(self, other) -> "Poly":
        return self + (-self._other(other))

    def __rsub__(self, other) -> "Poly":
        return self._other(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return self.scale(other)
        o = self._other(other)
        a, b = self.c, o.c
        if not a or not b:
            return Poly.zero(self.field)
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                out[i + j] += u * v
        red = self.field.reduce
        return Poly(self.field, [red(v) for v in out], raw=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, k) -> "Poly":
        return self.scale_raw(self.field.parse(k))

    def scale_raw(self, k) -> "Poly":
        if k == 0:
            return Poly.zero(self.field)
        red = self.field.reduce
        return Poly(self.field, [red(v * k) for v in self.c], raw=True)

    def shift(self, n: int) -> "Poly":
        """Multiply by x**n."""
        if not self.c or n == 0:
            return self
        return Poly(self.field, [self.field.reduce(0)] * n + list(self.c), raw=True)

    def divmod(self, den: "Poly") -> Tuple["Poly", "Poly"]:
        den = self._other(den)
        if den.is_zero():
            raise DivisionByZero("polynomial division by zero")
        red = self.field.reduce
        rem = list(self.c)
        dd = den.degree
        if len(rem) - 1 < dd:
            return Poly.zero(self.field), self
        inv_lc = self.field.inv(den.c[-1])
        quot = [0] * (len(rem) - dd)
        dc = den.c
        for k in range(len(rem) - 1, dd - 1, -1):
            q = red(rem[k] * inv_lc)
            if q == 0:
                continue
            quot[k - dd] = q
            for j in range(dd + 1):
                rem[k - dd + j] = red(rem[k - dd + j] - q * dc[j])
        return Poly(self.field, quot, raw=True), Poly(self.field, rem[:dd], raw=True)

    def __divmod__(self, den):
        return self.divmod(den)

    def __floordiv__(self, den):
        return self.divmod(den)[0]

    def __mod__(self, den):
        return self.divmod(den)[1]

    def exact_div(self, den: "Poly") -> "Poly":
        q, r = self.divmod(den)
        if not r.is_zero():
            raise NotDivisible("nonzero remainder in exact division", remainder_degree=r.degree)
        return q

    def divides(self, other: "Poly") -> bool:
        return other.divmod(self)[1].is_zero()

    # -- evaluation and calculus -------------------------------------------

    def eval_raw(self, a):
        acc = 0
        red = self.field.reduce
        for v in reversed(self.c):
            acc = red(acc * a + v)
        return red(acc)

    def __call__(self, a) -> FieldElement:
        return FieldElement(self.field, self.eval_raw(self.field.parse(a)))

    def derivative(self) -> "Poly":
        red = self.field.reduce
        return Poly(self.field, [red(i * v) for i, v in enumerate(self.c)][1:], raw=True)

    def taylor_shift(self, a) -> "Poly":
        """Coefficients of f(a + t) as a polynomial in t."""
        a = self.field.parse(a)
        red = self.field.reduce
        out: List = []
        for v in reversed(self.c):
            # out = out * (t + a) + v
            new = [0] * (len(out) + 1)
            for i, u in enumerate(out):
                new[i + 1] += u
                new[i] += u * a
            new[0] += v
            out = [red(u) for u in new]
        return Poly(self.field, out, raw=True)

    def compose_mod(self, g: "Poly", modulus: "Poly") -> "Poly":
        """f(g(x)) mod ``modulus`` by Horner's rule."""
        out = Poly.zero(self.field)
        for v in reversed(self.c):
            out = (out * g + Poly(self.field, (v,), raw=True)) % modulus
        return out

    # -- comparison and display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.c))

    def to_strings(self) -> List[str]:
        return [self.field.format(v) for v in self.c]

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            v = self.c[i]
            if v == 0:
                continue
            s = self.field.format(v)
            terms.append(s if i == 0 else f"{s}*x^{i}" if i > 1 else f"{s}*x")
        return " + ".join(terms)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Return (d, s, t) with s*a + t*b = d and d monic."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(f), Poly.zero(f)
    t0, t1 = Poly.zero(f), Poly.one(f)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    k = f.inv(r0.c[-1])
    return r0.scale_raw(k), s0.scale_raw(k), t0.scale_raw(k)


def poly_invmod(a: Poly, m: Poly) -> Poly:
    d, s, _ = poly_xgcd(a % m, m)
    if d.degree != 0:
        raise DivisionByZero("polynomial is not invertible modulo the given modulus", gcd_degree=d.degree)
    return s % m


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_sub(a: Poly, b: Poly) -> Poly:
    return a - b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_scale(k, f: Poly) -> Poly:
    return f.scale(k)


def poly_divrem(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    return num.divmod(den)


def poly_exact_div(num: Poly, den: Poly) -> Poly:
    return num.exact_div(den)


def poly_eval(f: Poly, a) -> FieldElement:
    return f(a)


def _require_small_prime(field: Field) -> PrimeField:
    if not isinstance(field, PrimeField):
        raise RationalFieldUnsupported("exhaustive root finding needs a prime field")
    if not field.is_small:
        raise FieldTooLarge(f"exhaustive root finding refused for p = {field.p}", p=field.p)
    return field


def eval_all(f: Poly) -> np.ndarray:
    """Values of ``f`` at every residue 0..p-1 (vectorised Horner)."""
    field = _require_small_prime(f.field)
    p = field.p
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for v in reversed(f.c):
        acc = (acc * xs + v) % p
    return acc


def poly_roots_small_field(f: Poly) -> List[FieldElement]:
    """All roots of ``f`` in F_p with multiplicity, ascending (exhaustive scan + deflation)."""
    field = _require_small_prime(f.field)
    if f.is_zero():
        raise ValueError("the zero polynomial has every element as a root")
    candidates = np.nonzero(eval_all(f) == 0)[0]
    roots = []
    g = f
    for r in candidates.tolist():
        lin = Poly(field, (field.reduce(-r), 1), raw=True)
        while g.degree >= 1 and g.eval_raw(r) == 0:
            g = g.exact_div(lin)
            roots.append(FieldElement(field, r))
    return roots


def lagrange_interpolate(field: Field, xs: Sequence, ys: Sequence) -> Poly:
    """Unique polynomial of degree < len(xs) through the given nodes."""
    xs = [field.parse(v) for v in xs]
    ys = [field.parse(v) for v in ys]
    out = Poly.zero(field)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = Poly.from_roots(field, [xs[j] for j in range(len(xs)) if j != i])
        denom = basis.eval_raw(xi)
        out = out + basis.scale_raw(field.div(yi, denom))
    return out
