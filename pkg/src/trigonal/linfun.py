"""Rational functions on the curve that are linear in y.

A function of order 2g+p (p in {0, 1}) vanishing on g+p prescribed points
lives in the span of the first g+p+1 monomials, all of which have y-degree
at most one.  It is found as the one-dimensional kernel of the evaluation
matrix (the determinant construction, done by elimination); repeated points
contribute Taylor rows along the curve.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .curve import Curve, Monomial, Point
from .errors import InvolutionCollision, KernelDimensionError, NotDivisible, OffCurvePoint
from .field import FieldElement
from .linalg import nullspace
from .poly import Poly, poly_gcd, poly_invmod


@dataclass(frozen=True)
class YLinFun:
    """y*ay(x) + ax(x), meant to have Sato weight ``order``."""

    ay: Poly
    ax: Poly
    order: int

    @property
    def field(self):
        return self.ay.field

    def eval_raw(self, x, y):
        return self.field.reduce(y * self.ay.eval_raw(x) + self.ax.eval_raw(x))

    def __call__(self, pt: Point) -> FieldElement:
        return FieldElement(self.field, self.eval_raw(pt.x.value, pt.y.value))

    def is_zero(self) -> bool:
        return self.ay.is_zero() and self.ax.is_zero()

    def weight(self, curve: Curve) -> int:
        """Actual Sato weight (pole order at infinity); -1 for the zero function."""
        wy = curve.s + 3 * self.ay.degree if not self.ay.is_zero() else -1
        wx = 3 * self.ax.degree if not self.ax.is_zero() else -1
        return max(wy, wx)

    def is_degenerate(self, curve: Curve) -> bool:
        return self.weight(curve) < self.order

    def normalized(self, curve: Curve) -> "YLinFun":
        """Scale so the highest-weight nonzero coefficient is 1."""
        if self.is_zero():
            return self
        w = self.weight(curve)
        lead = self.ax.c[-1] if w % 3 == 0 else self.ay.c[-1]
        k = self.field.inv(lead)
        return YLinFun(self.ay.scale_raw(k), self.ax.scale_raw(k), self.order)

    def scaled(self, k) -> "YLinFun":
        return YLinFun(self.ay.scale(k), self.ax.scale(k), self.order)

    def same_up_to_scalar(self, other: "YLinFun", curve: Curve) -> bool:
        a, b = self.normalized(curve), other.normalized(curve)
        return a.ay == b.ay and a.ax == b.ax

    def to_json(self) -> dict:
        return {"ay": self.ay.to_strings(), "ax": self.ax.to_strings()}

    @classmethod
    def from_json(cls, field, doc: dict, order: int) -> "YLinFun":
        return cls(Poly(field, doc["ay"]), Poly(field, doc["ax"]), order)

    def __repr__(self):
        return f"YLinFun(y*({self.ay}) + ({self.ax}), order={self.order})"


@dataclass(frozen=True)
class CurveFunction:
    """General function sum_j y^j c_j(x) with j <= 2, for orders 2g+p with p >= 2."""

    parts: Tuple[Poly, Poly, Poly]
    order: int

    @property
    def field(self):
        return self.parts[0].field

    def eval_raw(self, x, y):
        c0, c1, c2 = (p.eval_raw(x) for p in self.parts)
        return self.field.reduce(c0 + y * (c1 + y * c2))

    def __call__(self, pt: Point) -> FieldElement:
        return FieldElement(self.field, self.eval_raw(pt.x.value, pt.y.value))

    def weight(self, curve: Curve) -> int:
        return max((3 * p.degree + curve.s * j for j, p in enumerate(self.parts) if not p.is_zero()), default=-1)

    def to_json(self) -> dict:
        return {"y0": self.parts[0].to_strings(), "y1": self.parts[1].to_strings(),
                "y2": self.parts[2].to_strings()}


def group_points(points: Sequence[Point]) -> List[Tuple[Point, int]]:
    """Distinct points with multiplicities, in canonical order."""
    counts = Counter(points)
    return sorted(counts.items(), key=lambda kv: kv[0].sort_key())


def vanishing_rows(curve: Curve, points: Sequence[Point], monomials: Sequence[Monomial]) -> List[List]:
    rows = []
    for pt, mult in group_points(points):
        if not curve.on_curve(pt):
            raise OffCurvePoint(f"{pt!r} is not on the curve", point=pt.to_json())
        rows.extend(curve.local_rows(pt, mult, monomials))
    return rows


def combine_monomials(curve: Curve, monomials: Sequence[Monomial], vec: Sequence, order: int):
    """Turn a coefficient vector over ``monomials`` into a function object."""
    field = curve.field
    parts = [[0] * (curve.s + order // 3 + 2) for _ in range(3)]
    for mono, v in zip(monomials, vec):
        parts[mono.j][mono.i] = v
    polys = [Poly(field, p, raw=True) for p in parts]
    if all(mono.j <= 1 for mono in monomials):
        return YLinFun(polys[1], polys[0], order)
    return CurveFunction(tuple(polys), order)


def build_function(curve: Curve, points: Sequence[Point]):
    """Function of order 2g+p vanishing on the g+p given points (multiplicities honoured).

    Returns a :class:`YLinFun` for p in {0, 1} and a :class:`CurveFunction`
    for larger p.  The result is canonical: its highest-weight coefficient is 1.
    """
    g = curve.genus
    n = len(points)
    if n < g:
        raise ValueError(f"need at least g = {g} points, got {n}")
    order = g + n
    monomials = curve.monomial_basis(n + 1)
    rows = vanishing_rows(curve, points, monomials)
    kernel = nullspace(rows, len(monomials), curve.field)
    if len(kernel) != 1:
        raise KernelDimensionError(
            f"expected a one-dimensional kernel, got dimension {len(kernel)}",
            dimension=len(kernel), points=[pt.to_json() for pt in points])
    fn = combine_monomials(curve, monomials, kernel[0], order)
    if isinstance(fn, YLinFun):
        return fn.normalized(curve)
    lead_w = fn.weight(curve)
    mono = curve.monomial_of_weight(lead_w)
    k = curve.field.inv(fn.parts[mono.j].c[mono.i])
    return CurveFunction(tuple(p.scale_raw(k) for p in fn.parts), order)


def evaluate(fn, pt: Point) -> FieldElement:
    return fn(pt)


def z_polynomial(curve: Curve, fn: YLinFun) -> Poly:
    """ay^3 f(x, -ax/ay) = ax^3 + ax^2 ay T - ax ay^2 Q + ay^3 P."""
    ay, ax = fn.ay, fn.ax
    ax2 = ax * ax
    ay2 = ay * ay
    return ax2 * ax + ax2 * ay * curve.T - ax * ay2 * curve.Q + ay2 * ay * curve.P


def detect_involution_factor(fn: YLinFun) -> Optional[Tuple[Poly, YLinFun]]:
    """Common factor of ay and ax, if any, with the deflated function.

    A nonconstant gcd is necessary for points in involution among the roots.
    When ay = 0 the whole of ax is returned as the factor.
    """
    d = poly_gcd(fn.ay, fn.ax)
    if d.degree < 1:
        return None
    return d, YLinFun(fn.ay.exact_div(d), fn.ax.exact_div(d), fn.order - 3 * d.degree)


def y_on_roots(fn: YLinFun, modulus: Poly) -> Poly:
    """The polynomial y(x) = -ax/ay reduced modulo ``modulus``.

    Raises InvolutionCollision when ay shares a root with the modulus.
    """
    try:
        inv = poly_invmod(fn.ay, modulus)
    except ZeroDivisionError:
        raise InvolutionCollision("ay vanishes at a root of the x-polynomial",
                                  gcd=poly_gcd(fn.ay, modulus).to_strings()) from None
    return (-(fn.ax % modulus) * inv) % modulus


def dependent_roots(curve: Curve, fn: YLinFun, known: Poly) -> Tuple[Poly, Callable]:
    """Split off the dependent roots: Hdep = Z(fn)/known (monic) and the rule y = -ax/ay."""
    z = z_polynomial(curve, fn)
    try:
        hdep = z.exact_div(known).monic()
    except NotDivisible:
        raise NotDivisible("known roots do not divide the Z-polynomial") from None
    if poly_gcd(fn.ay, hdep).degree > 0:
        raise InvolutionCollision("ay vanishes at a dependent root")
    field = curve.field

    def y_rule(x):
        xv = field.parse(x)
        return FieldElement(field, field.div(-fn.ax.eval_raw(xv), fn.ay.eval_raw(xv)))

    return hdep, y_rule
