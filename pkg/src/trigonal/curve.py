"""Trigonal (3,s) curves  -y^3 + y^2 T(x) + y Q(x) + P(x) = 0.

Two families: ``C1`` with s = 3m+1 (genus 3m) and ``C2`` with s = 3m+2
(genus 3m+1).  Coefficients are indexed by Sato weight: the coefficient of
y^j x^i carries weight 3s - s*j - 3*i, and only positive weights are allowed.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .errors import BadWeight, DerivativeRowSingular, FieldTooLarge, OffCurvePoint, RationalFieldUnsupported, SingularCurve
from .field import Field, FieldElement, PrimeField, field_from_json
from .poly import Poly, eval_all, poly_gcd, poly_roots_small_field

FAMILIES = ("C1", "C2")


class Monomial(NamedTuple):
    i: int  # power of x
    j: int  # power of y, 0..2
    weight: int


@dataclass(frozen=True)
class Point:
    """Affine point; the base point at infinity is never materialised."""

    x: FieldElement
    y: FieldElement

    def sort_key(self):
        return (self.x.sort_key(), self.y.sort_key())

    def to_json(self) -> List[str]:
        return [str(self.x), str(self.y)]

    def __repr__(self):
        return f"({self.x}, {self.y})"


def _ser_mul(a: Sequence, b: Sequence, n: int, red) -> List:
    out = [0] * n
    for i, u in enumerate(a[:n]):
        if u == 0:
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] += u * b[j]
    return [red(v) for v in out]


class Curve:
    def __init__(self, family: str, m: int, lambdas: Optional[Dict] = None, field: Field = None,
                 check: bool = True):
        if family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"m must be a positive integer, got {m!r}")
        if field is None:
            raise ValueError("a field is required")
        self.family = family
        self.m = m
        self.field = field
        self.s = 3 * m + 1 if family == "C1" else 3 * m + 2
        self.genus = 3 * m if family == "C1" else 3 * m + 1

        slots = self.admissible_weights()
        lam = {}
        for w, v in (lambdas or {}).items():
            w = int(w)
            if w not in slots:
                raise BadWeight(f"no coefficient of weight {w} on a ({3},{self.s}) curve", weight=w)
            lam[w] = field.parse(v)
        self.lambdas = {w: lam[w] for w in sorted(lam) if lam[w] != 0}

        parts = [[0] * (self.s + 1) for _ in range(3)]
        parts[0][self.s] = 1
        for w, v in self.lambdas.items():
            i, j = slots[w]
            parts[j][i] = v
        self.P = Poly(field, parts[0], raw=True)
        self.Q = Poly(field, parts[1], raw=True)
        self.T = Poly(field, parts[2], raw=True)

        self.nondegeneracy_certified = False
        if check:
            self.check_nondegenerate()

    # -- structure ------------------------------------------------------------

    def admissible_weights(self) -> Dict[int, Tuple[int, int]]:
        """Map weight -> (i, j) for every free coefficient y^j x^i."""
        out = {}
        for j in range(3):
            i = 0
            while True:
                w = 3 * self.s - self.s * j - 3 * i
                if w <= 0:
                    break
                out[w] = (i, j)
                i += 1
        return out

    def gap_sequence(self) -> List[int]:
        m = self.m
        if self.family == "C1":
            gaps = [3 * k - 2 for k in range(1, m + 1)] + [3 * k - 1 for k in range(1, 2 * m + 1)]
        else:
            gaps = [3 * k - 1 for k in range(1, m + 1)] + [3 * k - 2 for k in range(1, 2 * m + 2)]
        return sorted(gaps)

    def monomial_of_weight(self, w: int) -> Optional[Monomial]:
        for j in range(3):
            r = w - self.s * j
            if r >= 0 and r % 3 == 0:
                return Monomial(r // 3, j, w)
        return None

    def monomial_basis(self, count: int) -> List[Monomial]:
        """The first ``count`` monomials x^i y^j (j <= 2) by ascending Sato weight."""
        if count < 1:
            raise ValueError("count must be >= 1")
        out = []
        w = 0
        while len(out) < count:
            mono = self.monomial_of_weight(w)
            if mono is not None:
                out.append(mono)
            w += 1
        return out

    def monomials_up_to(self, weight: int) -> List[Monomial]:
        return [mono for w in range(weight + 1) if (mono := self.monomial_of_weight(w)) is not None]

    # -- evaluation -----------------------------------------------------------

    def f_raw(self, x, y):
        red = self.field.reduce
        return red(-y * y * y + y * y * self.T.eval_raw(x) + y * self.Q.eval_raw(x) + self.P.eval_raw(x))

    def fy_raw(self, x, y):
        red = self.field.reduce
        return red(-3 * y * y + 2 * y * self.T.eval_raw(x) + self.Q.eval_raw(x))

    def fx_raw(self, x, y):
        red = self.field.reduce
        return red(y * y * self.T.derivative().eval_raw(x) + y * self.Q.derivative().eval_raw(x)
                   + self.P.derivative().eval_raw(x))

    def eval_f(self, pt) -> FieldElement:
        x, y = self._coords(pt)
        return FieldElement(self.field, self.f_raw(x, y))

    def on_curve(self, pt) -> bool:
        x, y = self._coords(pt)
        return self.f_raw(x, y) == 0

    def _coords(self, pt):
        if isinstance(pt, Point):
            self.field.check(pt.x.field)
            return pt.x.value, pt.y.value
        x, y = pt
        return self.field.parse(x), self.field.parse(y)

    def point(self, x, y) -> Point:
        """Build a point, insisting that it lies on the curve."""
        xv, yv = self.field.parse(x), self.field.parse(y)
        if self.f_raw(xv, yv) != 0:
            raise OffCurvePoint(f"({x}, {y}) is not on the curve", point=[str(x), str(y)])
        return Point(FieldElement(self.field, xv), FieldElement(self.field, yv))

    def fiber_cubic(self, a) -> Poly:
        """f(a, y) as a polynomial in y."""
        a = self.field.parse(a)
        red = self.field.reduce
        return Poly(self.field, [self.P.eval_raw(a), self.Q.eval_raw(a), self.T.eval_raw(a), red(-1)], raw=True)

    def involution_fiber(self, a, candidates: Optional[Iterable] = None) -> List[Point]:
        """All points over x = a with multiplicity (roots of the cubic f(a, y) in y).

        Prime fields below 2**16 are scanned exhaustively; otherwise the caller
        supplies candidate y-values.
        """
        a_raw = self.field.parse(a)
        cubic = self.fiber_cubic(a_raw)
        ax = FieldElement(self.field, a_raw)
        if candidates is None:
            if not isinstance(self.field, PrimeField):
                raise RationalFieldUnsupported("fibres over Q need candidate y-values")
            if not self.field.is_small:
                raise FieldTooLarge("fibre scan refused for a large prime", p=self.field.p)
            return [Point(ax, y) for y in poly_roots_small_field(cubic)]
        out = []
        for cand in sorted({self.field.parse(c) for c in candidates}, key=self.field.sort_key):
            g = cubic
            lin = Poly(self.field, (self.field.reduce(-cand), 1), raw=True)
            while g.degree >= 1 and g.eval_raw(cand) == 0:
                g = g.exact_div(lin)
                out.append(Point(ax, FieldElement(self.field, cand)))
        return out

    def points(self) -> List[Point]:
        """Every affine point over a small prime field (distinct, sorted)."""
        if not isinstance(self.field, PrimeField) or not self.field.is_small:
            raise FieldTooLarge("point enumeration needs a prime field below 2**16")
        out = []
        for a in range(self.field.p):
            seen = []
            for pt in self.involution_fiber(a):
                if pt not in seen:
                    seen.append(pt)
            out.extend(seen)
        return out

    # -- nondegeneracy --------------------------------------------------------

    def singular_points(self) -> List[Point]:
        """Affine F_p-points where f, f_x and f_y vanish together (small prime fields)."""
        field = self.field
        p = field.p
        # repeated root in y  <=>  discriminant of the fibre cubic vanishes
        a = p - 1
        b = eval_all(self.T)
        c = eval_all(self.Q)
        d = eval_all(self.P)
        disc = (18 * a % p) * b % p * c % p * d % p
        disc = (disc - 4 * (b * b % p) * b % p * d) % p
        disc = (disc + (b * b % p) * (c * c % p)) % p
        disc = (disc - 4 * a * (c * c % p) % p * c) % p
        disc = (disc - 27 * (a * a % p) % p * (d * d % p)) % p
        out = []
        for x0 in np.nonzero(disc == 0)[0].tolist():
            cubic = self.fiber_cubic(x0)
            g = poly_gcd(cubic, cubic.derivative())
            if g.degree == 1:
                y0 = field.reduce(-g.c[0])
            elif g.degree == 2:
                y0 = field.div(-g.c[1], 2)
            else:
                continue
            if self.fx_raw(x0, y0) == 0:
                out.append(Point(FieldElement(field, x0), FieldElement(field, y0)))
        return out

    def check_nondegenerate(self) -> None:
        if isinstance(self.field, PrimeField) and self.field.is_small:
            bad = self.singular_points()
            if bad:
                raise SingularCurve(f"singular point {bad[0]!r}", points=[pt.to_json() for pt in bad])
            self.nondegeneracy_certified = True
        # otherwise smoothness is taken on trust and the flag stays False

    # -- local expansions -----------------------------------------------------

    def y_series(self, pt: Point, order: int) -> List:
        """Taylor coefficients of y along the curve at ``pt`` in t = x - x(pt), mod t^order."""
        field = self.field
        red = field.reduce
        a, b = pt.x.value, pt.y.value
        if order <= 1:
            return [b][:order]
        fy0 = self.fy_raw(a, b)
        if fy0 == 0:
            raise DerivativeRowSingular("x is not a local parameter here (f_y = 0)", point=pt.to_json())
        inv_fy = field.inv(fy0)
        Ps = list(self.P.taylor_shift(a).c)
        Qs = list(self.Q.taylor_shift(a).c)
        Ts = list(self.T.taylor_shift(a).c)
        y = [b] + [0] * (order - 1)
        for n in range(1, order):
            k = n + 1
            y2 = _ser_mul(y, y, k, red)
            y3 = _ser_mul(y2, y, k, red)
            val = _ser_mul(y2, Ts, k, red)
            qy = _ser_mul(y, Qs, k, red)
            e = red(-y3[n] + val[n] + qy[n] + (Ps[n] if n < len(Ps) else 0))
            y[n] = red(-e * inv_fy)
        return y

    def local_rows(self, pt: Point, mult: int, monomials: Sequence[Monomial]) -> List[List]:
        """``mult`` rows of Taylor coefficients (orders 0..mult-1) of each monomial at ``pt``.

        Row 0 is plain evaluation; row k is the k-th Hasse derivative along the
        curve with x as the local parameter.
        """
        red = self.field.reduce
        a = pt.x.value
        ys = self.y_series(pt, mult)
        xs = [a, 1][:mult] + [0] * max(0, mult - 2)
        max_i = max(mono.i for mono in monomials)
        max_j = max(mono.j for mono in monomials)
        xpow = [[1] + [0] * (mult - 1)]
        for _ in range(max_i):
            xpow.append(_ser_mul(xpow[-1], xs, mult, red))
        ypow = [[1] + [0] * (mult - 1)]
        for _ in range(max_j):
            ypow.append(_ser_mul(ypow[-1], ys, mult, red))
        cols = [_ser_mul(xpow[mono.i], ypow[mono.j], mult, red) for mono in monomials]
        return [[col[k] for col in cols] for k in range(mult)]

    # -- serialisation --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "m": self.m,
            "lambda": {str(w): self.field.format(v) for w, v in self.lambdas.items()},
            "field": self.field.to_json(),
        }

    @classmethod
    def from_json(cls, doc: dict, check: bool = True) -> "Curve":
        field = field_from_json(doc["field"])
        return cls(doc["family"], int(doc["m"]), doc.get("lambda", {}), field, check=check)

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return (self.family, self.m, self.field, self.lambdas) == (other.family, other.m, other.field, other.lambdas)

    def __hash__(self):
        return hash((self.family, self.m, self.field, tuple(self.lambdas.items())))

    def __repr__(self):
        return f"Curve({self.family}, m={self.m}, (3,{self.s}), g={self.genus}, over {self.field})"


def new_curve(family: str, m: int, lambda_map: Optional[Dict], field: Field, check: bool = True) -> Curve:
    return Curve(family, m, lambda_map, field, check=check)


def genus(c: Curve) -> int:
    return c.genus


def gap_sequence(c: Curve) -> List[int]:
    return c.gap_sequence()


def gaps_by_complement(n: int, s: int) -> List[int]:
    """Natural numbers not of the form a*n + b*s (a, b >= 0)."""
    bound = (n - 1) * (s - 1)
    reachable = {a * n + b * s for a in range(bound // n + 1) for b in range(bound // s + 1)}
    return [w for w in range(1, bound) if w not in reachable]


def monomial_basis(c: Curve, count: int) -> List[Monomial]:
    return c.monomial_basis(count)


def eval_f(c: Curve, pt) -> FieldElement:
    return c.eval_f(pt)


def on_curve(c: Curve, pt) -> bool:
    return c.on_curve(pt)


def involution_fiber(c: Curve, a, candidates: Optional[Iterable] = None) -> List[Point]:
    return c.involution_fiber(a, candidates)
