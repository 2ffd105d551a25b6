"""Divisor representations: point multisets, (H, I) in degree g and (F, G) in degree g+1."""

from collections import Counter
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .curve import Curve, Point
from .errors import DegenerateConfiguration, InvolutionCollision
from .field import FieldElement
from .linfun import YLinFun, build_function, z_polynomial
from .poly import Poly, poly_roots_small_field

STRICTLY_NONSPECIAL = "strictly_nonspecial"
NONSPECIAL = "nonspecial"
SPECIAL = "special"


def canonical(points: Iterable[Point]) -> Tuple[Point, ...]:
    return tuple(sorted(points, key=Point.sort_key))


@dataclass(frozen=True)
class PointDivisor:
    """Effective affine divisor, stored as a canonically sorted multiset of points."""

    curve: Curve
    points: Tuple[Point, ...]

    def __init__(self, curve: Curve, points: Iterable[Point]):
        pts = canonical(points)
        for pt in pts:
            curve.field.check(pt.x.field)
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "points", pts)

    @property
    def degree(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __add__(self, other: "PointDivisor") -> "PointDivisor":
        return PointDivisor(self.curve, self.points + tuple(other))

    def x_polynomial(self) -> Poly:
        return Poly.from_roots(self.curve.field, [pt.x for pt in self.points])

    def to_json(self) -> List[List[str]]:
        return [pt.to_json() for pt in self.points]


def _pts(d) -> Tuple[Point, ...]:
    return d.points if isinstance(d, PointDivisor) else canonical(d)


@dataclass(frozen=True)
class HRep:
    """Degree-g divisor cut out by H(x) = 0, I(x, y) = 0."""

    H: Poly
    I: YLinFun
    points: Optional[Tuple[Point, ...]] = dc_field(default=None, compare=False, hash=False)

    def degenerate(self, curve: Curve) -> bool:
        return self.H.degree < curve.genus

    def to_json(self) -> dict:
        return {"H": self.H.to_strings(), "I": self.I.to_json()}

    @classmethod
    def from_json(cls, curve: Curve, doc: dict) -> "HRep":
        return cls(Poly(curve.field, doc["H"]).monic(), YLinFun.from_json(curve.field, doc["I"], 2 * curve.genus))


@dataclass(frozen=True)
class FRep:
    """Degree-(g+1) divisor cut out by F(x) = 0, G(x, y) = 0."""

    F: Poly
    G: YLinFun
    points: Optional[Tuple[Point, ...]] = dc_field(default=None, compare=False, hash=False)

    def to_json(self) -> dict:
        return {"F": self.F.to_strings(), "G": self.G.to_json()}

    @classmethod
    def from_json(cls, curve: Curve, doc: dict) -> "FRep":
        return cls(Poly(curve.field, doc["F"]).monic(),
                   YLinFun.from_json(curve.field, doc["G"], 2 * curve.genus + 1))


# -- involution structure -------------------------------------------------------


def is_full_fiber(curve: Curve, triple: Sequence[Point]) -> bool:
    """Three points over one x whose y-values are exactly the roots of f(x, .) (with multiplicity)."""
    a = triple[0].x
    if any(pt.x != a for pt in triple):
        return False
    prod = Poly.one(curve.field)
    for pt in triple:
        prod = prod * Poly(curve.field, (-pt.y, 1))
    return prod == -curve.fiber_cubic(a)


def eliminate_involution_triples(curve: Curve, d) -> PointDivisor:
    """Drop complete fibres (divisors of x - a) until none remain."""
    pts = list(_pts(d))
    changed = True
    while changed:
        changed = False
        by_x = {}
        for pt in pts:
            by_x.setdefault(pt.x, []).append(pt)
        for group in by_x.values():
            if len(group) < 3:
                continue
            for triple in combinations(group, 3):
                if is_full_fiber(curve, triple):
                    for pt in triple:
                        pts.remove(pt)
                    changed = True
                    break
            if changed:
                break
    return PointDivisor(curve, pts)


def involution_pairs(d) -> List[Tuple[Point, Point]]:
    """Pairs of distinct points sharing an x-coordinate."""
    distinct = sorted(set(_pts(d)), key=Point.sort_key)
    return [(p, q) for p, q in combinations(distinct, 2) if p.x == q.x]


def classify(curve: Curve, d) -> str:
    pts = _pts(d)
    reduced = eliminate_involution_triples(curve, pts)
    if reduced.degree < curve.genus:
        return SPECIAL
    if reduced.degree < len(pts) or involution_pairs(reduced):
        return NONSPECIAL
    return STRICTLY_NONSPECIAL


def is_strictly_nonspecial_set(points: Sequence[Point]) -> bool:
    return not involution_pairs(points)


# -- conversions ------------------------------------------------------------------


def rep_from_points_g(curve: Curve, d) -> HRep:
    pts = _pts(d)
    if len(pts) != curve.genus:
        raise ValueError(f"need exactly g = {curve.genus} points, got {len(pts)}")
    pairs = involution_pairs(pts)
    if pairs:
        raise InvolutionCollision("degree-g divisor contains an involution pair",
                                  pair=[pt.to_json() for pt in pairs[0]])
    H = Poly.from_roots(curve.field, [pt.x for pt in pts])
    return HRep(H, build_function(curve, pts), pts)


def rep_from_points_g1(curve: Curve, d) -> FRep:
    """(F, G) for g+1 points; involution pairs are allowed and show up as a factor of G."""
    pts = _pts(d)
    if len(pts) != curve.genus + 1:
        raise ValueError(f"need exactly g+1 = {curve.genus + 1} points, got {len(pts)}")
    F = Poly.from_roots(curve.field, [pt.x for pt in pts])
    return FRep(F, build_function(curve, pts), pts)


def points_on(curve: Curve, xpoly: Poly, fn: YLinFun) -> Tuple[Point, ...]:
    """Points (r, -ax(r)/ay(r)) over the roots r of ``xpoly`` (small prime fields)."""
    roots = poly_roots_small_field(xpoly)
    if len(roots) < xpoly.degree:
        raise DegenerateConfiguration("x-polynomial does not split over the base field",
                                      cause="non_rational_support", poly=xpoly.to_strings())
    field = curve.field
    out = []
    for r in roots:
        den = fn.ay.eval_raw(r.value)
        if den == 0:
            raise InvolutionCollision(f"ay vanishes at x = {r}", x=str(r))
        y = field.div(-fn.ax.eval_raw(r.value), den)
        out.append(Point(r, FieldElement(field, y)))
    return canonical(out)


def points_from_rep(curve: Curve, rep) -> PointDivisor:
    if isinstance(rep, HRep):
        return PointDivisor(curve, points_on(curve, rep.H, rep.I))
    return PointDivisor(curve, points_on(curve, rep.F, rep.G))


def rep_is_consistent(curve: Curve, rep) -> bool:
    """The x-polynomial divides the Z-polynomial of the function."""
    xpoly, fn = (rep.H, rep.I) if isinstance(rep, HRep) else (rep.F, rep.G)
    return xpoly.divides(z_polynomial(curve, fn))
