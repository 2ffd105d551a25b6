"""Random points, divisors and curves for tests and the CLI's randomized inputs."""

import random
from typing import List, Optional, Sequence

from .curve import Curve, Point
from .errors import FieldTooLarge, RationalFieldUnsupported, SingularCurve
from .field import Field, PrimeField
from .poly import lagrange_interpolate, poly_roots_small_field


def random_point(curve: Curve, rng: random.Random) -> Point:
    """Uniform x, then a random root of the fibre cubic (small prime fields)."""
    field = curve.field
    if not isinstance(field, PrimeField):
        raise RationalFieldUnsupported("random points need a prime field")
    if not field.is_small:
        raise FieldTooLarge("random points need p < 2**16", p=field.p)
    while True:
        a = rng.randrange(field.p)
        roots = poly_roots_small_field(curve.fiber_cubic(a))
        if roots:
            return curve.point(a, rng.choice(roots).value)


def random_divisor(curve: Curve, n: int, rng: random.Random, distinct_x: bool = False) -> List[Point]:
    pts: List[Point] = []
    while len(pts) < n:
        pt = random_point(curve, rng)
        if distinct_x and any(q.x == pt.x for q in pts):
            continue
        pts.append(pt)
    return pts


def random_curve(family: str, m: int, field: PrimeField, rng: random.Random, tries: int = 100) -> Curve:
    """A nonsingular curve with random coefficients in every slot."""
    slots = sorted(Curve(family, m, {}, field, check=False).admissible_weights())
    for _ in range(tries):
        lam = {w: rng.randrange(field.p) for w in slots}
        try:
            return Curve(family, m, lam, field)
        except SingularCurve:
            continue
    raise SingularCurve("no nonsingular curve found")


def curve_through_points(family: str, m: int, field: Field, xs: Sequence, ys: Sequence,
                         lambdas: Optional[dict] = None) -> Curve:
    """A curve (not certified smooth) passing through the given (x, y) pairs.

    The free low-degree part of P is fitted by interpolation, so up to
    deg P points can be prescribed; other coefficients come from ``lambdas``.
    """
    base = Curve(family, m, {w: v for w, v in (lambdas or {}).items()}, field, check=False)
    slots = base.admissible_weights()
    xs = [field.parse(v) for v in xs]
    ys = [field.parse(v) for v in ys]
    if len(xs) > base.s:
        raise ValueError(f"at most {base.s} points can be interpolated")
    # residual r(x) = y^3 - y^2 T - y Q - P_known must be matched by the free part of P
    p_slots = sorted((i, w) for w, (i, j) in slots.items() if j == 0)[:len(xs)]
    lam = dict(base.lambdas)
    for _, w in p_slots:
        lam.pop(w, None)
    known = Curve(family, m, lam, field, check=False)
    resid = [field.reduce(-known.f_raw(x, y)) for x, y in zip(xs, ys)]
    fit = lagrange_interpolate(field, xs, resid)
    for i, w in p_slots:
        lam[w] = field.reduce(lam.get(w, 0) + fit.coeff(i))
    if fit.degree >= len(p_slots):
        raise ValueError("interpolation exceeded the free slots")
    return Curve(family, m, lam, field, check=False)


def random_rational_setup(family: str, m: int, n: int, rng: random.Random, field: Field, bound: int = 9):
    """A curve over Q through ``n`` points with small integer coordinates (distinct x)."""
    xs = rng.sample(range(-bound, bound + 1), n)
    ys = [rng.randint(-bound, bound) for _ in xs]
    slots = Curve(family, m, {}, field, check=False).admissible_weights()
    p_free = {w for w, (i, j) in slots.items() if j == 0 and i < n}
    lam = {w: rng.randint(-3, 3) for w in slots if w not in p_free}
    c = curve_through_points(family, m, field, xs, ys, lam)
    return c, [c.point(x, y) for x, y in zip(xs, ys)]
