import random

import pytest

from helpers import full_fiber, involution_pair
from trigonal.divisor import (NONSPECIAL, SPECIAL, STRICTLY_NONSPECIAL, FRep, HRep, PointDivisor, classify,
                              eliminate_involution_triples, involution_pairs, is_full_fiber, points_from_rep,
                              rep_from_points_g, rep_from_points_g1, rep_is_consistent)
from trigonal.errors import DegenerateConfiguration, InvolutionCollision
from trigonal.poly import Poly
from trigonal.sampling import random_divisor


def test_point_divisor_is_canonical(c34):
    rng = random.Random(1)
    pts = random_divisor(c34, 5, rng)
    a = PointDivisor(c34, pts)
    b = PointDivisor(c34, list(reversed(pts)))
    assert a == b and a.degree == 5
    assert (a + b).degree == 10
    assert a.x_polynomial() == Poly.from_roots(c34.field, [pt.x for pt in pts])


def test_full_fiber_detection(census_curve):
    rng = random.Random(2)
    fib = full_fiber(census_curve, rng)
    assert is_full_fiber(census_curve, fib)
    assert not is_full_fiber(census_curve, [fib[0], fib[0], fib[1]])


def test_ramified_fiber_counts_with_multiplicity(census_curve):
    # points where the fibre cubic has a double root
    for pt in census_curve.points():
        if census_curve.fy_raw(pt.x.value, pt.y.value) == 0:
            others = [q for q in census_curve.points() if q.x == pt.x and q != pt]
            if others:
                trip = [pt, pt, others[0]]
                assert is_full_fiber(census_curve, trip)
                assert not is_full_fiber(census_curve, [pt, others[0], others[0]])
                return
    pytest.skip("no split ramified fibre on this curve")


def test_elimination_and_classification(c34):
    rng = random.Random(3)
    for _ in range(20):
        base = random_divisor(c34, 3, rng, distinct_x=True)
        fib = full_fiber(c34, rng)
        if any(pt.x == fib[0].x for pt in base):
            continue
        assert eliminate_involution_triples(c34, base + fib) == PointDivisor(c34, base)
        assert classify(c34, base) == STRICTLY_NONSPECIAL
        assert classify(c34, base + fib) == NONSPECIAL
        assert classify(c34, base[:2] + fib) == SPECIAL


def test_pairs_classify_as_nonspecial(c34):
    rng = random.Random(4)
    pair = involution_pair(c34, rng)
    extra = random_divisor(c34, 2, rng, distinct_x=True)
    d = pair + extra
    assert involution_pairs(d)
    assert classify(c34, d) == NONSPECIAL
    assert not involution_pairs(extra)


def test_rep_round_trip(c34_101):
    rng = random.Random(5)
    for _ in range(30):
        pts = random_divisor(c34_101, 3, rng, distinct_x=True)
        rep = rep_from_points_g(c34_101, pts)
        assert rep_is_consistent(c34_101, rep)
        back = points_from_rep(c34_101, HRep(rep.H, rep.I))
        assert back == PointDivisor(c34_101, pts)


def test_rep_g1_round_trip(c35):
    rng = random.Random(6)
    pts = random_divisor(c35, 5, rng, distinct_x=True)
    rep = rep_from_points_g1(c35, pts)
    assert isinstance(rep, FRep) and rep.F.degree == 5 and rep.G.order == 9
    assert rep_is_consistent(c35, rep)
    assert points_from_rep(c35, FRep(rep.F, rep.G)) == PointDivisor(c35, pts)


def test_rep_from_pair_rejected(c34):
    rng = random.Random(7)
    pts = involution_pair(c34, rng) + random_divisor(c34, 1, rng)
    if len(involution_pairs(pts)) == 0:
        pytest.skip("draw collapsed")
    with pytest.raises(InvolutionCollision):
        rep_from_points_g(c34, pts)


def test_rep_wrong_degree(c34):
    rng = random.Random(8)
    with pytest.raises(ValueError):
        rep_from_points_g(c34, random_divisor(c34, 4, rng))
    with pytest.raises(ValueError):
        rep_from_points_g1(c34, random_divisor(c34, 3, rng))


def test_non_split_support(census_curve):
    f = census_curve.field
    pts = census_curve.points()
    rep = rep_from_points_g(census_curve, _nonspecial(pts, 3))
    irreducible = Poly(f, [3, 0, 0, 1])  # x^3 + 3 has no root mod 7
    assert all(irreducible.eval_raw(a) != 0 for a in range(7))
    with pytest.raises(DegenerateConfiguration) as info:
        points_from_rep(census_curve, HRep(irreducible, rep.I))
    assert info.value.context["cause"] == "non_rational_support"


def _nonspecial(pts, n):
    out = []
    for pt in pts:
        if all(q.x != pt.x for q in out):
            out.append(pt)
        if len(out) == n:
            return out
    raise AssertionError


def test_json_round_trip(c34):
    rng = random.Random(9)
    rep = rep_from_points_g(c34, random_divisor(c34, 3, rng, distinct_x=True))
    assert HRep.from_json(c34, rep.to_json()) == rep
    frep = rep_from_points_g1(c34, random_divisor(c34, 4, rng, distinct_x=True))
    assert FRep.from_json(c34, frep.to_json()) == frep
    assert not rep.degenerate(c34)
