import ast
import random
from pathlib import Path

import pytest

from helpers import full_fiber
import trigonal.oracle as oracle_mod
from trigonal.divisor import HRep, rep_from_points_g
from trigonal.errors import FieldTooLarge
from trigonal.linfun import build_function, z_polynomial
from trigonal.oracle import (Scheme, check_reduction, count_strictly_nonspecial, equivalent_reps,
                             exhaustive_class_census, explain_degenerate, inverse_scheme, is_principal,
                             is_special_class, norm, strictly_nonspecial_multisets)
from trigonal.poly import Poly
from trigonal.reduction import reduce_divisor
from trigonal.sampling import random_divisor


def test_oracle_does_not_import_reduction():
    tree = ast.parse(Path(oracle_mod.__file__).read_text())
    names = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            names.add(node.module or "")
        elif isinstance(node, ast.Import):
            names.update(a.name for a in node.names)
    assert not any("reduction" in n for n in names)


def test_norm_matches_z(all_curves):
    rng = random.Random(41)
    for c in all_curves.values():
        fn = build_function(c, random_divisor(c, c.genus, rng, distinct_x=True))
        assert norm(c, (fn.ax, fn.ay)) == z_polynomial(c, fn)


def test_norm_of_x_and_y(c34):
    f = c34.field
    assert norm(c34, (Poly.x(f),)) == Poly.x(f) ** 3
    assert norm(c34, (Poly.zero(f), Poly.one(f))) == c34.P


def test_full_fibre_is_principal(c34):
    rng = random.Random(42)
    v = is_principal(c34, full_fiber(c34, rng))
    assert v.equivalent and v.confirmed and v.kernel_dim == 1
    assert v.witness.weight == 3


def test_generic_points_not_principal(c34):
    rng = random.Random(43)
    for n in (3, 4, 6):
        assert not is_principal(c34, random_divisor(c34, n, rng, distinct_x=True)).equivalent


def test_empty_divisor_principal(c34):
    assert is_principal(c34).equivalent


def test_divisor_of_function_is_principal(c35):
    rng = random.Random(44)
    rep = rep_from_points_g(c35, random_divisor(c35, 4, rng, distinct_x=True))
    v = is_principal(c35, rep.points, [inverse_scheme(c35, rep)])
    assert v.equivalent and v.confirmed


def test_negative_control(c34):
    """A reduced rep paired with an unrelated divisor must be rejected."""
    rng = random.Random(45)
    for _ in range(20):
        pts = random_divisor(c34, 4, rng)
        other = reduce_divisor(c34, random_divisor(c34, 4, rng))
        assert not check_reduction(c34, pts, other).equivalent


def test_equivalent_reps(c34):
    rng = random.Random(46)
    pts = random_divisor(c34, 5, rng)
    a = reduce_divisor(c34, pts)
    assert equivalent_reps(c34, a, a).equivalent
    b = rep_from_points_g(c34, random_divisor(c34, 3, rng, distinct_x=True))
    assert not equivalent_reps(c34, a, b).equivalent


def test_scheme_merges_with_point(c34):
    rng = random.Random(47)
    rep = rep_from_points_g(c34, random_divisor(c34, 3, rng, distinct_x=True))
    sch = Scheme(rep.H, (-(rep.I.ax % rep.H) * oracle_mod.poly_invmod(rep.I.ay, rep.H)) % rep.H)
    # points of rep given twice: once explicitly, once as a scheme -> a doubled divisor
    doubled = is_principal(c34, rep.points, [sch])
    twice = is_principal(c34, rep.points + rep.points)
    assert doubled.kernel_dim == twice.kernel_dim
    assert doubled.equivalent == twice.equivalent


def test_multiset_count_identity(census_curve):
    pts = census_curve.points()
    for size in (1, 2, 3, 4):
        assert sum(1 for _ in strictly_nonspecial_multisets(pts, size)) == count_strictly_nonspecial(pts, size)


def test_special_class_detection(c34):
    rng = random.Random(48)
    pts = random_divisor(c34, 4, rng, distinct_x=True)
    assert not is_special_class(c34, pts)
    fib = full_fiber(c34, rng)
    assert is_special_class(c34, fib + pts[:1])
    assert explain_degenerate(c34, fib + pts[:1]) == "special_class"


def test_census_rejects_big_field(c34):
    with pytest.raises(FieldTooLarge):
        exhaustive_class_census(c34, reduce_divisor)


def test_census_report(census_curve):
    rep = exhaustive_class_census(census_curve, reduce_divisor)
    assert rep["total"] == rep["expected_total"]
    assert rep["failed"] == [] and rep["degenerate_unexplained"] == []
    assert rep["passed"] + rep["degenerate"] == rep["total"]
    assert sum(rep["degenerate_causes"].values()) == rep["degenerate"]
    assert sum(rep["degenerate_justified"].values()) == rep["degenerate"]
