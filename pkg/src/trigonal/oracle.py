"""Principality test by plain Riemann-Roch linear algebra.

D - N*inf is principal exactly when some function with pole order <= N at
infinity vanishes on D.  Such functions span the monomials of weight <= N, so
the test is a kernel computation.  Parts of D may be given as points (with
multiplicity, via Taylor rows) or as "schemes" (X(x), y0(x)): the zeros of
X with y = y0(x) mod X, which avoids ever extracting roots.

Nothing here imports the reduction engine.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from .curve import Curve, Monomial, Point
from .divisor import HRep, canonical
from .errors import DivisionByZero, FieldTooLarge, RationalFieldUnsupported, TrigonalError
from .field import PrimeField
from .linalg import nullspace
from .linfun import group_points
from .poly import Poly, poly_gcd, poly_invmod


@dataclass(frozen=True)
class Scheme:
    """Zeros of X(x) on the branch y = y0(x) mod X (X monic)."""

    X: Poly
    y0: Poly

    @property
    def degree(self) -> int:
        return self.X.degree


@dataclass(frozen=True)
class Witness:
    """A function sum_j y^j parts[j](x) found in the kernel."""

    parts: Tuple[Poly, Poly, Poly]
    weight: int

    def eval_raw(self, x, y):
        c0, c1, c2 = (p.eval_raw(x) for p in self.parts)
        return self.parts[0].field.reduce(c0 + y * (c1 + y * c2))

    def to_json(self) -> dict:
        return {"y0": self.parts[0].to_strings(), "y1": self.parts[1].to_strings(),
                "y2": self.parts[2].to_strings()}


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    kernel_dim: int
    witness: Optional[Witness] = None
    confirmed: bool = False

    def to_json(self) -> dict:
        out = {"equivalent": self.equivalent, "kernel_dim": self.kernel_dim, "confirmed": self.confirmed}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


# -- norms -----------------------------------------------------------------------------


def _det3(m) -> Poly:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def norm(curve: Curve, parts: Sequence[Poly]) -> Poly:
    """Determinant of multiplication by r0 + r1 y + r2 y^2 on k[x][y]/(f), basis 1, y, y^2."""
    field = curve.field
    zero, one = Poly.zero(field), Poly.one(field)
    # y acting on (1, y, y^2); y^3 = T y^2 + Q y + P
    Y = [[zero, zero, curve.P], [one, zero, curve.Q], [zero, one, curve.T]]

    def mat_mul(A, B):
        return [[sum((A[i][k] * B[k][j] for k in range(3)), zero) for j in range(3)] for i in range(3)]

    Y2 = mat_mul(Y, Y)
    r0, r1, r2 = (list(parts) + [zero] * 3)[:3]
    M = [[(r0 if i == j else zero) + r1 * Y[i][j] + r2 * Y2[i][j] for j in range(3)] for i in range(3)]
    return _det3(M)


# -- conditions ------------------------------------------------------------------------


def _multiplicity_split(X: Poly, a) -> Tuple[int, Poly]:
    lin = Poly(X.field, (X.field.reduce(-a), 1), raw=True)
    e = 0
    while X.degree >= 1 and X.eval_raw(a) == 0:
        X = X.exact_div(lin)
        e += 1
    return e, X


def _merge(curve: Curve, points: Sequence[Point], schemes: Sequence[Scheme]):
    """Move scheme multiplicity sitting on one of the given points into that point."""
    mult: Dict[Point, int] = dict(group_points(points))
    out = []
    for sch in schemes:
        X, y0 = sch.X, sch.y0
        for pt in list(mult):
            a = pt.x.value
            if X.eval_raw(a) == 0 and y0.eval_raw(a) == pt.y.value:
                e, X = _multiplicity_split(X, a)
                mult[pt] += e
                y0 = y0 % X if X.degree >= 1 else Poly.zero(curve.field)
        if X.degree >= 1:
            out.append(Scheme(X, y0))
    return sorted(mult.items(), key=lambda kv: kv[0].sort_key()), out


def _scheme_rows(curve: Curve, sch: Scheme, monomials: Sequence[Monomial]) -> List[List]:
    field = curve.field
    X, y0 = sch.X, sch.y0
    n = X.degree
    xp = [Poly.one(field) % X]
    yp = [Poly.one(field) % X]
    for _ in range(max(m.i for m in monomials)):
        xp.append((xp[-1] * Poly.x(field)) % X)
    for _ in range(max(m.j for m in monomials)):
        yp.append((yp[-1] * y0) % X)
    cols = [(xp[m.i] * yp[m.j]) % X for m in monomials]
    return [[c.coeff(k) for c in cols] for k in range(n)]


def _witness(curve: Curve, monomials, vec) -> Witness:
    field = curve.field
    top = max(m.i for m in monomials) + 1
    parts = [[0] * top for _ in range(3)]
    for mono, v in zip(monomials, vec):
        parts[mono.j][mono.i] = v
    polys = tuple(Poly(field, p, raw=True) for p in parts)
    weight = max((3 * p.degree + curve.s * j for j, p in enumerate(polys) if not p.is_zero()), default=-1)
    return Witness(polys, weight)


def is_principal(curve: Curve, points: Sequence[Point] = (), schemes: Sequence[Scheme] = ()) -> EquivalenceVerdict:
    """Is D - deg(D)*inf principal, for D = points + schemes?"""
    pts = canonical(points)
    for pt in pts:
        if not curve.on_curve(pt):
            raise ValueError(f"{pt!r} is not on the curve")
    N = len(pts) + sum(s.degree for s in schemes)
    if N == 0:
        return EquivalenceVerdict(True, 1, None, True)
    monomials = curve.monomials_up_to(N)
    merged_pts, merged_schemes = _merge(curve, pts, schemes)
    rows = []
    for pt, e in merged_pts:
        rows.extend(curve.local_rows(pt, e, monomials))
    for sch in merged_schemes:
        rows.extend(_scheme_rows(curve, sch, monomials))
    kernel = nullspace(rows, len(monomials), curve.field)
    if not kernel:
        return EquivalenceVerdict(False, 0)
    w = _witness(curve, monomials, kernel[0])
    # confirm: the witness has pole order N and its norm is exactly the x-polynomial of D
    target = Poly.from_roots(curve.field, [pt.x for pt in pts])
    for sch in schemes:
        target = target * sch.X
    confirmed = w.weight == N and norm(curve, w.parts).monic() == target
    return EquivalenceVerdict(confirmed, len(kernel), w, confirmed)


def inverse_scheme(curve: Curve, rep: HRep) -> Scheme:
    """The divisor cut out by I besides (H, I), as a scheme, computed from the norm of I."""
    nI = norm(curve, (rep.I.ax, rep.I.ay, Poly.zero(curve.field)))
    q, r = nI.divmod(rep.H)
    if not r.is_zero():
        raise TrigonalError("H does not divide the norm of I")
    X = q.monic()
    if X.degree < 1:
        return Scheme(X, Poly.zero(curve.field))
    try:
        inv = poly_invmod(rep.I.ay, X)
    except DivisionByZero:
        raise TrigonalError("ay is not invertible on the inverse divisor") from None
    return Scheme(X, (-(rep.I.ax % X) * inv) % X)


def check_reduction(curve: Curve, original: Sequence[Point], reduced: HRep) -> EquivalenceVerdict:
    """original - n*inf ~ reduced - g*inf, tested as principality of original + (inverse of reduced)."""
    return is_principal(curve, original, [inverse_scheme(curve, reduced)])


def equivalent_reps(curve: Curve, a: HRep, b: HRep) -> EquivalenceVerdict:
    """Class equality of two degree-g reps: a + (inverse of b) principal."""
    sa = Scheme(a.H, (-(a.I.ax % a.H) * poly_invmod(a.I.ay, a.H)) % a.H)
    return is_principal(curve, (), [sa, inverse_scheme(curve, b)])


# -- census ------------------------------------------------------------------------------


def strictly_nonspecial_multisets(points: Sequence[Point], size: int):
    """Multisets of ``size`` points in which no two distinct points share an x-coordinate."""
    for combo in combinations_with_replacement(range(len(points)), size):
        chosen = [points[k] for k in combo]
        ok = True
        for u in range(size):
            for v in range(u + 1, size):
                if chosen[u] != chosen[v] and chosen[u].x == chosen[v].x:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(chosen)


def count_strictly_nonspecial(points: Sequence[Point], size: int) -> int:
    """The same count by a generating function over x-fibres.

    A fibre with k points contributes 1 + k*(t + t^2 + ...) : either unused,
    or one of its points taken with some multiplicity.
    """
    fibres: Dict = {}
    for pt in points:
        fibres[pt.x] = fibres.get(pt.x, 0) + 1
    poly = [1] + [0] * size
    for k in fibres.values():
        factor = [1] + [k] * size
        new = [0] * (size + 1)
        for i, u in enumerate(poly):
            if u:
                for j in range(size + 1 - i):
                    new[i + j] += u * factor[j]
        poly = new
    return poly[size]


def _kernel_on(curve: Curve, points: Sequence[Point], weight: int) -> List[List]:
    monomials = curve.monomials_up_to(weight)
    rows = []
    for pt, e in group_points(points):
        rows.extend(curve.local_rows(pt, e, monomials))
    return [_witness(curve, monomials, v) for v in nullspace(rows, len(monomials), curve.field)]


def is_special_class(curve: Curve, points: Sequence[Point]) -> bool:
    """Does the class of D - n*inf lack a reduced representative of full degree g?

    With K ~ (2g-2)*inf this happens iff some nonzero function of pole order
    <= n+g-1 vanishes on D.
    """
    return bool(_kernel_on(curve, points, len(points) + curve.genus - 1))


def explain_degenerate(curve: Curve, points: Sequence[Point]) -> Optional[str]:
    """An independent reason why ``points`` cannot be reduced in (H, I) form, or None."""
    for pt, e in group_points(points):
        if e > 1 and curve.fy_raw(pt.x.value, pt.y.value) == 0:
            return "ramified_repeated_point"
    if is_special_class(curve, points):
        return "special_class"
    n = len(points)
    if n == curve.genus + 1:
        kernel = _kernel_on(curve, points, 2 * curve.genus + 1)
        if len(kernel) == 1:
            w = kernel[0]
            if poly_gcd(w.parts[1], w.parts[0]).degree > 0:
                return "involution_factor"
    return None


def _census_one(curve: Curve, divisor, reduce):
    try:
        rep = reduce(curve, divisor)
    except TrigonalError as err:
        return "degenerate", getattr(err, "cause", None) or err.code, explain_degenerate(curve, divisor)
    verdict = check_reduction(curve, divisor, rep)
    return ("passed" if verdict.equivalent else "failed"), None, None


def exhaustive_class_census(curve: Curve, reduce, jobs: int = 1) -> dict:
    """Reduce and verify every strictly non-special degree-(g+1) divisor over a tiny prime field.

    ``reduce`` is the reduction routine under test, passed in so that this
    module stays independent of it.
    """
    field = curve.field
    if not isinstance(field, PrimeField):
        raise RationalFieldUnsupported("the census needs a prime field")
    if field.p > 31 or curve.genus != 3:
        raise FieldTooLarge("the census is limited to genus 3 and p <= 31", p=field.p, genus=curve.genus)
    pts = curve.points()
    divisors = list(strictly_nonspecial_multisets(pts, curve.genus + 1))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_census_one, [curve] * len(divisors), divisors, [reduce] * len(divisors),
                                  chunksize=64))
    else:
        results = [_census_one(curve, d, reduce) for d in divisors]
    passed = degenerate = 0
    causes: Dict[str, int] = {}
    failed = []
    justified: Dict[str, int] = {}
    unexplained = []
    for d, (status, cause, reason) in zip(divisors, results):
        if status == "passed":
            passed += 1
        elif status == "degenerate":
            degenerate += 1
            causes[cause] = causes.get(cause, 0) + 1
            if reason is None:
                unexplained.append([pt.to_json() for pt in d])
            else:
                justified[reason] = justified.get(reason, 0) + 1
        else:
            failed.append([pt.to_json() for pt in d])
    return {
        "curve": curve.to_json(),
        "points": len(pts),
        "total": len(divisors),
        "expected_total": count_strictly_nonspecial(pts, curve.genus + 1),
        "passed": passed,
        "degenerate": degenerate,
        "degenerate_causes": dict(sorted(causes.items())),
        "degenerate_justified": dict(sorted(justified.items())),
        "degenerate_unexplained": unexplained,
        "failed": failed,
    }
