"""Reduction of degree g+p divisors to degree g, and class addition.

One pass of the loop:

1. H = Z(G)/F, the complement of (F, G) in the zeros of G;
2. I = G*M + H*N, the order-2g function through (H, G);
3. H~ = Z(I)/H, the inverse of (H, G) with respect to I;
4. fold in one more point: F = H~*(x - x0) and G = I*M + H~*N through it.

Steps 2 and 4 are solved as kernels of the "coefficients above the target
weight vanish" map, with M of degree g-1 and N one weight step below the
function being multiplied.
"""

from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Sequence, Tuple

from .curve import Curve, Point
from .divisor import (FRep, HRep, PointDivisor, canonical, eliminate_involution_triples, points_from_rep,
                      rep_from_points_g, rep_from_points_g1)
from .errors import (DegenerateClass, InvolutionCollision,
                     KernelDimensionError, OffCurvePoint, PointOnI, SpecialDivisor, TrigonalError)
from .linalg import nullspace
from .linfun import YLinFun, z_polynomial
from .poly import Poly, poly_gcd


@dataclass
class ReductionTrace:
    steps: List[dict] = dc_field(default_factory=list)
    events: List[dict] = dc_field(default_factory=list)

    def record(self, **entry):
        self.steps.append(entry)

    def flag(self, kind: str, **info):
        self.events.append({"event": kind, **info})

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, Poly):
                return v.to_strings()
            if isinstance(v, YLinFun):
                return v.to_json()
            if isinstance(v, Point):
                return v.to_json()
            return v

        return {"steps": [{k: enc(v) for k, v in sorted(s.items())} for s in self.steps],
                "events": self.events}


# -- the weight-truncated combination A*M + B*N ---------------------------------------


def _combination_kernel(curve: Curve, A: YLinFun, B: Poly, n_weight: int, target: int) -> List[YLinFun]:
    """Basis of {A*M + B*N : weight <= target} with deg M = g-1 and wgt N <= n_weight."""
    field = curve.field
    s = curve.s
    dM = curve.genus - 1
    dy = (n_weight - s) // 3 if n_weight >= s else -1
    dx = n_weight // 3
    cols = []  # (y-part, x-part) of each unknown's contribution
    for k in range(dM + 1):
        cols.append((A.ay.shift(k), A.ax.shift(k)))
    for k in range(dy + 1):
        cols.append((B.shift(k), Poly.zero(field)))
    for k in range(dx + 1):
        cols.append((Poly.zero(field), B.shift(k)))
    top_y = max((c[0].degree for c in cols), default=-1)
    top_x = max((c[1].degree for c in cols), default=-1)
    rows = []
    for i in range(top_y + 1):
        if s + 3 * i > target:
            rows.append([c[0].coeff(i) for c in cols])
    for i in range(top_x + 1):
        if 3 * i > target:
            rows.append([c[1].coeff(i) for c in cols])
    out = []
    for vec in nullspace(rows, len(cols), field):
        ay = Poly.zero(field)
        ax = Poly.zero(field)
        for v, (cy, cx) in zip(vec, cols):
            if v != 0:
                ay = ay + cy.scale_raw(v)
                ax = ax + cx.scale_raw(v)
        out.append(YLinFun(ay, ax, target))
    return out


def _as_vector(curve: Curve, fn: YLinFun, monomials) -> List:
    return [fn.ay.coeff(m.i) if m.j == 1 else fn.ax.coeff(m.i) for m in monomials]


# -- the four steps ------------------------------------------------------------------


def complement_g1(curve: Curve, rep: FRep) -> HRep:
    """Step 1: H = Z(G)/F, paired with the same G."""
    g = curve.genus
    z = z_polynomial(curve, rep.G)
    H = z.exact_div(rep.F).monic()
    if H.degree != g:
        raise DegenerateClass(f"complement has degree {H.degree} instead of {g}", cause="degree_drop_step1")
    return HRep(H, rep.G)


def minimal_function(curve: Curve, H: Poly, G: YLinFun) -> YLinFun:
    """Step 2: the order-2g function vanishing on the divisor of (H, G)."""
    g = curve.genus
    if H.degree != g:
        raise DegenerateClass(f"deg H = {H.degree} < g", cause="degree_drop_step1")
    kernel = _combination_kernel(curve, G, H, G.order - 3, 2 * g)
    if len(kernel) != 1:
        raise KernelDimensionError(f"step-2 kernel has dimension {len(kernel)}", dimension=len(kernel))
    I = kernel[0].normalized(curve)
    if I.is_zero() or I.weight(curve) != 2 * g:
        raise DegenerateClass("order-2g function has a weight drop", cause="weight_drop_step2")
    return I


def invert_g(curve: Curve, rep: HRep) -> Poly:
    """Step 3: H~ = Z(I)/H; (H~, I) is the inverse divisor."""
    g = curve.genus
    if rep.H.degree != g:
        raise DegenerateClass(f"deg H = {rep.H.degree} < g", cause="degree_drop")
    Ht = z_polynomial(curve, rep.I).exact_div(rep.H).monic()
    if Ht.degree != g:
        raise DegenerateClass(f"inverse has degree {Ht.degree} instead of {g}", cause="degree_drop_step3")
    return Ht


def invert(curve: Curve, rep: HRep) -> HRep:
    """Class negation: (H, I) -> (H~, I)."""
    return HRep(invert_g(curve, rep), rep.I)


def _multiplicity(poly: Poly, a) -> int:
    lin = Poly(poly.field, (poly.field.reduce(-a), 1), raw=True)
    e = 0
    while poly.degree >= 1 and poly.eval_raw(a) == 0:
        poly = poly.exact_div(lin)
        e += 1
    return e


def extend_with_point(curve: Curve, Ht: Poly, I: YLinFun, pt: Point) -> FRep:
    """Step 4: (F, G) for the divisor of (H~, I) plus ``pt``.

    When ``pt`` already occurs in that divisor with multiplicity e, G is
    required to vanish there to order e+1 instead.
    """
    g = curve.genus
    if not curve.on_curve(pt):
        raise OffCurvePoint(f"{pt!r} is not on the curve", point=pt.to_json())
    a, b = pt.x.value, pt.y.value
    e = _multiplicity(Ht, a)
    i_at = I.eval_raw(a, b)
    if e and i_at != 0:
        raise InvolutionCollision("new point shares its x-coordinate with a different point of the divisor",
                                  x=str(pt.x))
    if not e and i_at == 0:
        raise PointOnI("the new point is a zero of I outside the divisor", point=pt.to_json())
    if e and I.ay.eval_raw(a) == 0:
        raise InvolutionCollision("I has an involution factor at the new point", x=str(pt.x))
    kernel = _combination_kernel(curve, I, Ht, I.order - 3, 2 * g + 1)
    if len(kernel) != 2:
        raise KernelDimensionError(f"step-4 kernel has dimension {len(kernel)}", dimension=len(kernel))
    monos = curve.monomial_basis(g + 2)
    rows = curve.local_rows(pt, e + 1, monos)
    cond = [sum(rows[e][k] * v for k, v in enumerate(_as_vector(curve, fn, monos))) for fn in kernel]
    cond = [curve.field.reduce(c) for c in cond]
    if cond[0] == 0 and cond[1] == 0:
        raise KernelDimensionError("point condition is void", dimension=2)
    u, v = (cond[1], curve.field.reduce(-cond[0]))
    G = YLinFun(kernel[0].ay.scale_raw(u) + kernel[1].ay.scale_raw(v),
                kernel[0].ax.scale_raw(u) + kernel[1].ax.scale_raw(v), 2 * g + 1).normalized(curve)
    if G.weight(curve) != 2 * g + 1:
        raise PointOnI("no order-(2g+1) function through the extended divisor", point=pt.to_json())
    F = Ht * Poly(curve.field, (curve.field.reduce(-a), 1), raw=True)
    return FRep(F, G)


# -- the loop --------------------------------------------------------------------------


def _classify_error(err: Exception) -> str:
    if isinstance(err, DegenerateClass):
        return err.cause
    return {
        "InvolutionCollision": "involution_collision",
        "PointOnI": "point_on_I",
        "KernelDimensionError": "kernel_dimension",
        "NotDivisible": "not_divisible",
        "DerivativeRowSingular": "derivative_row_singular",
        "DegenerateConfiguration": "degenerate_configuration",
    }.get(type(err).__name__, "unclassified")


def _pick_initial(points: Sequence[Point], n: int) -> Optional[List[int]]:
    """Indices of the first ``n`` points (canonical order) with no involution pair among them."""
    chosen = []
    for idx, pt in enumerate(points):
        if all(points[j] == pt or points[j].x != pt.x for j in chosen):
            chosen.append(idx)
            if len(chosen) == n:
                return chosen
    return None


def _steps_1_to_3(curve: Curve, frep: FRep, trace: ReductionTrace) -> HRep:
    H = complement_g1(curve, frep).H
    if poly_gcd(frep.G.ay, H).degree > 0:
        raise DegenerateClass("complementary divisor contains an involution point", cause="involution_step1")
    I = minimal_function(curve, H, frep.G)
    Ht = invert_g(curve, HRep(H, I))
    if poly_gcd(I.ay, Ht).degree > 0:
        raise DegenerateClass("reduced divisor contains an involution pair", cause="involution_step3")
    trace.record(F=frep.F, G=frep.G, H=H, I=I, H_tilde=Ht)
    return HRep(Ht, I)


def _fold(curve: Curve, cur: HRep, rest: List[Point], tr: ReductionTrace) -> HRep:
    """Add the points of ``rest`` to the reduced ``cur`` one at a time (Step 4, then Steps 1-3)."""
    rest = list(rest)
    while rest:
        last_err = None
        for idx, pt in enumerate(rest):
            try:
                frep = extend_with_point(curve, cur.H, cur.I, pt)
            except (PointOnI, InvolutionCollision, KernelDimensionError) as err:
                tr.flag("deferred", point=pt.to_json(), cause=_classify_error(err))
                last_err = err
                continue
            del rest[idx]
            break
        else:
            raise last_err
        cur = _steps_1_to_3(curve, frep, tr)
    return cur


def _wrap(err: TrigonalError, tr: ReductionTrace) -> DegenerateClass:
    if isinstance(err, DegenerateClass):
        err.trace = tr
        return err
    return DegenerateClass(str(err), cause=_classify_error(err), trace=tr)


def reduce_divisor(curve: Curve, d, trace: bool = False):
    """Reduced (H, I) equivalent to the degree-(g+p) divisor ``d``.

    Returns the HRep, or (HRep, ReductionTrace) when ``trace`` is set.
    Degenerate configurations raise DegenerateClass with a ``cause`` label.
    """
    g = curve.genus
    tr = ReductionTrace()
    pts = canonical(d.points if isinstance(d, PointDivisor) else d)
    for pt in pts:
        if not curve.on_curve(pt):
            raise OffCurvePoint(f"{pt!r} is not on the curve", point=pt.to_json())
    kept = eliminate_involution_triples(curve, pts).points
    if len(kept) < len(pts):
        tr.flag("fibres_eliminated", count=(len(pts) - len(kept)) // 3)
    if len(kept) < g:
        raise SpecialDivisor(f"degree {len(kept)} < g after eliminating full fibres", degree=len(kept))

    try:
        if len(kept) == g:
            rep = rep_from_points_g(curve, kept)
            tr.flag("passthrough")
            return (rep, tr) if trace else rep
        first = _pick_initial(kept, g + 1)
        if first is None:
            raise DegenerateClass("no g+1 points free of involution pairs", cause="initial_selection")
        rest = [pt for k, pt in enumerate(kept) if k not in set(first)]
        frep = rep_from_points_g1(curve, [kept[k] for k in first])
        cur = _fold(curve, _steps_1_to_3(curve, frep, tr), rest, tr)
    except TrigonalError as err:
        raise _wrap(err, tr) from err
    return (cur, tr) if trace else cur


def rep_points(curve: Curve, rep: HRep) -> Tuple[Point, ...]:
    if rep.points is not None:
        return rep.points
    return points_from_rep(curve, rep).points


def add_divisors(curve: Curve, a: HRep, b: HRep, trace: bool = False):
    """Reduced representative of the class sum.

    With both point lists known the joint multiset is reduced, so the result
    does not depend on operand order.  Otherwise the points of one operand are
    folded into the other rep, and only that one operand has to split over
    the base field.
    """
    if a.points is not None and b.points is not None:
        return reduce_divisor(curve, a.points + b.points, trace=trace)
    if b.points is None and a.points is not None:
        a, b = b, a
    if b.points is None:
        try:
            pts = points_from_rep(curve, b).points
        except TrigonalError:
            a, b = b, a
            pts = points_from_rep(curve, b).points
    else:
        pts = b.points
    g = curve.genus
    if a.H.degree != g or poly_gcd(a.I.ay, a.H).degree > 0:
        raise DegenerateClass("operand is not a reduced rep of full degree", cause="degenerate_operand")
    tr = ReductionTrace()
    try:
        cur = _fold(curve, HRep(a.H, a.I), canonical(pts), tr)
    except TrigonalError as err:
        raise _wrap(err, tr) from err
    return (cur, tr) if trace else cur
