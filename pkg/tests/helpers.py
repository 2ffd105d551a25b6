"""Shared constructions for tests: full fibres, involution pairs, closed forms."""

import random

from trigonal.curve import Curve
from trigonal.linfun import YLinFun
from trigonal.poly import Poly

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


def full_fiber(curve: Curve, rng: random.Random):
    """Three distinct points over one x (a split fibre)."""
    while True:
        a = rng.randrange(curve.field.p)
        fib = curve.involution_fiber(a)
        if len(set(fib)) == 3:
            return fib


def involution_pair(curve: Curve, rng: random.Random):
    fib = full_fiber(curve, rng)
    i, j = rng.sample(range(3), 2)
    return [fib[i], fib[j]]


def closed_form_I_34(H: Poly, G: YLinFun) -> YLinFun:
    """Order-6 function through (H, G) on a (3,4) curve, explicit formula in h_k, gamma_k."""
    field = H.field
    h0, h3, h6 = H.coeff(3), H.coeff(2), H.coeff(1)
    g0, g3 = G.ay.coeff(1), G.ay.coeff(0)
    g1, g4 = G.ax.coeff(2), G.ax.coeff(1)
    M = Poly(field, [g0 * g0 * h6 - h3 * g0 * g3 + h0 * g3 * g3, h3 * g0 * g0 - h0 * g0 * g3, h0 * g0 * g0])
    # second term: -g0 (g0^2 y + g0 g1 x + g0 g4 - g1 g3) H
    ny = Poly(field, [-g0 * g0 * g0])
    nx = Poly(field, [-g0 * (g0 * g4 - g1 * g3), -g0 * g0 * g1])
    return YLinFun(G.ay * M + ny * H, G.ax * M + nx * H, 6)


def closed_form_G_34(Ht: Poly, I: YLinFun, pt) -> YLinFun:
    """Order-7 function through (H~, I) and one more point on a (3,4) curve."""
    field = Ht.field
    h0 = Ht.coeff(3)
    xb = pt.x.value
    i_at = I.eval_raw(pt.x.value, pt.y.value)
    c = field.div(h0 * xb * i_at - Ht.eval_raw(xb), i_at)
    M = Poly(field, [-c, h0])
    return YLinFun(I.ay * M, I.ax * M - Ht, 7)
