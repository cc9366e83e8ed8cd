"""Bernstein-style basis functions with a shift parameter.

The basis of degree n over [a, b] consists of the coefficient functions
attached to the control points by the identity-order evaluation tableau;
equivalently it satisfies a two-term recurrence that lowers the degree
while shifting both the argument and the left interval endpoint by h.
This module computes the basis by both routes, the closed forms for the
polynomial and h=0 cases, dual-functional control points, the shifted
product expansion (Marsden-style identity), partition-of-unity control
weights, and degree elevation.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import blossom as bl
from .curves import HGammaCurve, ensure_valid_params
from .errors import DegenerateConfiguration, UnsupportedElevation, UnsupportedFamily
from .families import FamilySpec, d_form, d_scale
from .tolerances import guard_threshold


@dataclass(frozen=True)
class BasisQuery:
    """A basis evaluation request: family, degree, shift, interval, x.

    x may lie anywhere; the curve-domain semantics only need x between
    the endpoints, but the formulas extend outside.
    """

    family: FamilySpec
    n: int
    h: float
    a: float
    b: float
    x: float

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateConfiguration("interval endpoints coincide")
        ensure_valid_params(self.family, self.n, self.h, self.a, self.b)


def basis_all(query, sigma=None):
    """All n+1 basis values at x, from one unit-control tableau pass.

    Placing the coordinate vectors at the base of the evaluation
    triangle makes the apex the vector of basis values; sigma selects
    the argument insertion order (identity unless given).
    """
    n = query.n
    args_order = sigma if sigma is not None else tuple(range(1, n + 1))
    args = [bl.OnCurve(query.x - (s - 1) * query.h) for s in args_order]
    levels = bl.run_tableau(
        query.family, n, query.h, query.a, query.b, np.eye(n + 1), args
    )
    return levels[-1][0]


def basis_recurrence(query, k):
    """B_k at x by the direct degree-lowering recurrence (memoized).

    Cross-check path for basis_all: each step interpolates two basis
    values of one degree lower, taken at x-h over [a-h, b].
    """
    n, h, b = query.n, query.h, query.b
    family = query.family
    memo = {}

    def den_checked(u, v):
        val = d_form(family, u, v)
        if abs(val) <= guard_threshold(d_scale(family, u, v)):
            raise DegenerateConfiguration(
                f"recurrence denominator d({u:.6g}, {v:.6g}) is numerically zero"
            )
        return val

    def rec(m, kk):
        if kk < 0 or kk > m:
            return 0.0
        if m == 0:
            return 1.0
        key = (m, kk)
        if key in memo:
            return memo[key]
        shift = (n - m) * h
        am = query.a - shift
        xm = query.x - shift
        total = 0.0
        lower_left = rec(m - 1, kk - 1)
        if lower_left != 0.0:
            u = am - (kk - 1) * h
            total += d_form(family, u, xm) / den_checked(u, b - (kk - 1) * h) * lower_left
        lower_right = rec(m - 1, kk)
        if lower_right != 0.0:
            u = am - kk * h
            total += d_form(family, xm, b - kk * h) / den_checked(u, b - kk * h) * lower_right
        memo[key] = total
        return total

    if not 0 <= k <= n:
        return 0.0
    return rec(n, k)


def poly_closed_form(n, h, a, b, x, k):
    """Polynomial-family closed form: binomial times shifted factorials."""
    den = 1.0
    for j in range(n):
        factor = b - a + j * h
        if factor == 0.0:
            raise DegenerateConfiguration(
                f"closed-form denominator b-a+{j}h vanishes"
            )
        den *= factor
    num = 1.0
    for j in range(k):
        num *= x - a + j * h
    for j in range(n - k):
        num *= b - x + j * h
    return math.comb(n, k) * num / den


def gamma_closed_form(family, n, a, b, x, k):
    """h=0 closed form: binom(n,k) (d(a,x)/d(a,b))^k (d(x,b)/d(a,b))^(n-k)."""
    dab = d_form(family, a, b)
    if abs(dab) <= guard_threshold(d_scale(family, a, b)):
        raise DegenerateConfiguration("d(a, b) is numerically zero")
    r1 = d_form(family, a, x) / dab
    r2 = d_form(family, x, b) / dab
    return math.comb(n, k) * r1**k * r2 ** (n - k)


def dual_nodes(n, h, a, b, k):
    """Blossom arguments whose value is the k-th control point."""
    return [bl.OnCurve(a - i * h) for i in range(k, n)] + [
        bl.OnCurve(b - i * h) for i in range(k)
    ]


def dual_control_points(blossom_eval, family, n, h, a, b):
    """Control points of a blossom over [a, b], via the dual functionals.

    blossom_eval takes a list of n blossom arguments and returns the
    blossom value; for a curve use
    lambda args: blossom_from_controls(curve, args).
    """
    return np.array([blossom_eval(dual_nodes(n, h, a, b, k)) for k in range(n + 1)])


def marsden_coefficients(family, n, h, a, b, x):
    """Coefficients expanding the shifted product of d(., x) in the basis.

    The k-th coefficient is prod_{j<k} d(b-jh, x) * prod_{j=k}^{n-1} d(a-jh, x).
    """
    coeffs = np.empty(n + 1)
    for k in range(n + 1):
        c = 1.0
        for j in range(k):
            c *= d_form(family, b - j * h, x)
        for j in range(k, n):
            c *= d_form(family, a - j * h, x)
        coeffs[k] = c
    return coeffs


def marsden_residual(family, n, h, a, b, t, x):
    """Residual of the shifted-product expansion identity at (t, x).

    |lhs - rhs| scaled by max(1, |lhs|, |rhs|): absolute below unit
    magnitude, relative above.
    """
    lhs = bl.d_pochhammer(family, t, x, n, h)
    basis = basis_all(BasisQuery(family=family, n=n, h=h, a=a, b=b, x=t))
    rhs = float(np.dot(marsden_coefficients(family, n, h, a, b, x), basis))
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def unity_nodes(n, h, a, b, k):
    """Dual-functional node parameters for the k-th control point."""
    return [a - (k + i - 1) * h for i in range(1, n - k + 1)] + [
        b - (i - n + k - 1) * h for i in range(n - k + 1, n + 1)
    ]


def unity_controls(family, n, h, a, b):
    """Control weights b_k with sum_k b_k B_k identically one.

    Polynomial: all ones (the constant's blossom is the product of the
    u-coordinates, each 1).  Trig and hyperbolic kinds (even n): the
    pairing-sum blossom of 1 evaluated at the dual-functional nodes.
    """
    kind = family.kind
    if kind == "polynomial":
        return np.ones(n + 1)
    if kind == "exp_weighted":
        raise UnsupportedFamily(
            "the constant function does not lie in exp-weighted spaces"
        )
    if n % 2 != 0:
        raise UnsupportedFamily(
            f"partition-of-unity weights need even degree for {kind}, got n={n}"
        )
    c = bl.unity_normalizer(family, n, h)
    return np.array(
        [c * bl.pairing_sum(family, unity_nodes(n, h, a, b, k)) for k in range(n + 1)]
    )


def degree_elevate(curve):
    """Re-express the curve with more control points, same point set.

    Polynomial families elevate by one degree for any h; the plain trig
    family elevates by two degrees at h=0 (the constant lies two degrees
    up).  Other combinations have no elevation formula here.
    """
    family, n = curve.family, curve.n
    a, b = curve.interval
    P = curve.controls
    if family.kind == "polynomial":
        Q = np.empty((n + 2, P.shape[1]))
        for j in range(n + 2):
            acc = np.zeros(P.shape[1])
            if 1 <= j <= n + 1:
                acc += (j / (n + 1)) * P[j - 1]
            if j <= n:
                acc += ((n + 1 - j) / (n + 1)) * P[j]
            Q[j] = acc
        return HGammaCurve(
            family=family, n=n + 1, h=curve.h, interval=curve.interval, controls=Q
        )
    if family.kind == "trig" and curve.h == 0:
        w = 2.0 * math.cos(b - a)
        denom = (n + 1) * (n + 2)
        Q = np.empty((n + 3, P.shape[1]))
        for j in range(n + 3):
            acc = np.zeros(P.shape[1])
            if j <= n:
                acc += (n + 2 - j) * (n + 1 - j) * P[j]
            if 1 <= j <= n + 1:
                acc += w * j * (n + 2 - j) * P[j - 1]
            if j >= 2:
                acc += j * (j - 1) * P[j - 2]
            Q[j] = acc / denom
        return HGammaCurve(
            family=family, n=n + 2, h=0.0, interval=curve.interval, controls=Q
        )
    raise UnsupportedElevation(
        f"degree elevation supports polynomial (any h) and trig at h=0, "
        f"not {family.kind} with h={curve.h}"
    )
