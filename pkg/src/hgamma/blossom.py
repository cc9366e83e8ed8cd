"""The blossom of the shifted-argument basis and its evaluation tableaus.

For a degree-n member G of the space spanned by products of gamma1 and
gamma2, the blossom g((u1,v1),...,(un,vn); h) is the unique symmetric
multilinear form that reduces to G(t) when the arguments are the shifted
curve points Gamma(t), Gamma(t-h), ..., Gamma(t-(n-1)h).

This module provides the basis expansion G_{n,k}, elementary-symmetric
blossom evaluation from coefficients, the triangular tableau that computes
blossom values from control points, perfect-matching enumeration, and the
pairing-sum normalizer behind the constant function's blossom.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ArityMismatch,
    DegenerateConfiguration,
    OddArity,
    UnityUndefined,
    UnsupportedFamily,
)
from .families import (
    d_form,
    d_form_pair,
    d_scale,
    eval_gamma,
    translation_matrix,
)
from .tolerances import guard_threshold


@dataclass(frozen=True)
class OnCurve:
    """Blossom argument Gamma(t) for a parameter value t."""

    t: float


@dataclass(frozen=True)
class Raw:
    """Blossom argument as an explicit pair (u, v), not on the curve."""

    u: float
    v: float


def as_pair(family, arg):
    """Resolve an argument to its (u, v) value pair."""
    if isinstance(arg, OnCurve):
        return eval_gamma(family, arg.t)
    if isinstance(arg, Raw):
        return (arg.u, arg.v)
    u, v = arg
    return (float(u), float(v))


def diagonal_args(t, n, h):
    """The shifted diagonal (Gamma(t), Gamma(t-h), ..., Gamma(t-(n-1)h))."""
    return [OnCurve(t - j * h) for j in range(n)]


@dataclass(frozen=True)
class HomogCoeffs:
    """Coefficients of a degree-n homogeneous form in (gamma1, gamma2).

    Index j holds the coefficient of gamma1^j gamma2^(n-j).
    """

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient vector must have degree+1 entries")
        if not all(math.isfinite(c) for c in self.coeffs):
            raise ValueError("coefficients must be finite")


def evaluate_homog(family, hc, t):
    """Evaluate a homogeneous form at t: sum_j c_j gamma1(t)^j gamma2(t)^(n-j)."""
    g1, g2 = eval_gamma(family, t)
    n = hc.degree
    return sum(hc.coeffs[j] * g1**j * g2 ** (n - j) for j in range(n + 1))


@dataclass(frozen=True)
class GnkMatrix:
    """Expansions of all shifted basis functions of one degree.

    rows[k] is the homogeneous expansion of the k-th basis function,
    the one with k gamma1 factors in each of its subset products.
    """

    n: int
    h: float
    rows: tuple

    def as_array(self):
        return np.array([r.coeffs for r in self.rows])

    def determinant(self):
        return float(np.linalg.det(self.as_array()))


def d_pochhammer(family, t, x, n, h):
    """The n-fold shifted product d(t, x) d(t-h, x) ... d(t-(n-1)h, x)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    prod = 1.0
    for j in range(n):
        prod *= d_form(family, t - j * h, x)
    return prod


def gnk_expand(family, n, h):
    """Expand all G_{n,k}(t; h) into homogeneous coefficients at once.

    Works with the generating product over the shifted factors

        prod_{j=0}^{n-1} (y * l1_j + l2_j),

    where (l1_j, l2_j) are the rows of C(h)^j as linear forms in
    (gamma1(t), gamma2(t)); the coefficient of y^k is the expansion of
    the k-th basis function.  Cost O(n^3); no 2^n subset enumeration.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    C = translation_matrix(family, h)
    # table[k][j]: coeff of y^k gamma1^j gamma2^(m-j) after m factors
    table = np.zeros((n + 1, n + 1))
    table[0][0] = 1.0
    Cj = np.eye(2)
    for m in range(n):
        l1, l2 = Cj[0], Cj[1]
        nxt = np.zeros_like(table)
        # multiply by l2 (no y), then by y*l1
        nxt[:, 1:] += table[:, :-1] * l2[0]
        nxt[:, :-1] += table[:, :-1] * l2[1]
        nxt[1:, 1:] += table[:-1, :-1] * l1[0]
        nxt[1:, :-1] += table[:-1, :-1] * l1[1]
        table = nxt
        Cj = Cj @ C
    rows = tuple(
        HomogCoeffs(degree=n, coeffs=tuple(float(c) for c in table[k]))
        for k in range(n + 1)
    )
    return GnkMatrix(n=n, h=h, rows=rows)


def symmetric_blossom(coeffs, args, family=None):
    """Evaluate sum_k c_k s_{n,k}(args) for the elementary symmetric forms.

    s_{n,k} sums, over all k-subsets, the product of the chosen u's and
    the remaining v's.  Evaluated as the generating product
    prod_j (y u_j + v_j) whose y^k coefficient is s_{n,k}; O(n^2).
    OnCurve arguments need `family` to resolve.
    """
    n = len(args)
    if len(coeffs) != n + 1:
        raise ArityMismatch(
            f"got {len(coeffs)} coefficients for {n} arguments (need {n + 1})"
        )
    elem = np.zeros(n + 1)
    elem[0] = 1.0
    for m, arg in enumerate(args):
        if isinstance(arg, OnCurve) and family is None:
            raise ValueError("OnCurve arguments require a family")
        u, v = as_pair(family, arg)
        nxt = np.zeros_like(elem)
        nxt[: m + 1] += v * elem[: m + 1]
        nxt[1 : m + 2] += u * elem[: m + 1]
        elem = nxt
    return float(np.dot(np.asarray(coeffs, dtype=float), elem))


def _num_left(family, arg, point):
    """d(arg, point) with arg a blossom argument."""
    if isinstance(arg, OnCurve):
        return d_form(family, arg.t, point)
    u, v = as_pair(family, arg)
    return d_form_pair(family, (u, v), point)


def _num_right(family, point, arg):
    """d(point, arg) with arg a blossom argument."""
    if isinstance(arg, OnCurve):
        return d_form(family, point, arg.t)
    u, v = as_pair(family, arg)
    return -d_form_pair(family, (u, v), point)


def run_tableau(family, n, h, a, b, base, args):
    """Run the triangular recursion from base values and n arguments.

    base is an array of n+1 values (scalars or m-vectors) occupying the
    special blossom slots; args[k] is inserted at level k+1.  Returns the
    list of levels; the apex levels[n][0] is the blossom at args.

    Raises DegenerateConfiguration when a denominator d(a-(i+k)h, b-ih)
    falls below the guard threshold.
    """
    if len(args) != n:
        raise ArityMismatch(f"expected {n} blossom arguments, got {len(args)}")
    level = np.array(base, dtype=float)
    if len(level) != n + 1:
        raise ArityMismatch(f"expected {n + 1} base values, got {len(level)}")
    levels = [level]
    for k in range(n):
        arg = args[k]
        nxt = []
        for i in range(n - k):
            ua = a - (i + k) * h
            ub = b - i * h
            den = d_form(family, ua, ub)
            if abs(den) <= guard_threshold(d_scale(family, ua, ub)):
                raise DegenerateConfiguration(
                    f"d(a-{i + k}h, b-{i}h) = {den:.3e} is numerically zero"
                )
            w0 = _num_left(family, arg, ub)
            w1 = _num_right(family, ua, arg)
            nxt.append((w0 * level[i] + w1 * level[i + 1]) / den)
        level = np.array(nxt)
        levels.append(level)
    return levels


def blossom_from_controls(curve, args):
    """Blossom value of a control-point curve at arbitrary arguments.

    The control points are the special blossom values at interleaved
    shifted endpoints, so the tableau transports them to g(args; h).
    """
    if len(args) != curve.n:
        raise ArityMismatch(
            f"curve has degree {curve.n} but got {len(args)} arguments"
        )
    a, b = curve.interval
    levels = run_tableau(
        curve.family, curve.n, curve.h, a, b, curve.controls, list(args)
    )
    return levels[-1][0]


def blossom_diagonal_check(curve, t):
    """Sup-norm residual of the diagonal property at t.

    The blossom at (Gamma(t), ..., Gamma(t-(n-1)h)) must equal the curve
    point at t.
    """
    via_blossom = blossom_from_controls(curve, diagonal_args(t, curve.n, curve.h))
    direct = curve.eval(t)
    return float(np.max(np.abs(np.atleast_1d(via_blossom - direct))))


def pairings(n):
    """All perfect matchings of {1, ..., n}, n even.

    Deterministic order: the smallest free index is paired first, with
    partners ascending.  Each matching is a list of (i, j) tuples, i < j.
    """
    if n % 2 != 0:
        raise OddArity(f"pairings need an even index count, got {n}")
    if n > 12:
        raise ValueError("pairings limited to n <= 12")

    def rec(free):
        if not free:
            return [[]]
        first, rest = free[0], free[1:]
        out = []
        for idx, partner in enumerate(rest):
            for tail in rec(rest[:idx] + rest[idx + 1 :]):
                out.append([(first, partner)] + tail)
        return out

    return rec(list(range(1, n + 1)))


_PAIRING_KINDS = ("trig", "trig_discrete", "hyperbolic", "hyperbolic_discrete")


def _pairing_kernel(family):
    """cos for the trig kinds, cosh for the hyperbolic kinds (w-scaled)."""
    if family.kind in ("trig", "trig_discrete"):
        return lambda s: math.cos(family.omega * s)
    return lambda s: math.cosh(family.omega * s)


def pairing_sum(family, nodes):
    """Sum over perfect matchings of products kappa(t_i - t_j).

    kappa(s) = cos(ws) for trig kinds and cosh(ws) for hyperbolic kinds;
    both arise from the product pairing form of the constant function's
    blossom (u_i u_j + v_i v_j, respectively u_i u_j - v_i v_j).
    """
    if family.kind not in _PAIRING_KINDS:
        raise UnsupportedFamily(
            f"pairing sums are defined for {_PAIRING_KINDS}, not {family.kind}"
        )
    kappa = _pairing_kernel(family)
    total = 0.0
    for matching in pairings(len(nodes)):
        prod = 1.0
        for i, j in matching:
            prod *= kappa(nodes[i - 1] - nodes[j - 1])
        total += prod
    return total


def unity_normalizer(family, n, h):
    """The constant c_n(h) normalizing the pairing-form blossom of 1.

    c_n(h) is the reciprocal of the pairing sum at the shifted diagonal
    nodes 0, h, 2h, ..., (n-1)h; defined for the trig and hyperbolic
    kinds with even n.
    """
    if family.kind not in _PAIRING_KINDS:
        raise UnsupportedFamily(
            f"no constant-function blossom for {family.kind}"
        )
    if n % 2 != 0:
        raise UnsupportedFamily(
            f"the constant-function blossom needs even degree, got n={n}"
        )
    nodes = [-(i - 1) * h for i in range(1, n + 1)]
    denom = pairing_sum(family, nodes)
    count = 1
    for m in range(n - 1, 0, -2):
        count *= m
    if abs(denom) <= 1e-10 * count:
        raise UnityUndefined(
            f"pairing sum {denom:.3e} vanishes at h={h}; c_{n}(h) undefined"
        )
    return 1.0 / denom
