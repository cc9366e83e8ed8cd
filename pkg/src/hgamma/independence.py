"""Linear-independence criterion for the shifted basis functions.

Whether the functions G_{n,k}(t; h) span the whole space is decided from
the eigenvalues of the translation matrix C(h): when C(h) is not
diagonalizable they are always independent; when it is, independence
holds iff q = lambda1/lambda2 is not a zero of any Gaussian binomial
[n k]_q for k = 1..n-1.  A numerical determinant of the expanded basis
matrix cross-checks the verdict.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .blossom import gnk_expand
from .errors import SingularMatrix
from .families import d_form, d_scale, translation_matrix
from .tolerances import guard_threshold

# A Gaussian binomial counts as zero when its scaled magnitude falls
# below QB_TOL; the determinant when its scaled magnitude falls below
# DET_TOL.  The SOFT thresholds reconcile the two tests near a zero:
# one test flagging dependence while the other is merely small is still
# a dependent verdict; borderline needs a disagreement beyond them.
QB_TOL = 1e-6
QB_SOFT = 1e-3
DET_TOL = 1e-10
DET_SOFT = 1e-4


def eigen2(C):
    """Eigenvalues of a 2x2 matrix via its characteristic polynomial.

    Returns (lam1, lam2, diagonalizable) with |lam1| >= |lam2| (ties
    broken by argument, descending).  A repeated eigenvalue means a
    Jordan block, hence not diagonalizable, unless C is numerically a
    scalar multiple of the identity.
    """
    C = np.asarray(C, dtype=float)
    tr = C[0, 0] + C[1, 1]
    det = C[0, 0] * C[1, 1] - C[0, 1] * C[1, 0]
    if abs(det) <= 1e-12 * (1.0 + tr * tr):
        raise SingularMatrix(f"matrix determinant {det:.3e} is numerically zero")
    disc = tr * tr - 4.0 * det
    if abs(disc) <= 1e-10 * (1.0 + tr * tr):
        lam = float(tr) / 2.0
        scalar = bool(
            abs(C[0, 1]) <= 1e-10 * (1.0 + abs(lam))
            and abs(C[1, 0]) <= 1e-10 * (1.0 + abs(lam))
            and abs(C[0, 0] - C[1, 1]) <= 1e-10 * (1.0 + abs(lam))
        )
        return complex(lam), complex(lam), scalar
    root = cmath.sqrt(complex(disc))
    lam1 = (tr + root) / 2.0
    lam2 = (tr - root) / 2.0
    lam1, lam2 = sorted(
        (lam1, lam2), key=lambda z: (abs(z), cmath.phase(z)), reverse=True
    )
    return lam1, lam2, True


def q_binomial(n, k, q):
    """Gaussian binomial [n k]_q by the division-free Pascal recurrence

        [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q,

    evaluated as a polynomial in q, so roots of unity need no special
    casing.  Rows are mirrored about their middle, which makes the
    symmetry [n k]_q = [n n-k]_q hold bitwise.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    q = complex(q)
    row = [complex(1.0)]
    for m in range(1, n + 1):
        nxt = [complex(1.0)] * (m + 1)
        for j in range(1, m // 2 + 1):
            nxt[j] = row[j - 1] + q**j * row[j]
        for j in range(m // 2 + 1, m):
            nxt[j] = nxt[m - j]
        row = nxt
    return row[k]


@dataclass(frozen=True)
class IndependenceReport:
    """Outcome of the independence test for one (family, n, h).

    qb_margin is the smallest Gaussian binomial magnitude scaled to its
    natural size (None when C(h) is not diagonalizable or n = 1);
    det_margin is |det| of the expansion matrix scaled by the exact
    exp-weight factor.  Both are ~O(1) away from degeneracy and vanish
    together at a degenerate h.
    """

    n: int
    h: float
    eigenvalues: tuple
    diagonalizable: bool
    q: complex | None
    qbinomials: tuple
    det_cross_check: float
    qb_margin: float | None
    det_margin: float
    verdict: str  # independent | dependent | borderline

    def to_json(self):
        def c(z):
            return {"re": z.real, "im": z.imag}

        return {
            "n": self.n,
            "h": self.h,
            "eigenvalues": [c(z) for z in self.eigenvalues],
            "diagonalizable": self.diagonalizable,
            "q": c(self.q) if self.q is not None else None,
            "qbinomials": [c(z) for z in self.qbinomials],
            "det": self.det_cross_check,
            "dependence_margin": self.qb_margin,
            "verdict": self.verdict,
        }


def _qb_scale(n, k, q):
    # |[n k]_q| <= binom(n,k) * max(1,|q|)^(k(n-k)): its natural magnitude
    return math.comb(n, k) * max(1.0, abs(q)) ** (k * (n - k))


def _det_scale(family, n, h):
    # An exp weight multiplies every basis function by the same positive
    # factor, scaling the expansion determinant by exactly
    # exp(-(n+1) * rate * C(n,2) * h); divide that scale back out.
    if family.kind != "exp_weighted":
        return 1.0
    exponent = -(n + 1) * family.weight_rate * math.comb(n, 2) * h
    return math.exp(max(-700.0, min(700.0, exponent)))


@lru_cache(maxsize=512)
def independence_check(family, n, h):
    """Decide independence of the shifted basis for (family, n, h).

    Combines the eigenvalue criterion with the determinant of the
    expanded basis matrix.  The two margins vanish together at a
    degenerate h, so one test flagging dependence while the other is
    merely small (below its SOFT threshold) still reconciles to
    `dependent`; a disagreement beyond the soft thresholds is
    `borderline` (expected only under tolerance pathologies).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    C = translation_matrix(family, h)
    lam1, lam2, diagonalizable = eigen2(C)

    if diagonalizable:
        q = lam1 / lam2
        qbs = tuple(q_binomial(n, k, q) for k in range(1, n))
        qb_margin = min(
            (abs(qbs[k - 1]) / _qb_scale(n, k, q) for k in range(1, n)),
            default=None,
        )
    else:
        q = None
        qbs = ()
        qb_margin = None

    gnk = gnk_expand(family, n, h)
    det = float(np.linalg.det(gnk.as_array()))
    det_margin = abs(det) / _det_scale(family, n, h)

    qb_independent = qb_margin is None or qb_margin > QB_TOL
    det_independent = det_margin > DET_TOL
    if qb_independent and det_independent:
        verdict = "independent"
    elif not qb_independent and not det_independent:
        verdict = "dependent"
    elif not qb_independent:
        # q-binomial zero; accept if the determinant is at least soft-small
        verdict = "dependent" if det_margin <= DET_SOFT else "borderline"
    else:
        # determinant zero; accept if some q-binomial is at least soft-small
        soft = qb_margin is not None and qb_margin <= QB_SOFT
        verdict = "dependent" if soft else "borderline"

    return IndependenceReport(
        n=n,
        h=h,
        eigenvalues=(lam1, lam2),
        diagonalizable=diagonalizable,
        q=q,
        qbinomials=qbs,
        det_cross_check=det,
        qb_margin=qb_margin,
        det_margin=det_margin,
        verdict=verdict,
    )


@dataclass(frozen=True)
class Violation:
    """One reason a curve configuration is unusable."""

    kind: str  # guard | independence | singular
    message: str
    i: int | None = None
    j: int | None = None
    k: int | None = None
    value: float | None = None

    def to_json(self):
        obj = {"kind": self.kind, "message": self.message}
        for name in ("i", "j", "k", "value"):
            v = getattr(self, name)
            if v is not None:
                obj[name] = v
        return obj


def guard_pairs(n):
    """Index pairs (i, j), 0 <= i <= j <= n-1, of the tableau denominators."""
    return [(i, j) for j in range(n) for i in range(j + 1)]


def validate_curve_params(family, n, h, a, b):
    """All obstructions to running the evaluation algorithms on [a, b].

    Empty iff the basis is independent and every tableau denominator
    d(a-jh, b-ih) clears the guard threshold.  Violations are data, not
    errors.
    """
    violations = []
    try:
        report = independence_check(family, n, h)
    except SingularMatrix as exc:
        violations.append(Violation(kind="singular", message=str(exc)))
        report = None
    if report is not None and report.verdict != "independent":
        if report.q is not None:
            for k in range(1, n):
                qb = report.qbinomials[k - 1]
                if abs(qb) <= QB_TOL * _qb_scale(n, k, report.q):
                    violations.append(
                        Violation(
                            kind="independence",
                            k=k,
                            value=abs(qb),
                            message=(
                                f"Gaussian binomial [{n} {k}]_q vanishes at "
                                f"q={report.q:.6g} (h={h})"
                            ),
                        )
                    )
        if not any(v.kind == "independence" for v in violations):
            violations.append(
                Violation(
                    kind="independence",
                    value=report.det_cross_check,
                    message=(
                        f"basis determinant {report.det_cross_check:.3e} "
                        f"is numerically zero at h={h} (verdict {report.verdict})"
                    ),
                )
            )
    for i, j in guard_pairs(n):
        u, v = a - j * h, b - i * h
        val = d_form(family, u, v)
        if abs(val) <= guard_threshold(d_scale(family, u, v)):
            violations.append(
                Violation(
                    kind="guard",
                    i=i,
                    j=j,
                    value=val,
                    message=f"guard d(a-{j}h, b-{i}h) = {val:.3e} is numerically zero",
                )
            )
    return violations
