"""Control-point curves over translation-invariant spaces.

A curve of degree n over [a, b] with shift h is determined by n+1 control
points; evaluation runs a triangular interpolation tableau whose weights
are ratios of generalized determinants.  There is one evaluation
algorithm per permutation of the argument insertion order; all agree at
the apex, and two particular orders (identity and reversal) yield the
left and right halves of the subdivision algorithm.
"""

from dataclasses import dataclass, field

import numpy as np

from . import blossom as bl
from .errors import ArityMismatch, DegenerateConfiguration, DependentBasis
from .families import FamilySpec, eval_gamma
from .independence import validate_curve_params
from .tolerances import default_tolerance


def _check_sigma(sigma, n):
    if sigma is None:
        return tuple(range(1, n + 1))
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"sigma must be a permutation of 1..{n}, got {sigma}")
    return sigma


def reversal(n):
    """The insertion order sigma(i) = n+1-i."""
    return tuple(range(n, 0, -1))


def ensure_valid_params(family, n, h, a, b):
    """Raise DependentBasis / DegenerateConfiguration on any obstruction."""
    violations = validate_curve_params(family, n, h, a, b)
    if not violations:
        return
    dep = [v for v in violations if v.kind in ("independence", "singular")]
    if dep:
        raise DependentBasis(dep[0].message, violations=violations)
    raise DegenerateConfiguration(
        f"interval [{a:.6g}, {b:.6g}]: " + "; ".join(v.message for v in violations),
        violations=violations,
    )


@dataclass(frozen=True, eq=False)
class HGammaCurve:
    """Degree-n control-point curve over [a, b] with shift h.

    Control points are m-vectors (any m >= 1), so scalar functions,
    planar curves and space curves share one code path.  Construction
    validates basis independence and all tableau guards; `valid=False`
    marks the zero-length stubs produced by degenerate splits, which
    skip validation and must not be evaluated.
    """

    family: FamilySpec
    n: int
    h: float
    interval: tuple
    controls: np.ndarray = field(repr=False)
    valid: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("degree must be >= 1")
        controls = np.asarray(self.controls, dtype=float)
        if controls.ndim == 1:
            controls = controls[:, None]
        if controls.ndim != 2 or controls.shape[0] != self.n + 1:
            raise ArityMismatch(
                f"degree {self.n} needs {self.n + 1} control points, "
                f"got shape {controls.shape}"
            )
        object.__setattr__(self, "controls", controls)
        object.__setattr__(self, "interval", (float(self.interval[0]), float(self.interval[1])))
        a, b = self.interval
        if self.valid:
            if a == b:
                raise DegenerateConfiguration("interval endpoints coincide")
            ensure_valid_params(self.family, self.n, self.h, a, b)

    @property
    def dim(self):
        return self.controls.shape[1]

    def eval(self, x, sigma=None):
        """Curve point at x; identical for every insertion order sigma."""
        return self.tableau(x, sigma).apex

    def tableau(self, x, sigma=None):
        """Full evaluation triangle at x for the given insertion order."""
        if not self.valid:
            raise DegenerateConfiguration("cannot evaluate a zero-length stub")
        sigma = _check_sigma(sigma, self.n)
        a, b = self.interval
        args = [bl.OnCurve(x - (s - 1) * self.h) for s in sigma]
        levels = bl.run_tableau(
            self.family, self.n, self.h, a, b, self.controls, args
        )
        return Tableau(sigma=sigma, x=float(x), levels=levels)

    def sample(self, count):
        """count evenly spaced (x, point) samples over [a, b]."""
        a, b = self.interval
        xs = np.linspace(a, b, count)
        return xs, np.array([self.eval(x) for x in xs])

    def to_json(self):
        obj = {
            "family": self.family.to_json(),
            "n": self.n,
            "h": self.h,
            "interval": [self.interval[0], self.interval[1]],
            "controls": self.controls.tolist(),
        }
        if not self.valid:
            obj["valid"] = False
        return obj

    @classmethod
    def from_json(cls, obj):
        required = {"family", "n", "h", "interval", "controls"}
        missing = required - set(obj)
        if missing:
            raise ValueError(f"curve JSON missing keys {sorted(missing)}")
        return cls(
            family=FamilySpec.from_json(obj["family"]),
            n=int(obj["n"]),
            h=float(obj["h"]),
            interval=(float(obj["interval"][0]), float(obj["interval"][1])),
            controls=np.asarray(obj["controls"], dtype=float),
            valid=obj.get("valid", True),
        )


@dataclass(frozen=True, eq=False)
class Tableau:
    """Triangular array of one evaluation run; level k has n-k+1 entries."""

    sigma: tuple
    x: float
    levels: list

    @property
    def apex(self):
        return self.levels[-1][0]

    def entry(self, i, k):
        """Intermediate point at position i of level k."""
        return self.levels[k][i]


def subdivide(curve, t):
    """Split into curves over [a, t] and [t, b] reproducing the parent.

    The left controls are the first column of the identity-order tableau
    at t, the right controls the last diagonal of the reversal-order
    tableau.  A split at an endpoint returns the parent plus a
    zero-length stub flagged invalid.
    """
    a, b = curve.interval
    if t == a or t == b:
        stub_at = a if t == a else b
        stub = HGammaCurve(
            family=curve.family,
            n=curve.n,
            h=curve.h,
            interval=(stub_at, stub_at),
            controls=np.repeat(curve.controls[:1] if t == a else curve.controls[-1:],
                               curve.n + 1, axis=0),
            valid=False,
        )
        return (stub, curve) if t == a else (curve, stub)

    left_tab = curve.tableau(t)
    right_tab = curve.tableau(t, sigma=reversal(curve.n))
    left_controls = np.array([left_tab.entry(0, k) for k in range(curve.n + 1)])
    right_controls = np.array(
        [right_tab.entry(k, curve.n - k) for k in range(curve.n + 1)]
    )

    def build(interval, controls, label):
        try:
            return HGammaCurve(
                family=curve.family,
                n=curve.n,
                h=curve.h,
                interval=interval,
                controls=controls,
            )
        except DegenerateConfiguration as exc:
            raise DegenerateConfiguration(
                f"{label} sub-interval [{interval[0]:.6g}, {interval[1]:.6g}] "
                f"fails guards: {exc}",
                violations=exc.violations,
            ) from None

    left = build((a, t), left_controls, "left")
    right = build((t, b), right_controls, "right")
    return left, right


@dataclass(frozen=True, eq=False)
class SegmentTree:
    """2^depth curve segments over the dyadic refinement of [a, b]."""

    depth: int
    segments: list

    def to_json(self):
        return {
            "depth": self.depth,
            "segments": [seg.to_json() for seg in self.segments],
        }

    def polygon_points(self):
        """Control polygons of all segments, concatenated in order."""
        pts = [self.segments[0].controls[0]]
        for seg in self.segments:
            pts.extend(seg.controls[1:])
        return np.array(pts)


def midpoint_subdivision(curve, depth):
    """Recursively split at interval midpoints, doubling the segments."""
    if depth < 0 or depth > 20:
        raise ValueError("depth must be in 0..20")
    segments = [curve]
    for _ in range(depth):
        nxt = []
        for seg in segments:
            a, b = seg.interval
            nxt.extend(subdivide(seg, (a + b) / 2.0))
        segments = nxt
    return SegmentTree(depth=depth, segments=segments)


def polygon_deviation(curve, depth, samples_per_segment=64):
    """Max distance between the curve and the depth-m control polygons.

    Each segment's polygon is parameterized uniformly over its legs; the
    curve is compared at the same segment-local parameter.  Decays like
    2^-depth by the uniform convergence bound.
    """
    tree = midpoint_subdivision(curve, depth)
    worst = 0.0
    for seg in tree.segments:
        a, b = seg.interval
        legs = seg.n
        for s in np.linspace(0.0, 1.0, samples_per_segment):
            x = a + s * (b - a)
            pos = s * legs
            leg = min(int(pos), legs - 1)
            local = pos - leg
            poly_pt = (1.0 - local) * seg.controls[leg] + local * seg.controls[leg + 1]
            dist = float(np.linalg.norm(curve.eval(x) - poly_pt))
            worst = max(worst, dist)
    return worst


def derivative_bound(curve, samples=160):
    """Finite-difference estimate of the uniform convergence constant.

    Combines max |G'| over the interval with the blossom bound that
    controls consecutive control-point gaps: the blossom of the curve
    with one argument replaced by the derivative pair Gamma'(z - kh).
    """
    a, b = curve.interval
    lo, hi = min(a, b), max(a, b)
    xs = np.linspace(lo, hi, samples)
    delta = 1e-6 * max(1.0, hi - lo)
    max_g_prime = 0.0
    for x in xs:
        g = (curve.eval(x + delta) - curve.eval(x - delta)) / (2 * delta)
        max_g_prime = max(max_g_prime, float(np.linalg.norm(g)))

    def gamma_prime(z):
        g_plus = np.array(eval_gamma(curve.family, z + delta))
        g_minus = np.array(eval_gamma(curve.family, z - delta))
        return (g_plus - g_minus) / (2 * delta)

    n, h = curve.n, curve.h
    blossom_max = 0.0
    coarse = np.linspace(lo, hi, 7)
    for k in range(n):
        for x in coarse:
            for y in coarse:
                for z in coarse:
                    gp = gamma_prime(z - k * h)
                    args = (
                        [bl.OnCurve(y - (j + 1) * h) for j in range(k, n - 1)]
                        + [bl.OnCurve(x - j * h) for j in range(k)]
                        + [bl.Raw(gp[0], gp[1])]
                    )
                    val = bl.blossom_from_controls(curve, args)
                    blossom_max = max(blossom_max, float(np.linalg.norm(np.atleast_1d(val))))
    return max_g_prime + n * blossom_max


def make_interpolating_curve(family, n, h, a, points):
    """Curve over [a, a-nh] that passes through all its control points.

    With b = a - nh the dual-functional nodes line up with the shifted
    diagonal, so the curve value at a - kh is exactly the k-th control
    point; the construction verifies that property before returning.
    """
    if h == 0:
        raise DegenerateConfiguration("interpolation mode requires h != 0")
    b = a - n * h
    curve = HGammaCurve(
        family=family, n=n, h=h, interval=(a, b), controls=np.asarray(points, dtype=float)
    )
    tol = default_tolerance()
    for k in range(n + 1):
        got = curve.eval(a - k * h)
        want = curve.controls[k]
        scale = max(1.0, float(np.max(np.abs(want))))
        # two orders of headroom over the comparison tolerance
        if float(np.max(np.abs(got - want))) > 100 * (tol.atol + tol.rtol * scale):
            raise DegenerateConfiguration(
                f"interpolation verification failed at node {k}: "
                f"|error| = {float(np.max(np.abs(got - want))):.3e}"
            )
    return curve
