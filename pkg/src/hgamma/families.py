"""Translation-invariant function pairs and their shift machinery.

A family is a pair of functions Gamma = (gamma1, gamma2) such that
shifting the argument acts linearly:

    (gamma1(x-h), gamma2(x-h))^T = C(h) (gamma1(x), gamma2(x))^T

for an invertible 2x2 matrix C(h).  The supported catalog:

    polynomial            (1, x)
    trig                  (cos x, sin x)
    trig_discrete         (cos_d x, sin_d x) = (cos(wx), sin(wx))
    hyperbolic            (cosh x, sinh x)
    hyperbolic_discrete   (cosh_d x, sinh_d x) = (cosh(wx), sinh(wx))
    exp_weighted          e^x (or e_d^x) times any of the above

where the discrete frequency is w = ln(1+d)/d for a parameter d > -1,
d != 0.  The generalized determinant

    d(u, v) = gamma1(u) gamma2(v) - gamma2(u) gamma1(v)

is the difference primitive behind every interpolation weight in the
package; it reduces to v-u, sin(v-u), sinh(v-u) (w-scaled for the
discrete kinds) and picks up a weight product for exp_weighted.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

KINDS = (
    "polynomial",
    "trig",
    "trig_discrete",
    "hyperbolic",
    "hyperbolic_discrete",
    "exp_weighted",
)
DISCRETE_KINDS = ("trig_discrete", "hyperbolic_discrete")


@dataclass(frozen=True)
class FamilySpec:
    """A member of the catalog, with parameters.

    d_param is required for the discrete kinds and optional on
    exp_weighted (discrete-exponent weighting, independent of the inner
    family's own parameter).  inner is required for exp_weighted and must
    itself not be exp_weighted.
    """

    kind: str
    d_param: float | None = None
    inner: "FamilySpec | None" = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in DISCRETE_KINDS and self.d_param is None:
            raise ValueError(f"{self.kind} requires a d parameter")
        if self.d_param is not None:
            if self.kind not in DISCRETE_KINDS and self.kind != "exp_weighted":
                raise ValueError(f"{self.kind} takes no d parameter")
            if self.d_param <= -1 or self.d_param == 0:
                raise ValueError(
                    f"d parameter must satisfy d > -1 and d != 0, got {self.d_param}"
                )
        if self.kind == "exp_weighted":
            if self.inner is None:
                raise ValueError("exp_weighted requires an inner family")
            if self.inner.kind == "exp_weighted":
                raise ValueError("exp_weighted cannot wrap another exp_weighted")
        elif self.inner is not None:
            raise ValueError(f"{self.kind} takes no inner family")

    @property
    def omega(self):
        """Frequency ln(1+d)/d of the discrete kinds (1.0 otherwise)."""
        if self.kind in DISCRETE_KINDS:
            return math.log1p(self.d_param) / self.d_param
        return 1.0

    @property
    def weight_rate(self):
        """Exponent rate of the exp_weighted weight: e^{rate*x}."""
        if self.kind != "exp_weighted":
            return 0.0
        if self.d_param is None:
            return 1.0
        return math.log1p(self.d_param) / self.d_param

    def to_json(self):
        obj = {"kind": self.kind}
        if self.d_param is not None:
            obj["d"] = self.d_param
        if self.inner is not None:
            obj["inner"] = self.inner.to_json()
        return obj

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValueError(f"family JSON must be an object with a 'kind': {obj!r}")
        extra = set(obj) - {"kind", "d", "inner"}
        if extra:
            raise ValueError(f"unknown family keys {sorted(extra)}")
        inner = cls.from_json(obj["inner"]) if "inner" in obj else None
        return cls(kind=obj["kind"], d_param=obj.get("d"), inner=inner)


def eval_gamma(family, x):
    """Point evaluation (gamma1(x), gamma2(x))."""
    kind = family.kind
    if kind == "polynomial":
        return (1.0, float(x))
    if kind == "trig" or kind == "trig_discrete":
        wx = family.omega * x
        return (math.cos(wx), math.sin(wx))
    if kind == "hyperbolic" or kind == "hyperbolic_discrete":
        wx = family.omega * x
        return (math.cosh(wx), math.sinh(wx))
    # exp_weighted
    w = math.exp(family.weight_rate * x)
    g1, g2 = eval_gamma(family.inner, x)
    return (w * g1, w * g2)


def translation_matrix(family, h):
    """The 2x2 matrix C(h) with Gamma(x-h) = C(h) Gamma(x), as an ndarray."""
    kind = family.kind
    if kind == "polynomial":
        return np.array([[1.0, 0.0], [-h, 1.0]])
    if kind == "trig" or kind == "trig_discrete":
        wh = family.omega * h
        c, s = math.cos(wh), math.sin(wh)
        return np.array([[c, s], [-s, c]])
    if kind == "hyperbolic" or kind == "hyperbolic_discrete":
        wh = family.omega * h
        c, s = math.cosh(wh), math.sinh(wh)
        return np.array([[c, -s], [-s, c]])
    return math.exp(-family.weight_rate * h) * translation_matrix(family.inner, h)


def d_form(family, u, v):
    """Generalized determinant d(u, v) = gamma1(u)gamma2(v) - gamma2(u)gamma1(v).

    Uses the family closed form (difference formula) rather than the
    two-evaluation determinant; the two agree to rounding and the closed
    form avoids cancellation when u and v are close.
    """
    kind = family.kind
    if kind == "polynomial":
        return float(v) - float(u)
    if kind == "trig" or kind == "trig_discrete":
        return math.sin(family.omega * (v - u))
    if kind == "hyperbolic" or kind == "hyperbolic_discrete":
        return math.sinh(family.omega * (v - u))
    rate = family.weight_rate
    return math.exp(rate * (u + v)) * d_form(family.inner, u, v)


def d_form_generic(family, u, v):
    """d(u, v) via two point evaluations; cross-check for d_form."""
    g1u, g2u = eval_gamma(family, u)
    g1v, g2v = eval_gamma(family, v)
    return g1u * g2v - g2u * g1v


def d_form_pair(family, w, v):
    """d(w, v) with a raw left argument w = (w1, w2) in place of Gamma(u).

    Multilinear extension used by blossom tableaus; coincides with
    d_form(u, v) when w = Gamma(u).
    """
    g1v, g2v = eval_gamma(family, v)
    return w[0] * g2v - w[1] * g1v


def d_scale(family, u, v):
    """Magnitude scale of d(u, v)'s operands, for guard thresholds."""
    g1u, g2u = eval_gamma(family, u)
    g1v, g2v = eval_gamma(family, v)
    return max(abs(g1u), abs(g2u)) * max(abs(g1v), abs(g2v))


def check_translation_invariance(family, h, grid):
    """Max over the grid of ||Gamma(x-h) - C(h) Gamma(x)||_inf."""
    if len(grid) == 0:
        raise ValueError("grid must be nonempty")
    C = translation_matrix(family, h)
    worst = 0.0
    for x in grid:
        shifted = np.array(eval_gamma(family, x - h))
        predicted = C @ np.array(eval_gamma(family, x))
        worst = max(worst, float(np.max(np.abs(shifted - predicted))))
    return worst
