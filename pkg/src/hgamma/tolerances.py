"""Tolerance conventions used throughout the package.

Every comparison is absolute-plus-relative:

    |x - y| <= atol + rtol * max(|x|, |y|)

with defaults atol=1e-12, rtol=1e-9, overridable per call or globally via
the CURVECTL_TOL environment variable (format "atol,rtol").

Guard denominators use a separate scale-aware threshold: a generalized
determinant d(u, v) counts as zero when |d| <= 1e-10 * (1 + scale), where
scale is the product of the sup-norms of the two evaluated function pairs.
"""

import os
from dataclasses import dataclass

GUARD_REL = 1e-10


@dataclass(frozen=True)
class Tolerance:
    atol: float = 1e-12
    rtol: float = 1e-9

    def close(self, x, y):
        return abs(x - y) <= self.atol + self.rtol * max(abs(x), abs(y))

    def is_zero(self, x, scale=1.0):
        return abs(x) <= self.atol + self.rtol * abs(scale)


def default_tolerance():
    """Default Tolerance, honoring CURVECTL_TOL="atol,rtol" if set."""
    raw = os.environ.get("CURVECTL_TOL")
    if not raw:
        return Tolerance()
    try:
        atol_s, rtol_s = raw.split(",")
        return Tolerance(atol=float(atol_s), rtol=float(rtol_s))
    except ValueError:
        raise ValueError(
            f"CURVECTL_TOL must be 'atol,rtol' (two floats), got {raw!r}"
        ) from None


def guard_threshold(scale):
    """Zero threshold for a guard denominator with the given operand scale."""
    return GUARD_REL * (1.0 + abs(scale))
