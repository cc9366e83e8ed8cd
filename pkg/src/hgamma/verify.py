"""Seeded verification suites over the library's mathematical identities.

Each suite draws random valid configurations, measures the worst residual
of one family of identities, and reports it against a fixed tolerance.
The CLI exposes these as `curvectl verify --suite NAME --seed K`.
"""

import itertools

import numpy as np

from . import blossom as bl
from .bernstein import BasisQuery, basis_all, marsden_residual, unity_controls
from .curves import HGammaCurve
from .errors import UnityUndefined
from .families import FamilySpec, d_form
from .independence import independence_check, validate_curve_params

SUITES = (
    "marsden",
    "unity",
    "shift",
    "permutation",
    "blossom-axioms",
    "independence-grid",
)

TEST_FAMILIES = {
    "polynomial": FamilySpec("polynomial"),
    "trig": FamilySpec("trig"),
    "trig_discrete": FamilySpec("trig_discrete", d_param=0.5),
    "hyperbolic": FamilySpec("hyperbolic"),
    "hyperbolic_discrete": FamilySpec("hyperbolic_discrete", d_param=0.5),
    "exp_weighted": FamilySpec("exp_weighted", inner=FamilySpec("trig")),
}


def random_params(rng, family, n, h_range=(-0.5, 0.5), min_guard=0.05):
    """Rejection-sample (h, a, b) with all guards comfortably away from zero."""
    for _ in range(400):
        h = float(rng.uniform(*h_range))
        a = float(rng.uniform(-1.0, 1.0))
        b = a + float(rng.uniform(0.5, 1.6)) * (1 if rng.random() < 0.8 else -1)
        violations = validate_curve_params(family, n, h, a, b)
        if violations:
            continue
        worst = min(
            abs(d_form(family, a - j * h, b - i * h))
            for j in range(n)
            for i in range(j + 1)
        )
        if worst >= min_guard:
            return h, a, b
    raise RuntimeError(f"could not sample valid params for {family.kind} n={n}")


def random_curve(rng, family, n, dim=2, h_range=(-0.5, 0.5)):
    h, a, b = random_params(rng, family, n, h_range)
    controls = rng.uniform(-1.0, 1.0, size=(n + 1, dim))
    return HGammaCurve(family=family, n=n, h=h, interval=(a, b), controls=controls)


def _check(name, value, tolerance, invert=False):
    passed = bool(value <= tolerance) if not invert else bool(value > tolerance)
    return {
        "name": name,
        "max_residual": float(value),
        "tolerance": tolerance,
        "passed": passed,
    }


def suite_blossom_axioms(seed=42):
    rng = np.random.default_rng(seed)
    sym = mult = diag = 0.0
    for fam in TEST_FAMILIES.values():
        for _ in range(17):
            n = int(rng.integers(1, 5))
            curve = random_curve(rng, fam, n)
            lo, hi = sorted(curve.interval)
            args = [bl.OnCurve(float(rng.uniform(lo, hi))) for _ in range(n)]
            base = bl.blossom_from_controls(curve, args)
            scale = max(1.0, float(np.max(np.abs(base))))
            for perm in itertools.permutations(args):
                val = bl.blossom_from_controls(curve, list(perm))
                sym = max(sym, float(np.max(np.abs(val - base))) / scale)
            # multilinearity in a random slot
            slot = int(rng.integers(0, n))
            w1 = bl.Raw(float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1)))
            w2 = bl.Raw(float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1)))
            alpha, beta = float(rng.uniform(-2, 2)), float(rng.uniform(-2, 2))
            combo = bl.Raw(alpha * w1.u + beta * w2.u, alpha * w1.v + beta * w2.v)
            with_combo = bl.blossom_from_controls(
                curve, args[:slot] + [combo] + args[slot + 1 :]
            )
            split = alpha * bl.blossom_from_controls(
                curve, args[:slot] + [w1] + args[slot + 1 :]
            ) + beta * bl.blossom_from_controls(
                curve, args[:slot] + [w2] + args[slot + 1 :]
            )
            mscale = max(1.0, float(np.max(np.abs(with_combo))))
            mult = max(mult, float(np.max(np.abs(with_combo - split))) / mscale)
            t = float(rng.uniform(lo, hi))
            diag = max(diag, bl.blossom_diagonal_check(curve, t))
    return {
        "suite": "blossom-axioms",
        "seed": seed,
        "checks": [
            _check("symmetry_spread", sym, 1e-10),
            _check("multilinearity_residual", mult, 1e-10),
            _check("diagonal_residual", diag, 1e-10),
        ],
    }


def suite_permutation(seed=42):
    rng = np.random.default_rng(seed)
    spread = 0.0
    for fam in TEST_FAMILIES.values():
        for n in (1, 2, 3, 4):
            curve = random_curve(rng, fam, n)
            lo, hi = sorted(curve.interval)
            x = float(rng.uniform(lo, hi))
            vals = [
                curve.eval(x, sigma)
                for sigma in itertools.permutations(range(1, n + 1))
            ]
            scale = max(1.0, float(np.max(np.abs(vals[0]))))
            for v in vals[1:]:
                spread = max(spread, float(np.max(np.abs(v - vals[0]))) / scale)
    return {
        "suite": "permutation",
        "seed": seed,
        "checks": [_check("evaluation_spread", spread, 1e-10)],
    }


def suite_marsden(seed=42):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for fam in TEST_FAMILIES.values():
        for _ in range(20):
            n = int(rng.integers(1, 6))
            h, a, b = random_params(rng, fam, n)
            t = float(rng.uniform(min(a, b), max(a, b)))
            x = float(rng.uniform(-1.5, 1.5))
            worst = max(worst, marsden_residual(fam, n, h, a, b, t, x))
    return {
        "suite": "marsden",
        "seed": seed,
        "checks": [_check("normalized_residual", worst, 1e-9)],
    }


def suite_unity(seed=42):
    rng = np.random.default_rng(seed)
    poly_worst = 0.0
    pair_worst = 0.0
    poly = TEST_FAMILIES["polynomial"]
    for _ in range(10):
        n = int(rng.integers(1, 6))
        h, a, b = random_params(rng, poly, n)
        weights = unity_controls(poly, n, h, a, b)
        for x in np.linspace(a, b, 25):
            basis = basis_all(BasisQuery(family=poly, n=n, h=h, a=a, b=b, x=float(x)))
            poly_worst = max(poly_worst, abs(float(np.dot(weights, basis)) - 1.0))
    for name in ("trig", "trig_discrete", "hyperbolic", "hyperbolic_discrete"):
        fam = TEST_FAMILIES[name]
        for n in (2, 4, 6):
            try:
                h, a, b = random_params(rng, fam, n, h_range=(-0.35, 0.35))
                weights = unity_controls(fam, n, h, a, b)
            except UnityUndefined:
                continue
            for x in np.linspace(a, b, 100):
                basis = basis_all(
                    BasisQuery(family=fam, n=n, h=h, a=a, b=b, x=float(x))
                )
                pair_worst = max(pair_worst, abs(float(np.dot(weights, basis)) - 1.0))
    return {
        "suite": "unity",
        "seed": seed,
        "checks": [
            _check("polynomial_unity", poly_worst, 1e-12),
            _check("pairing_unity", pair_worst, 1e-9),
        ],
    }


def suite_shift(seed=42):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for fam in TEST_FAMILIES.values():
        for _ in range(12):
            n = int(rng.integers(1, 6))
            h, a, b = random_params(rng, fam, n)
            delta = float(rng.uniform(-1.0, 1.0))
            x = float(rng.uniform(min(a, b), max(a, b)))
            base = basis_all(BasisQuery(family=fam, n=n, h=h, a=a, b=b, x=x))
            shifted = basis_all(
                BasisQuery(family=fam, n=n, h=h, a=a + delta, b=b + delta, x=x + delta)
            )
            worst = max(worst, float(np.max(np.abs(base - shifted))))
    return {
        "suite": "shift",
        "seed": seed,
        "checks": [_check("shift_invariance", worst, 1e-9)],
    }


def suite_independence_grid(seed=42, family=None, n=2, h_lo=-2.0, h_hi=2.0, count=200):
    fam = family if family is not None else TEST_FAMILIES["trig"]
    dependent_h = []
    disagreements = 0
    for h in np.linspace(h_lo, h_hi, count):
        rep = independence_check(fam, n, float(h))
        if rep.verdict == "dependent":
            dependent_h.append(float(h))
        in_band = rep.qb_margin is not None and rep.qb_margin <= 1e-3
        if rep.verdict == "borderline" and not in_band:
            disagreements += 1
    report = {
        "suite": "independence-grid",
        "seed": seed,
        "family": fam.to_json(),
        "n": n,
        "dependent_h": dependent_h,
        "checks": [_check("borderline_outside_bands", float(disagreements), 0.0)],
    }
    return report


def run_suite(name, seed=42, family=None, n=None):
    if name == "marsden":
        return suite_marsden(seed)
    if name == "unity":
        return suite_unity(seed)
    if name == "shift":
        return suite_shift(seed)
    if name == "permutation":
        return suite_permutation(seed)
    if name == "blossom-axioms":
        return suite_blossom_axioms(seed)
    if name == "independence-grid":
        return suite_independence_grid(seed, family=family, n=n if n else 2)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")


def suite_passed(report):
    return all(c["passed"] for c in report["checks"])
