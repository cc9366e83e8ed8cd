import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hgamma import (
    FamilySpec,
    HGammaCurve,
    OnCurve,
    Raw,
    UnityUndefined,
    UnsupportedFamily,
    blossom_diagonal_check,
    blossom_from_controls,
    d_form,
    d_pochhammer,
    eval_gamma,
    gnk_expand,
    marsden_coefficients,
    pairings,
    symmetric_blossom,
    translation_matrix,
    unity_normalizer,
)
from hgamma.blossom import evaluate_homog, pairing_sum
from hgamma.errors import ArityMismatch, OddArity
from conftest import ALL_FAMILIES, subset_blossom

TRIG = FamilySpec("trig")
POLY = FamilySpec("polynomial")


# --- d_pochhammer -----------------------------------------------------------

def test_pochhammer_empty_product(family):
    assert d_pochhammer(family, 0.4, 1.2, 0, 0.3) == 1.0


def test_pochhammer_polynomial_hand_value():
    # d(u,v) = v-u; factors d(0,1) * d(-0.5,1) = 1 * 1.5
    assert d_pochhammer(POLY, 0.0, 1.0, 2, 0.5) == 1.5


def test_pochhammer_matches_factor_loop(family, rng):
    for _ in range(20):
        t, x, h = rng.uniform(-1.5, 1.5, size=3)
        n = int(rng.integers(1, 6))
        expected = 1.0
        for j in range(n):
            expected *= d_form(family, t - j * h, x)
        got = d_pochhammer(family, t, x, n, h)
        assert abs(got - expected) <= 1e-12 * (1 + abs(expected))


def test_pochhammer_trig_product_of_sines(rng):
    for _ in range(10):
        t, x, h = rng.uniform(-1, 1, size=3)
        expected = math.prod(math.sin(x - t + j * h) for j in range(3))
        assert abs(d_pochhammer(TRIG, t, x, 3, h) - expected) < 1e-12


# --- gnk_expand -------------------------------------------------------------

def brute_force_gnk_rows(family, n, h):
    """Oracle: expand each subset product of the shifted linear forms."""
    C = translation_matrix(family, h)
    powers = [np.linalg.matrix_power(C, j) for j in range(n)]
    rows = np.zeros((n + 1, n + 1))
    for subset_size in range(n + 1):
        for J in itertools.combinations(range(n), subset_size):
            # prod over j in J of (l1_j . Gamma), over j not in J of (l2_j . Gamma)
            coeffs = np.zeros(1)
            coeffs[0] = 1.0
            for j in range(n):
                form = powers[j][0] if j in J else powers[j][1]
                nxt = np.zeros(len(coeffs) + 1)
                nxt[1:] += coeffs * form[0]  # gamma1 raises index
                nxt[:-1] += coeffs * form[1]
                coeffs = nxt
            rows[subset_size] += coeffs
    return rows


def test_gnk_expand_example_matrix_trig_n2():
    h = 0.3
    g = gnk_expand(TRIG, 2, h)
    # row of the pure-cos product: cos h * g1^2 + sin h * g1 g2
    np.testing.assert_allclose(
        g.rows[2].coeffs, (0.0, math.sin(h), math.cos(h)), atol=1e-15
    )
    np.testing.assert_allclose(
        g.rows[0].coeffs, (math.cos(h), -math.sin(h), 0.0), atol=1e-15
    )
    assert abs(g.determinant() - 2 * math.cos(h)) < 1e-12


def test_gnk_expand_h_zero_is_binomial(family):
    n = 4
    g = gnk_expand(family, n, 0.0)
    for k in range(n + 1):
        expected = np.zeros(n + 1)
        expected[k] = math.comb(n, k)
        np.testing.assert_allclose(g.rows[k].coeffs, expected, atol=1e-12)


def test_gnk_expand_matches_subset_enumeration():
    for fam_name in ("polynomial", "trig", "hyperbolic_discrete"):
        fam = ALL_FAMILIES[fam_name]
        for (n, h) in ((3, 0.25), (5, -0.4), (6, 0.1)):
            got = gnk_expand(fam, n, h).as_array()
            want = brute_force_gnk_rows(fam, n, h)
            assert np.max(np.abs(got - want)) <= 1e-12 * (1 + np.max(np.abs(want)))


def test_gnk_rows_evaluate_to_subset_sum_definition(family, rng):
    # dotted with monomials, rows reproduce the direct subset-sum definition
    for n in (2, 4, 6):
        h = float(rng.uniform(-0.5, 0.5))
        g = gnk_expand(family, n, h)
        for _ in range(5):
            t = float(rng.uniform(-1, 1))
            gammas = [eval_gamma(family, t - j * h) for j in range(n)]
            for k in range(n + 1):
                direct = 0.0
                for J in itertools.combinations(range(n), k):
                    prod = 1.0
                    for j in range(n):
                        prod *= gammas[j][0] if j in J else gammas[j][1]
                    direct += prod
                via_coeffs = evaluate_homog(family, g.rows[k], t)
                assert abs(direct - via_coeffs) <= 1e-11 * (1 + abs(direct))


# --- symmetric_blossom ------------------------------------------------------

def test_symmetric_blossom_constant_one_polynomial(rng):
    # blossom of G = 1 in the polynomial space: the product of the u's
    n = 4
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    pairs = [(float(rng.uniform(-2, 2)), float(rng.uniform(-2, 2))) for _ in range(n)]
    got = symmetric_blossom(coeffs, [Raw(u, v) for u, v in pairs])
    want = math.prod(u for u, _ in pairs)
    assert abs(got - want) < 1e-12


def test_symmetric_blossom_linear_case():
    got = symmetric_blossom([2.0, 3.0], [Raw(0.5, 0.25)])
    assert got == 3.0 * 0.5 + 2.0 * 0.25


def test_symmetric_blossom_matches_subset_oracle(rng):
    for _ in range(25):
        n = int(rng.integers(1, 7))
        coeffs = rng.uniform(-1, 1, size=n + 1)
        pairs = [tuple(rng.uniform(-1, 1, size=2)) for _ in range(n)]
        got = symmetric_blossom(coeffs, [Raw(u, v) for u, v in pairs])
        want = subset_blossom(coeffs, pairs)
        assert abs(got - want) <= 1e-12 * (1 + abs(want))


def test_symmetric_blossom_arity_check():
    with pytest.raises(ArityMismatch):
        symmetric_blossom([1.0, 2.0], [Raw(1, 2), Raw(3, 4)])


def test_symmetric_blossom_on_curve_args_need_family():
    coeffs = [0.0, 1.0]
    with pytest.raises(ValueError):
        symmetric_blossom(coeffs, [OnCurve(0.5)])
    val = symmetric_blossom(coeffs, [OnCurve(0.5)], family=POLY)
    assert abs(val - 1.0) < 1e-15  # u-coordinate of Gamma(0.5) is 1


# --- blossom_from_controls ---------------------------------------------------

def make_curve(rng, family, n=3, dim=2):
    from hgamma.verify import random_curve

    return random_curve(rng, family, n, dim=dim)


def inside(rng, curve):
    lo, hi = sorted(curve.interval)
    return float(rng.uniform(lo, hi))


def test_blossom_dual_nodes_recover_controls(family, rng):
    curve = make_curve(rng, family)
    n, h = curve.n, curve.h
    a, b = curve.interval
    for k in range(n + 1):
        args = [OnCurve(a - i * h) for i in range(k, n)] + [
            OnCurve(b - i * h) for i in range(k)
        ]
        val = blossom_from_controls(curve, args)
        assert np.max(np.abs(val - curve.controls[k])) <= 1e-11


def test_blossom_degree_one_closed_form(rng):
    curve = HGammaCurve(TRIG, 1, 0.2, (0.0, 1.1), [[1.0, 2.0], [3.0, -1.0]])
    a, b = curve.interval
    for t in rng.uniform(0, 1.1, size=5):
        want = (
            d_form(TRIG, t, b) * curve.controls[0]
            + d_form(TRIG, a, t) * curve.controls[1]
        ) / d_form(TRIG, a, b)
        got = blossom_from_controls(curve, [OnCurve(float(t))])
        assert np.max(np.abs(got - want)) < 1e-14


def test_blossom_symmetry_under_permutations(family, rng):
    for n in (3, 5):
        curve = make_curve(rng, family, n=n)
        args = [OnCurve(inside(rng, curve)) for _ in range(n)]
        base = blossom_from_controls(curve, args)
        scale = max(1.0, float(np.max(np.abs(base))))
        for perm in itertools.permutations(args):
            val = blossom_from_controls(curve, list(perm))
            assert np.max(np.abs(val - base)) / scale <= 1e-10


def test_blossom_multilinearity(family, rng):
    curve = make_curve(rng, family, n=3)
    args = [OnCurve(inside(rng, curve)) for _ in range(3)]
    for slot in range(3):
        w1 = Raw(*rng.uniform(-1, 1, size=2))
        w2 = Raw(*rng.uniform(-1, 1, size=2))
        alpha, beta = rng.uniform(-2, 2, size=2)
        combo = Raw(alpha * w1.u + beta * w2.u, alpha * w1.v + beta * w2.v)
        lhs = blossom_from_controls(curve, args[:slot] + [combo] + args[slot + 1 :])
        rhs = alpha * blossom_from_controls(
            curve, args[:slot] + [w1] + args[slot + 1 :]
        ) + beta * blossom_from_controls(curve, args[:slot] + [w2] + args[slot + 1 :])
        scale = max(1.0, float(np.max(np.abs(lhs))))
        assert np.max(np.abs(lhs - rhs)) / scale <= 1e-10


def test_blossom_arity_mismatch(rng):
    curve = make_curve(rng, TRIG, n=3)
    with pytest.raises(ArityMismatch):
        blossom_from_controls(curve, [OnCurve(0.5)])


def test_diagonal_check_at_endpoint(family, rng):
    curve = make_curve(rng, family)
    a, _ = curve.interval
    assert blossom_diagonal_check(curve, a) <= 1e-10


def test_diagonal_check_random_points(family, rng):
    for _ in range(5):
        curve = make_curve(rng, family, n=int(rng.integers(1, 5)))
        t = inside(rng, curve)
        assert blossom_diagonal_check(curve, t) <= 1e-10


def test_diagonal_classical_de_casteljau():
    curve = HGammaCurve(POLY, 2, 0.0, (0.0, 1.0), [[0.0], [1.0], [0.0]])
    assert blossom_diagonal_check(curve, 0.5) <= 1e-12


# --- Example 9 identity ------------------------------------------------------

def test_blossom_of_shifted_product_factorizes(family, rng):
    # the blossom of t -> (d(t,x))^n_h at raw pairs is
    # prod_k (gamma2(x) u_k - gamma1(x) v_k); controls come from the
    # dual-functional coefficients of that function
    from hgamma.verify import random_params

    for n in (2, 3):
        h, a, b = random_params(rng, family, n)
        x = float(rng.uniform(-1, 1))
        controls = marsden_coefficients(family, n, h, a, b, x)
        curve = HGammaCurve(family, n, h, (a, b), controls[:, None])
        pairs = [tuple(rng.uniform(-1, 1, size=2)) for _ in range(n)]
        got = blossom_from_controls(curve, [Raw(u, v) for u, v in pairs])
        g1x, g2x = eval_gamma(family, x)
        want = math.prod(g2x * u - g1x * v for u, v in pairs)
        assert abs(float(got[0]) - want) <= 1e-10 * (1 + abs(want))


# --- pairings ----------------------------------------------------------------

def test_pairings_n2():
    assert pairings(2) == [[(1, 2)]]


def test_pairings_n4_explicit():
    assert pairings(4) == [
        [(1, 2), (3, 4)],
        [(1, 3), (2, 4)],
        [(1, 4), (2, 3)],
    ]


def test_pairings_n6_count_and_coverage():
    result = pairings(6)
    assert len(result) == 15  # (6-1)!! = 15
    for matching in result:
        seen = sorted(i for pair in matching for i in pair)
        assert seen == [1, 2, 3, 4, 5, 6]


@settings(max_examples=10, deadline=None)
@given(n=st.sampled_from([2, 4, 6, 8]))
def test_pairings_double_factorial_count(n):
    count = len(pairings(n))
    expected = math.prod(range(n - 1, 0, -2))
    assert count == expected


def test_pairings_odd_rejected():
    with pytest.raises(OddArity):
        pairings(3)


def test_pairings_cap():
    with pytest.raises(ValueError):
        pairings(14)


# --- unity_normalizer ---------------------------------------------------------

def test_unity_normalizer_sec_h():
    for h in (0.2, 0.9, -0.6):
        assert abs(unity_normalizer(TRIG, 2, h) - 1.0 / math.cos(h)) < 1e-13


def test_unity_normalizer_sec_pi_third_is_two():
    assert abs(unity_normalizer(TRIG, 2, math.pi / 3) - 2.0) <= 1e-12


def test_unity_normalizer_n4_formula():
    h = 0.37
    want = 1.0 / (math.cos(h) ** 2 + math.cos(2 * h) ** 2 + math.cos(3 * h) * math.cos(h))
    assert abs(unity_normalizer(TRIG, 4, h) - want) < 1e-13


def test_unity_normalizer_undefined_near_singular_h():
    with pytest.raises(UnityUndefined):
        unity_normalizer(TRIG, 2, math.pi / 2)


def test_unity_normalizer_unsupported():
    with pytest.raises(UnsupportedFamily):
        unity_normalizer(POLY, 2, 0.1)
    with pytest.raises(UnsupportedFamily):
        unity_normalizer(ALL_FAMILIES["exp_weighted"], 2, 0.1)
    with pytest.raises(UnsupportedFamily):
        unity_normalizer(TRIG, 3, 0.1)


def test_unity_normalizer_diagonal_reduces_to_one(rng):
    # pairing-form blossom of 1, evaluated at the shifted diagonal, is 1
    for name in ("trig", "trig_discrete", "hyperbolic", "hyperbolic_discrete"):
        fam = ALL_FAMILIES[name]
        for n in (2, 4):
            h = float(rng.uniform(-0.4, 0.4))
            t = float(rng.uniform(-1, 1))
            c = unity_normalizer(fam, n, h)
            nodes = [t - i * h for i in range(n)]
            assert abs(c * pairing_sum(fam, nodes) - 1.0) < 1e-11
