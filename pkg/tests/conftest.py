import itertools

import numpy as np
import pytest

from hgamma import FamilySpec

ALL_FAMILIES = {
    "polynomial": FamilySpec("polynomial"),
    "trig": FamilySpec("trig"),
    "trig_discrete": FamilySpec("trig_discrete", d_param=0.5),
    "hyperbolic": FamilySpec("hyperbolic"),
    "hyperbolic_discrete": FamilySpec("hyperbolic_discrete", d_param=0.5),
    "exp_weighted": FamilySpec("exp_weighted", inner=FamilySpec("trig")),
}


@pytest.fixture(params=list(ALL_FAMILIES), ids=list(ALL_FAMILIES))
def family(request):
    return ALL_FAMILIES[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def subset_blossom(coeffs, pairs):
    """Brute-force blossom: sum_k c_k sum_{|J|=k} prod_{J} u prod_{J'} v."""
    n = len(pairs)
    total = 0.0
    for k in range(n + 1):
        s = 0.0
        for J in itertools.combinations(range(n), k):
            prod = 1.0
            for i in range(n):
                prod *= pairs[i][0] if i in J else pairs[i][1]
            s += prod
        total += coeffs[k] * s
    return total
