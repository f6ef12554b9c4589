import random
from math import comb

import pytest

from anntl.scalars import Rat
from anntl.series import (IntSeries, annular_multiplicities, catalan_series,
                          constant, module_dim_series, monomial,
                          poincare_series, sqrt_inv_series, theta_transform)


def test_catalan_and_central_binomials():
    assert catalan_series(8).ints() == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    assert sqrt_inv_series(6).ints() == [1, 2, 6, 20, 70, 252, 924]


def test_zc2_identity():
    c = catalan_series(12)
    assert (c * c).shift(1) == c - constant(1, 12)


def test_sqrt_inv_squares_to_geometric():
    s = sqrt_inv_series(10)
    sq = s * s
    assert sq.ints() == [4**n for n in range(11)]


def test_series_inverse_and_compose():
    one_plus = constant(1, 8) + monomial(1, 8)
    assert (one_plus * one_plus.inverse()) == constant(1, 8)
    inner = monomial(1, 8) * one_plus.inverse()  # z/(1+z)
    geom = constant(1, 8) * (constant(1, 8) - monomial(1, 8)).inverse()
    assert geom.compose(inner) == one_plus
    with pytest.raises(ValueError):
        geom.compose(one_plus)


def test_theta_of_catalan_is_one():
    th = theta_transform(catalan_series(16))
    assert th.ints() == [1] + [0] * 16


def test_closed_form_matches_transform():
    rng = random.Random(3)
    for _ in range(100):
        dims = [1] + [rng.randint(0, 20) for _ in range(rng.randint(3, 9))]
        order = len(dims) - 1
        th = theta_transform(poincare_series(dims, order))
        assert annular_multiplicities(dims, order) == th.ints()


def test_multiplicities_require_unit_constant():
    with pytest.raises(ValueError):
        annular_multiplicities([2, 1, 1], 2)


def test_binomial_identity_from_proof():
    # (a choose j) + (a-1 choose j-1) = ((a+j)/a) (a choose j), a=j=0 excluded
    rng = random.Random(4)
    for _ in range(100):
        a = rng.randint(1, 30)
        j = rng.randint(0, a)
        lhs = Rat(comb(a, j) + (comb(a - 1, j - 1) if j >= 1 else 0))
        rhs = Rat(a + j, a) * comb(a, j)
        assert lhs == rhs


def test_module_dim_series_coefficients():
    for k in range(1, 5):
        coeffs = module_dim_series(k, 12).ints()
        for m in range(13):
            assert coeffs[m] == (comb(2 * m, m - k) if m >= k else 0)


def test_dimension_additive():
    a = module_dim_series(1, 10)
    b = module_dim_series(2, 10)
    total = a + b
    assert total.ints() == [x + y for x, y in zip(a.ints(), b.ints())]


def test_truncation_and_arithmetic():
    c = catalan_series(6)
    assert c.truncate(3).ints() == [1, 1, 2, 5]
    assert (c - c).ints() == [0] * 7
    assert c.scale(2).ints() == [2 * x for x in c.ints()]
    assert IntSeries((1, 2)).pow(2).ints() == [1, 4]
