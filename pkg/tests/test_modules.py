import random
from math import comb, lcm

import pytest

from anntl import annular as ann
from anntl.modules import (ModuleVector, act, act_word, ad_rho_half,
                           basis_vector, dimension_table, gram, inner_product,
                           level_of_boundary, low_weight, lowest_weight_test,
                           lowest_weight_vector, module_basis, mu_module,
                           positivity_profile, rotation_census_basis,
                           zero_module)
from anntl.scalars import Rat, cyclo, is_zero, two_cos_pi_over

D3 = Rat(3)


def test_basis_sizes():
    assert len(module_basis(low_weight(2, 1, D3), 3)) == comb(6, 1)
    assert len(module_basis(low_weight(1, 1, D3), 5)) == comb(10, 4)
    assert len(module_basis(mu_module(Rat(1), D3), 2)) == comb(4, 2)
    assert len(module_basis(zero_module(True, D3), 2)) == comb(4, 2) // 2
    assert len(module_basis(mu_module(Rat(1), D3), "+")) == 1
    assert len(module_basis(mu_module(Rat(1), D3), "-")) == 1
    assert len(module_basis(zero_module(True, D3), "+")) == 1
    assert len(module_basis(zero_module(True, D3), "-")) == 0
    with pytest.raises(ValueError):
        module_basis(low_weight(3, cyclo(3, 1), D3), 2)


def test_lowest_weight_vector_properties():
    for k, omega in [(1, 1), (2, -1), (3, cyclo(3, 1))]:
        spec = low_weight(k, omega, D3)
        psi = lowest_weight_vector(spec)
        assert inner_product(psi, psi) == 1
        assert lowest_weight_test(psi)
        assert act(ann.rho(k), psi) == psi.scale(omega)
        # a cup image is no longer lowest weight
        up = act(ann.epsbar(k, 2), psi)
        assert not lowest_weight_test(up)
    assert lowest_weight_test(ModuleVector(low_weight(2, 1, D3), 2, {}))


def test_action_respects_through_count():
    spec = low_weight(2, -1, D3)
    psi = lowest_weight_vector(spec)
    for i in range(1, 5):
        assert act(ann.eps(2, i), psi).is_zero()


def test_invariance_of_inner_product():
    rng = random.Random(5)
    specs = [low_weight(1, 1, D3), low_weight(2, -1, D3),
             low_weight(3, cyclo(3, 1), D3),
             mu_module(Rat(1), D3), zero_module(True, D3), zero_module(False, D3)]
    for spec in specs:
        start = spec.k if spec.kind == "low" else 1
        for m in (start, start + 1):
            basis = module_basis(spec, m)
            v = ModuleVector(spec, m, {rng.choice(basis): Rat(2),
                                       rng.choice(basis): Rat(3, 5)})
            tangles = [ann.eps(m, rng.randint(1, 2 * m)),
                       ann.epsbar(m, rng.randint(1, 2 * m + 2)),
                       ann.rho(m), ann.cap_pair(m, rng.randint(1, 2 * m))]
            if spec.kind != "low" and m == 1:
                tangles.append(ann.eps(m, 1))
            for T in tangles:
                lvl = level_of_boundary(T)
                if spec.kind == "low" and (lvl in ("+", "-") or lvl < spec.k):
                    continue
                target = module_basis(spec, lvl)
                if not target:
                    continue
                w = ModuleVector(spec, lvl, {rng.choice(target): Rat(1)})
                assert inner_product(act(T, v), w) == inner_product(v, act(ann.star(T), w))


def test_action_composition_compatibility():
    rng = random.Random(9)
    specs = [low_weight(2, -1, D3), mu_module(Rat(1), D3), zero_module(False, D3)]
    for spec in specs:
        start = spec.k if spec.kind == "low" else 1
        checked = 0
        while checked < 40:
            m0 = rng.choice([start, start + 1])
            v = basis_vector(spec, m0, rng.randrange(len(module_basis(spec, m0))))
            t1_choices = [ann.rho(m0), ann.cap_pair(m0, rng.randint(1, 2 * m0)),
                          ann.epsbar(m0, rng.randint(1, 2 * m0 + 2)),
                          ann.eps(m0, rng.randint(1, 2 * m0))]
            T1 = rng.choice(t1_choices)
            lvl1 = level_of_boundary(T1)
            if spec.kind == "low" and (lvl1 in ("+", "-") or lvl1 < spec.k):
                continue
            if lvl1 in ("+", "-"):
                continue
            T2 = rng.choice([ann.rho(T1.m), ann.cap_pair(T1.m, rng.randint(1, 2 * T1.m)),
                             ann.epsbar(T1.m, rng.randint(1, 2 * T1.m + 2))])
            lvl2 = level_of_boundary(T2)
            if spec.kind == "low" and (lvl2 in ("+", "-") or lvl2 < spec.k):
                continue
            w = ann.compose(T2, T1, D3)
            assert act(T2, act(T1, v)) == act(w.diagram, v).scale(w.weight)
            checked += 1


def test_act_word_order():
    spec = mu_module(Rat(1), D3)
    v = basis_vector(spec, 2, 0)
    seq = [ann.rho(2), ann.cap_pair(2, 1)]
    assert act_word(seq, v) == act(seq[0], act(seq[1], v))


def test_sigma_acts_by_mu_squared():
    spec = mu_module(Rat(5), D3)
    unit_plus = basis_vector(spec, "+")
    out = act(ann.sigma("-"), act(ann.sigma("+"), unit_plus))
    assert out == unit_plus.scale(Rat(25))
    unit_minus = basis_vector(spec, "-")
    out = act(ann.sigma("+"), act(ann.sigma("-"), unit_minus))
    assert out == unit_minus.scale(Rat(25))


def test_zero_module_kills_circles():
    spec = zero_module(True, D3)
    unit = basis_vector(spec, "+")
    assert act(ann.sigma("+"), unit).is_zero()


def test_gram_examples():
    g = gram(low_weight(2, -1, D3), 2)
    assert g.dimension == 1 and g.matrix[0][0] == 1
    g = gram(low_weight(1, 1, D3), 2)
    assert g.dimension == 4 and g.positive_definite
    g = gram(mu_module(Rat(1), D3), 1)
    assert g.dimension == 2 and g.positive_definite
    assert sorted(str(x) for row in g.matrix for x in row) == ["1", "1", "3", "3"]


def test_gram_hermitian():
    from anntl.scalars import conjugate

    g = gram(low_weight(3, cyclo(3, 1), D3), 4)
    n = g.dimension
    for i in range(n):
        for j in range(n):
            assert g.matrix[i][j] == conjugate(g.matrix[j][i])


def test_positivity_profile_generic():
    rep = positivity_profile(low_weight(1, 1, D3), 4)
    assert all(r["verdict"] == "positive definite" for r in rep)
    rep = positivity_profile(zero_module(True, Rat(2)), 3)
    for r in rep:
        if r["dimension"]:
            assert r["verdict"] == "positive definite"


def test_positivity_profile_degenerate_case():
    spec = low_weight(3, cyclo(3, 1), two_cos_pi_over(12))
    rep = positivity_profile(spec, 4)
    last = rep[-1]
    assert last["level"] == 4 and last["corank"] == 1
    assert last["verdict"].startswith("positive semidefinite")


def test_e7_level_nondegenerate():
    spec = low_weight(4, cyclo(4, 1), two_cos_pi_over(18))
    g = gram(spec, 5)
    assert g.rank == g.dimension == 10


def test_ad_rho_half_low_weight():
    rng = random.Random(13)
    for k, omega in [(2, -1), (3, cyclo(3, 1))]:
        spec = low_weight(k, omega, D3)
        for m in (k, k + 1):
            basis = module_basis(spec, m)
            v = ModuleVector(spec, m, {rng.choice(basis): Rat(2),
                                       rng.choice(basis): Rat(-1, 3)})
            w = ModuleVector(spec, m, {rng.choice(basis): Rat(1)})
            assert inner_product(ad_rho_half(v), ad_rho_half(w)) == inner_product(v, w)
            # square is the rotation action up to the documented phase
            assert ad_rho_half(ad_rho_half(v)) == act(ann.rho(m), v).scale(omega ** (-1))
            x = v
            for _ in range(lcm(2 * m, 2 * k)):
                x = ad_rho_half(x)
            assert x == v


def test_ad_rho_half_mu():
    rng = random.Random(14)
    spec = mu_module(Rat(1), D3)
    for m in (1, 2, 3):
        basis = module_basis(spec, m)
        v = ModuleVector(spec, m, {rng.choice(basis): Rat(2), rng.choice(basis): Rat(7)})
        w = ad_rho_half(v)
        assert inner_product(w, w) == inner_product(v, v)
        x = v
        for _ in range(2 * m):
            x = ad_rho_half(x)
        assert x == v


def test_ad_rho_half_rejections():
    with pytest.raises(ValueError):
        ad_rho_half(basis_vector(zero_module(True, D3), 1))
    with pytest.raises(ValueError):
        ad_rho_half(basis_vector(mu_module(Rat(0), D3), 1))


def test_rotation_census_basis():
    c = rotation_census_basis(mu_module(Rat(1), D3), 3)
    assert c["total"] == comb(6, 3)
    assert sum(size * cnt for size, cnt in c["orbit_sizes"].items()) == c["total"]


def test_dimension_table():
    rows = dimension_table(10)
    assert rows[1]["coeffs"][:6] == [1, 1, 2, 5, 14, 42]
    assert rows[2]["coeffs"][:5] == [1, 2, 6, 20, 70]
    per_k = rows[0]["series_coeffs"]
    for k, coeffs in per_k.items():
        for m, c in enumerate(coeffs):
            assert c == (comb(2 * m, m - k) if m >= k else 0)
