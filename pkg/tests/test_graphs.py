import json

import pytest

from anntl.graphs import (PointedBipartiteGraph, all_starts_dims,
                          all_starts_dims_bruteforce, builtin_graph,
                          char_poly, count_roots_in, loop_counts,
                          loop_counts_bruteforce, orbit_census,
                          rotation_census, screen_principal_graph,
                          spectral_data)
from anntl.scalars import cyclo


def test_builtin_shapes():
    e6 = builtin_graph("E6")
    assert len(e6.vertices()) == 6 and len(e6.edges) == 5
    e7 = builtin_graph("E7")
    assert len(e7.vertices()) == 7
    e8 = builtin_graph("E8")
    assert len(e8.vertices()) == 8
    a5 = builtin_graph("A5")
    assert len(a5.vertices()) == 5 and len(a5.edges) == 4
    d5 = builtin_graph("D5")
    degrees = sorted(len(d5.neighbors(v)) for v in d5.vertices())
    assert degrees == [1, 1, 1, 2, 3]
    with pytest.raises(ValueError):
        builtin_graph("Z9")


def test_single_edge_loop_counts():
    assert loop_counts(builtin_graph("A2"), 6) == [1] * 7


def test_extreme_basepoint_loop_counts():
    assert loop_counts(builtin_graph("E6"), 5) == [1, 1, 2, 6, 21, 77]
    assert loop_counts(builtin_graph("E7"), 5) == [1, 1, 2, 5, 15, 51]
    assert loop_counts(builtin_graph("E8"), 6) == [1, 1, 2, 5, 14, 43, 143]


def test_loop_counts_against_walk_enumeration():
    for name in ("A4", "D5", "E6", "E7"):
        g = builtin_graph(name)
        assert loop_counts(g, 5) == loop_counts_bruteforce(g, 5)
        assert all_starts_dims(g, 4) == all_starts_dims_bruteforce(g, 4)


def test_all_starts_dims():
    assert all_starts_dims(builtin_graph("E8"), 5) == [4, 7, 21, 73, 269, 1022]
    d6 = all_starts_dims(builtin_graph("E6"), 3)
    # exact level-2 value is 15 (both methods agree); level 3 is 53
    assert d6 == [3, 5, 15, 53]


def test_spectral_data_e6():
    s = spectral_data(builtin_graph("E6"))
    assert s.char_poly_gram == [-1, 5, -5, 1]  # (t-1)(t**2-4t+1)
    q = cyclo(24, 1)
    delta = q + q.conj()
    mu = q**5 + q**-5
    assert s.is_eigenvalue(1)
    assert s.is_eigenvalue(delta * delta)
    assert s.is_eigenvalue(mu * mu)
    assert mu * delta == 1
    assert not s.norm_greater_than_two
    lo, hi = s.norm_squared_bracket
    assert lo <= 4 <= hi or hi <= 4  # norm at most 2


def test_spectral_data_e8_largest_root():
    s = spectral_data(builtin_graph("E8"))
    q = cyclo(60, 1)
    delta = q + q.conj()
    assert s.is_eigenvalue(delta * delta)  # 4 cos(pi/30)**2
    lo, hi = s.norm_squared_bracket
    d2 = (delta * delta).to_complex().real
    assert float(lo) <= d2 <= float(hi)


def test_a3_norm():
    s = spectral_data(builtin_graph("A3"))
    assert s.char_poly_gram == [-2, 1]
    lo, hi = s.norm_squared_bracket
    assert float(lo) <= 2 <= float(hi)


def char_poly_of_gram(g):
    from anntl.graphs import _mat_mul, _transpose

    lam = g.biadjacency()
    return char_poly(_mat_mul(_transpose(lam), lam))


def test_newton_trace_identity():
    # power sums of the exact char-poly roots equal the trace sequence,
    # checked through Newton's identities with no floating point
    for name in ("E6", "E8", "D4"):
        g = builtin_graph(name)
        p = char_poly_of_gram(g)
        n = len(p) - 1
        e = [(-1) ** i * p[n - i] for i in range(n + 1)]  # elementary symmetric
        power_sums = []
        for k in range(1, n + 1):
            s = (-1) ** (k - 1) * k * e[k]
            for i in range(1, k):
                s += (-1) ** (i - 1) * e[i] * power_sums[k - i - 1]
            power_sums.append(s)
        traces = all_starts_dims(g, n)[1:]
        assert traces == power_sums


def test_sturm_counts():
    # (t-1)(t-2)(t-3): three roots above 0, one above 2.5
    p = [-6, 11, -6, 1]
    assert count_roots_in(p, 0, 10) == 3
    assert count_roots_in(p, 2.5, 10) == 1


def test_rotation_census_e8():
    c = rotation_census(builtin_graph("E8"), 5)
    assert c["fixed"] == 7
    assert c["orbit_sizes"] == {1: 7, 5: 203}
    assert c["total"] == 1022


def test_rotation_census_e6():
    c = rotation_census(builtin_graph("E6"), 3)
    assert c["multiplicities"] == {0: 21, 1: 16, 2: 16}
    c2 = rotation_census(builtin_graph("E6"), 2)
    assert c2["fixed"] == 5  # one fixed loop per edge


def test_census_multiplicities_sum():
    for name in ("E6", "E8"):
        g = builtin_graph(name)
        for k in (1, 2, 3, 4, 5):
            c = rotation_census(g, k)
            assert sum(c["multiplicities"].values()) == c["total"]


def test_screen_long_path_passes():
    rep = screen_principal_graph(builtin_graph("A12"), 8)
    assert rep["first_negative"] is None
    assert rep["multiplicities"] == [1] + [0] * 8
    assert not rep["norm_greater_than_two"]


def test_screen_e_cases():
    rep = screen_principal_graph(builtin_graph("E6"), 4)
    assert rep["multiplicities"][:4] == [1, 0, 0, 1]
    assert "norm <= 2" in rep["verdict"]
    rep = screen_principal_graph(builtin_graph("E7"), 4)
    assert rep["multiplicities"] == [1, 0, 0, 0, 1]


def test_screen_norm_greater_two_reports_obstruction_index():
    # star with five arms has norm sqrt(5) > 2; screen must apply the test
    star5 = PointedBipartiteGraph(
        ("c",), ("l1", "l2", "l3", "l4", "l5"),
        tuple(("c", f"l{i}") for i in range(1, 6)), "c")
    rep = screen_principal_graph(star5, 4)
    assert rep["norm_greater_than_two"]
    assert rep["verdict"].startswith(("obstruction", "passes"))


def test_graph_json_roundtrip(tmp_path):
    g = builtin_graph("E7")
    path = tmp_path / "g.json"
    path.write_text(json.dumps(g.to_json()))
    g2 = PointedBipartiteGraph.from_file(path)
    assert g2 == g
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValueError):
        PointedBipartiteGraph.from_file(bad)
    with pytest.raises(ValueError):
        PointedBipartiteGraph.from_json({"even": [], "odd": [], "edges": []})


def test_graph_validation():
    with pytest.raises(ValueError):
        PointedBipartiteGraph(("a",), ("b",), (("a", "b"),), "b")  # basepoint odd
    with pytest.raises(ValueError):
        PointedBipartiteGraph(("a", "b"), (), (("a", "b"),), "a")  # edge inside class


def test_orbit_census_generic():
    items = list(range(6))
    c = orbit_census(items, lambda x: (x + 2) % 6)
    assert c["orbit_sizes"] == {3: 2}
