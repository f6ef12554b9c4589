"""Pointed bipartite graphs: loop counts, spectra, rotation censuses, screening.

A graph is ingested from JSON as ``{"even": [...], "odd": [...], "edges":
[[u, v], ...], "basepoint": name}`` with the basepoint in the even class.
Built-ins cover the A, D, E Coxeter graphs with the basepoint at maximal
distance from the triple point (for A_n, at an end).

All counting is exact integer arithmetic; spectral statements about the
biadjacency matrix are made through its integer characteristic polynomial
(candidate eigenvalues are checked by exact cyclotomic substitution, and
the graph norm is bracketed by Sturm-certified rational bisection).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .scalars import CycloNumber, Rat, is_zero
from .series import annular_multiplicities


@dataclass(frozen=True)
class PointedBipartiteGraph:
    even: tuple[str, ...]
    odd: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    basepoint: str

    def __post_init__(self):
        ev, od = set(self.even), set(self.odd)
        if ev & od:
            raise ValueError("even and odd classes overlap")
        for u, v in self.edges:
            if not ((u in ev and v in od) or (u in od and v in ev)):
                raise ValueError(f"edge {u}-{v} does not cross the bipartition")
        if self.basepoint not in ev:
            raise ValueError("basepoint must lie in the even class")
        if len(self.vertices()) > 1 and not self._connected():
            raise ValueError("graph must be connected")

    def vertices(self) -> list[str]:
        return list(self.even) + list(self.odd)

    def neighbors(self, v: str) -> list[str]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            if b == v:
                out.append(a)
        return out

    def _connected(self) -> bool:
        seen = {self.basepoint}
        stack = [self.basepoint]
        while stack:
            for w in self.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices())

    def adjacency(self):
        """Full symmetric adjacency matrix over the vertex order of vertices()."""
        verts = self.vertices()
        idx = {v: i for i, v in enumerate(verts)}
        n = len(verts)
        a = [[0] * n for _ in range(n)]
        for u, v in self.edges:
            a[idx[u]][idx[v]] += 1
            a[idx[v]][idx[u]] += 1
        return a, idx

    def biadjacency(self):
        """Rows indexed by the even class, columns by the odd class."""
        rows = []
        for u in self.even:
            row = []
            for v in self.odd:
                row.append(sum(1 for a, b in self.edges if {a, b} == {u, v}))
            rows.append(row)
        return rows

    def to_json(self) -> dict:
        return {
            "even": list(self.even),
            "odd": list(self.odd),
            "edges": [list(e) for e in self.edges],
            "basepoint": self.basepoint,
        }

    @staticmethod
    def from_json(data) -> "PointedBipartiteGraph":
        for field_name in ("even", "odd", "edges", "basepoint"):
            if field_name not in data:
                raise ValueError(f"graph JSON missing field {field_name!r}")
        return PointedBipartiteGraph(
            tuple(data["even"]),
            tuple(data["odd"]),
            tuple((u, v) for u, v in data["edges"]),
            data["basepoint"],
        )

    @staticmethod
    def from_file(path) -> "PointedBipartiteGraph":
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as e:
                raise ValueError(f"malformed graph JSON ({e})") from e
        return PointedBipartiteGraph.from_json(data)


def _path_edges(names):
    return [(names[i], names[i + 1]) for i in range(len(names) - 1)]


def _bipartition(names, edges, basepoint):
    dist = {basepoint: 0}
    frontier = [basepoint]
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    even = tuple(v for v in names if dist[v] % 2 == 0)
    odd = tuple(v for v in names if dist[v] % 2 == 1)
    return even, odd


def _make(names, edges, basepoint):
    even, odd = _bipartition(names, edges, basepoint)
    return PointedBipartiteGraph(even, odd, tuple(edges), basepoint)


def builtin_graph(name: str) -> PointedBipartiteGraph:
    """A_n, D_n, E6, E7, E8 with documented labels and extreme basepoint.

    A_n: path v0..v{n-1}, basepoint v0.  D_n: path v0..v{n-3} with two extra
    vertices u1, u2 on v{n-3}, basepoint v0.  E6/E7/E8: the long arm ends at
    v0 (the basepoint, at maximal distance from the triple point t); arms
    run v0..t, then t-a1-a2 and t-b1.
    """
    name = name.strip().upper().replace("_", "")
    if name.startswith("A") and name[1:].isdigit():
        n = int(name[1:])
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        names = [f"v{i}" for i in range(n)]
        return _make(names, _path_edges(names), "v0")
    if name.startswith("D") and name[1:].isdigit():
        n = int(name[1:])
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        spine = [f"v{i}" for i in range(n - 2)]
        edges = _path_edges(spine) + [(spine[-1], "u1"), (spine[-1], "u2")]
        return _make(spine + ["u1", "u2"], edges, "v0")
    if name in ("E6", "E7", "E8"):
        arm = {"E6": 2, "E7": 3, "E8": 4}[name]
        spine = [f"v{i}" for i in range(arm + 1)]  # v0 .. t=v{arm}
        t = spine[-1]
        names = spine + ["a1", "a2", "b1"]
        edges = _path_edges(spine) + [(t, "a1"), ("a1", "a2"), (t, "b1")]
        return _make(names, edges, "v0")
    raise ValueError(f"unknown builtin graph {name!r}")


def _mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(p):
                    oi[j] += x * bk[j]
    return out


def loop_counts(g: PointedBipartiteGraph, n_max: int) -> list[int]:
    """w_n = number of closed walks of length 2n at the basepoint, n = 0..n_max."""
    a, idx = g.adjacency()
    b = idx[g.basepoint]
    out = [1]
    power = None
    a2 = _mat_mul(a, a)
    power = a2
    for _ in range(n_max):
        out.append(power[b][b])
        power = _mat_mul(power, a2)
    return out[: n_max + 1]


def loop_counts_bruteforce(g: PointedBipartiteGraph, n_max: int) -> list[int]:
    """Walk enumeration oracle for small lengths; must agree with loop_counts."""
    out = [1]
    for n in range(1, n_max + 1):
        out.append(sum(1 for _ in closed_walks(g, 2 * n, g.basepoint)))
    return out


def closed_walks(g: PointedBipartiteGraph, length: int, start: str):
    adj = {v: tuple(g.neighbors(v)) for v in g.vertices()}

    def rec(v, steps, trail):
        if steps == length:
            if v == start:
                yield trail
            return
        for w in adj[v]:
            yield from rec(w, steps + 1, trail + (w,))

    yield from rec(start, 0, (start,))


def all_starts_dims(g: PointedBipartiteGraph, n_max: int) -> list[int]:
    """d_n = total closed 2n-walks from the even class = trace((L L^T)^n)."""
    a, idx = g.adjacency()
    a2 = _mat_mul(a, a)
    ev = [idx[v] for v in g.even]
    out = [len(ev)]
    power = a2
    for _ in range(n_max):
        out.append(sum(power[i][i] for i in ev))
        power = _mat_mul(power, a2)
    return out[: n_max + 1]


def all_starts_dims_bruteforce(g: PointedBipartiteGraph, n_max: int) -> list[int]:
    out = [len(g.even)]
    for n in range(1, n_max + 1):
        out.append(sum(sum(1 for _ in closed_walks(g, 2 * n, v)) for v in g.even))
    return out


# ---------------------------------------------------------------------------
# spectra


def char_poly(matrix) -> list[int]:
    """Characteristic polynomial det(tI - M), ascending integer coefficients
    (Faddeev-LeVerrier)."""
    n = len(matrix)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    a = [[Fraction(x) for x in row] for row in matrix]
    ident = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    c = Fraction(1)
    mk = ident
    for k in range(1, n + 1):
        if k == 1:
            mk = ident
        else:
            am = _mat_mul(a, mk_prev)
            mk = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
        am2 = _mat_mul(a, mk)
        c = -Fraction(sum(am2[i][i] for i in range(n)), k)
        coeffs[n - k] = c
        mk_prev = mk
    out = []
    for x in coeffs:
        if x.denominator != 1:
            raise AssertionError("characteristic polynomial not integral")
        out.append(int(x))
    return out


def poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sturm_chain(p):
    def deriv(q):
        return [Fraction(i * q[i]) for i in range(1, len(q))]

    def rem(a, b):
        a = [Fraction(x) for x in a]
        while len(a) >= len(b) and any(a):
            while a and a[-1] == 0:
                a.pop()
            if len(a) < len(b):
                break
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, x in enumerate(b):
                a[i + shift] -= f * x
            while a and a[-1] == 0:
                a.pop()
        return a

    chain = [[Fraction(x) for x in p]]
    chain.append(deriv(chain[0]))
    while len(chain[-1]) > 1 or (chain[-1] and chain[-1][0] != 0):
        r = rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-x for x in r])
    return [c for c in chain if c]


def _sign_changes(chain, x):
    signs = []
    for c in chain:
        v = poly_eval(c, Fraction(x))
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(p, a, b) -> int:
    """Number of distinct real roots of p in (a, b], by Sturm's theorem."""
    chain = _sturm_chain(p)
    return _sign_changes(chain, a) - _sign_changes(chain, b)


@dataclass
class SpectralData:
    char_poly_gram: list[int]  # det(tI - L^T L), integer coefficients
    norm_squared_bracket: tuple  # rational (lo, hi) enclosing the largest root
    norm_greater_than_two: bool

    def is_eigenvalue(self, value) -> bool:
        """Exact membership test for a candidate eigenvalue of L^T L."""
        acc = poly_eval([Rat(c) for c in self.char_poly_gram], value)
        return is_zero(acc) if isinstance(acc, CycloNumber) else acc == 0


def spectral_data(g: PointedBipartiteGraph, bracket_bits: int = 32) -> SpectralData:
    lam = g.biadjacency()
    ltl = _mat_mul(_transpose(lam), lam)
    p = char_poly(ltl)
    bound = Fraction(max(1, 1 + max(abs(c) for c in p)))
    lo, hi = Fraction(0), bound
    for _ in range(bracket_bits):
        mid = (lo + hi) / 2
        if count_roots_in(p, mid, hi) > 0:
            lo = mid
        else:
            hi = mid
    norm_gt_two = count_roots_in(p, Fraction(4), bound) > 0
    return SpectralData(p, (lo, hi), norm_gt_two)


def _transpose(m):
    return [list(row) for row in zip(*m)]


# ---------------------------------------------------------------------------
# rotation censuses


def rotation_census(g: PointedBipartiteGraph, k: int) -> dict:
    """Census of the shift-by-two rotation on closed 2k-walks from the even class.

    Returns fixed-point count, orbit sizes, and the exact multiplicity of
    each k-th root of unity in the permutation representation.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    walks = set()
    for v in g.even:
        for trail in closed_walks(g, 2 * k, v):
            walks.add(trail[:-1])
    orbits = {}
    seen = set()
    for w in walks:
        if w in seen:
            continue
        orbit = set()
        cur = w
        while cur not in orbit:
            orbit.add(cur)
            cur = cur[2:] + cur[:2]
        for x in orbit:
            seen.add(x)
        orbits[len(orbit)] = orbits.get(len(orbit), 0) + 1
    mult = {}
    for j in range(k):
        total = 0
        for size, count in orbits.items():
            if (j * size) % k == 0:
                total += count
        mult[j] = total
    return {
        "k": k,
        "total": len(walks),
        "fixed": orbits.get(1, 0),
        "orbit_sizes": dict(sorted(orbits.items())),
        "multiplicities": mult,
    }


def orbit_census(items, step, key=lambda x: x) -> dict:
    """Fixed points and orbit sizes of the permutation generated by step."""
    index = {key(x) for x in items}
    orbits = {}
    seen = set()
    for x in items:
        if key(x) in seen:
            continue
        size = 0
        cur = x
        while key(cur) not in seen:
            seen.add(key(cur))
            size += 1
            cur = step(cur)
            if key(cur) not in index:
                raise AssertionError("step left the set")
        orbits[size] = orbits.get(size, 0) + 1
    return {
        "total": len(list(items)),
        "fixed": orbits.get(1, 0),
        "orbit_sizes": dict(sorted(orbits.items())),
    }


# ---------------------------------------------------------------------------
# screening


def screen_principal_graph(g: PointedBipartiteGraph, r_max: int) -> dict:
    """Annular multiplicity screen for a candidate principal graph.

    Computes the based loop counts w_n, their multiplicity sequence a_r, and
    reports the first negative a_r as an obstruction.  The test only
    applies to graphs of norm > 2; below that the norm condition itself is
    reported.
    """
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    spec = spectral_data(g)
    w = loop_counts(g, r_max)
    a = annular_multiplicities(w, r_max)
    first_negative = next((r for r, x in enumerate(a) if x < 0), None)
    if not spec.norm_greater_than_two:
        verdict = "norm <= 2: annular multiplicity test not applicable"
    elif first_negative is not None:
        verdict = f"obstruction: a_{first_negative} = {a[first_negative]} < 0"
    else:
        verdict = f"passes through r = {r_max}"
    return {
        "loop_counts": w,
        "multiplicities": a,
        "first_negative": first_negative,
        "norm_greater_than_two": spec.norm_greater_than_two,
        "verdict": verdict,
    }
