"""Annular (m,n)-diagrams: encoding, composition, star, generators, bases.

Encoding
--------
Picture the annulus cut open into a horizontal strip: the outer boundary is
the top line with points 0..2m-1 repeating with period 2m, the inner
boundary the bottom line with period 2n, and the vertical seam sits just
left of point 0 on both boundaries.  A diagram is stored by:

* ``thru``: through strings as pairs ``(a, u)``, outer point ``a`` in
  [0, 2m) joined to the inner point at *lift* ``u`` (an integer whose class
  mod 2n is the inner point; consecutive lifts record how the family winds
  past the seam).  Tops are sorted, the lifts are strictly increasing within
  one period, and the whole family is normalised modulo full twists so that
  the first lift lies in [0, 2n).
* ``outer_arcs`` / ``inner_arcs``: boundary-to-same-boundary arcs as pairs
  ``(p, q)`` with p in [0, 2period), p < q < p + 2period; ``q >= 2period``
  means the arc crosses the seam.
* ``circles``: count of homologically non-trivial circles (only possible
  with no through strings).  Contractible circles are never stored; they
  are converted to delta factors during composition.

Shading is not stored per region: the diagram's ``parity`` says whether the
marked outer region gets the same shading as the marked inner one (parity
0) or the opposite (parity 1).  Honest shaded tangles with points on both
boundaries have parity 0; the rotation by one has parity 1.  For a
boundary with no points the adjacent-region shading is genuine data:
``inner_shaded`` stores it for the inner boundary, and the outer value is
derived via the parity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .scalars import is_zero


@dataclass(frozen=True)
class AnnularDiagram:
    m: int
    n: int
    thru: tuple[tuple[int, int], ...] = ()
    outer_arcs: frozenset = frozenset()
    inner_arcs: frozenset = frozenset()
    circles: int = 0
    inner_shaded: bool = False

    def __post_init__(self):
        m, n = self.m, self.n
        if m < 0 or n < 0 or self.circles < 0:
            raise ValueError("bad sizes")
        t = len(self.thru)
        if 2 * len(self.outer_arcs) + t != 2 * m or 2 * len(self.inner_arcs) + t != 2 * n:
            raise ValueError("point count mismatch")
        if t and self.circles:
            raise ValueError("circles cannot coexist with through strings")
        _check_arcs(self.outer_arcs, 2 * m, [a for a, _ in self.thru])
        _check_arcs(self.inner_arcs, 2 * n, [u % (2 * n) for _, u in self.thru] if t else [])
        if t:
            tops = [a for a, _ in self.thru]
            lifts = [u for _, u in self.thru]
            if tops != sorted(set(tops)) or not all(0 <= a < 2 * m for a in tops):
                raise ValueError("through tops must be sorted distinct in range")
            if not 0 <= lifts[0] < 2 * n:
                raise ValueError("through lifts not twist-normalised")
            for i in range(1, t):
                if lifts[i] <= lifts[i - 1]:
                    raise ValueError("through lifts must increase")
            if lifts[-1] >= lifts[0] + 2 * n:
                raise ValueError("through lifts exceed one period")

    # -- derived data -------------------------------------------------------

    @property
    def through_count(self) -> int:
        return len(self.thru)

    @property
    def parity(self) -> int:
        """1 if the diagram flips shading between the marked regions."""
        cached = getattr(self, "_parity", None)
        if cached is not None:
            return cached
        p = self.circles
        m, n = self.m, self.n
        for a, u in self.thru:
            # seam crossings (x = -1/2) of the string drawn straight, all translates
            for j in range(-3, 4):
                lo = min(a + 2 * m * j, u + 2 * n * j)
                hi = max(a + 2 * m * j, u + 2 * n * j)
                if lo < 0 <= hi:
                    p += 1
        for _, q in self.outer_arcs:
            if q >= 2 * m:
                p += 1
        for _, q in self.inner_arcs:
            if q >= 2 * n:
                p += 1
        p &= 1
        object.__setattr__(self, "_parity", p)
        return p

    @property
    def outer_shaded(self) -> bool:
        return bool(self.inner_shaded ^ self.parity)

    def sort_key(self):
        return (
            self.thru,
            tuple(sorted(self.outer_arcs)),
            tuple(sorted(self.inner_arcs)),
            self.circles,
            self.inner_shaded,
        )

    def to_json(self):
        return {
            "m": self.m,
            "n": self.n,
            "through": [list(p) for p in self.thru],
            "outer_arcs": sorted(list(p) for p in self.outer_arcs),
            "inner_arcs": sorted(list(p) for p in self.inner_arcs),
            "circles": self.circles,
            "inner_shaded": self.inner_shaded,
        }

    @staticmethod
    def from_json(data) -> "AnnularDiagram":
        return AnnularDiagram(
            int(data["m"]),
            int(data["n"]),
            tuple((int(a), int(u)) for a, u in data.get("through", [])),
            frozenset((int(p), int(q)) for p, q in data.get("outer_arcs", [])),
            frozenset((int(p), int(q)) for p, q in data.get("inner_arcs", [])),
            int(data.get("circles", 0)),
            bool(data.get("inner_shaded", False)),
        )

    def __repr__(self):
        bits = f"({self.m},{self.n}) t={self.through_count}"
        if self.circles:
            bits += f" c={self.circles}"
        return f"AnnularDiagram[{bits}]"


def _check_arcs(arcs, period, blocked_classes):
    """Arcs must be in canonical range, noncrossing with all translates, and
    must not span any through endpoint."""
    if not arcs and period == 0:
        return
    blocked = set(blocked_classes)
    seen = set()
    ivs = []
    for p, q in arcs:
        if not (0 <= p < period and p < q < p + period):
            raise ValueError(f"arc out of canonical range: {(p, q)}")
        for x in (p, q % period):
            if x in seen or x in blocked:
                raise ValueError("arc endpoints collide")
            seen.add(x)
        ivs.append((p, q))
    for i, (p, q) in enumerate(ivs):
        for b in blocked:
            for j in (-1, 0, 1):
                if p < b + period * j < q:
                    raise ValueError("arc spans a through endpoint")
        for p2, q2 in ivs[i:]:
            for j in (-2, -1, 0, 1, 2):
                a, b = p2 + period * j, q2 + period * j
                if (p, q) == (a, b):
                    continue
                if (p < a < q) != (p < b < q):
                    raise ValueError(f"crossing arcs: {(p, q)} vs {(a, b)}")


def rank(d: AnnularDiagram) -> int:
    """Minimal intersections with a core circle: the through-string count."""
    return d.through_count


@dataclass(frozen=True)
class WeightedDiagram:
    """Composition output: a diagram together with the scalar it collected."""

    diagram: AnnularDiagram
    weight: object
    circles_removed: int = 0

    def __post_init__(self):
        if is_zero(self.weight):
            raise ValueError("zero weight")


# ---------------------------------------------------------------------------
# canonical assembly


def _canon_arc(pair, period):
    x, y = pair
    if x > y:
        x, y = y, x
    shift = (x % period) - x
    return (x + shift, y + shift)


def make_diagram(m, n, thru_raw, outer_raw, inner_raw, circles=0, inner_shaded=False):
    """Build the canonical diagram from strings with arbitrary lifts."""
    outer = frozenset(_canon_arc(p, 2 * m) for p in outer_raw)
    inner = frozenset(_canon_arc(p, 2 * n) for p in inner_raw)
    thru = []
    for a, u in thru_raw:
        j = a // (2 * m)
        thru.append((a - 2 * m * j, u - 2 * n * j))
    thru.sort()
    if thru:
        shift = 2 * n * (thru[0][1] // (2 * n))
        thru = [(a, u - shift) for a, u in thru]
    return AnnularDiagram(m, n, tuple(thru), outer, inner, circles, inner_shaded)


# ---------------------------------------------------------------------------
# composition


def _boundary_maps(d: AnnularDiagram):
    """Lookup tables: class -> (side, anchor_lift, partner_lift) per boundary.

    From a lift x with x == anchor (mod own period), the partner sits at
    partner + (other period) * j where j = (x - anchor) / (own period) when
    the partner is on the other boundary, and at partner + (x - anchor) when
    it is on the same one.
    """
    cached = getattr(d, "_maps", None)
    if cached is not None:
        return cached
    m, n = d.m, d.n
    top: dict = {}
    bot: dict = {}
    for a, u in d.thru:
        top[a] = ("B", a, u)
        bot[u % (2 * n)] = ("T", u, a)
    for p, q in d.outer_arcs:
        top[p] = ("T", p, q)
        top[q % (2 * m)] = ("T", q, p)
    for p, q in d.inner_arcs:
        bot[p] = ("B", p, q)
        bot[q % (2 * n)] = ("B", q, p)
    maps = (top, bot)
    object.__setattr__(d, "_maps", maps)
    return maps


def compose(t: AnnularDiagram, s: AnnularDiagram, delta, check_shading: bool = True):
    """Glue the inner boundary of t to the outer boundary of s.

    Contractible circles formed by the gluing are removed, each contributing
    a factor delta to the weight; non-trivial circles accumulate in the
    result.  Raises on boundary mismatch, including shading mismatch at a
    boundary with no points.
    """
    if t.n != s.m:
        raise ValueError(f"boundary mismatch: ({t.m},{t.n}) o ({s.m},{s.n})")
    if t.n == 0:
        if check_shading and t.inner_shaded != s.outer_shaded:
            raise ValueError("shading mismatch at the glued boundary")
        d = AnnularDiagram(
            t.m, s.n, (), t.outer_arcs, s.inner_arcs, t.circles + s.circles, s.inner_shaded
        )
        return WeightedDiagram(d, 1, 0)
    m, k, n = t.m, t.n, s.n
    kk = 2 * k
    t_top, t_bot = _boundary_maps(t)
    s_top, s_bot = _boundary_maps(s)
    used: set[int] = set()

    def down_from(z):
        # at interface lift z, about to enter s; returns ('B', lift) or ('T', lift)
        while True:
            used.add(z % kk)
            side, anchor, partner = s_top[z % kk]
            j = (z - anchor) // kk
            if side == "B":
                return ("B", partner + 2 * n * j)
            z = partner + kk * j
            used.add(z % kk)
            side, anchor, partner = t_bot[z % kk]
            j = (z - anchor) // kk
            if side == "T":
                return ("T", partner + 2 * m * j)
            z = partner + kk * j

    def up_from(z):
        while True:
            used.add(z % kk)
            side, anchor, partner = t_bot[z % kk]
            j = (z - anchor) // kk
            if side == "T":
                return ("T", partner + 2 * m * j)
            z = partner + kk * j
            used.add(z % kk)
            side, anchor, partner = s_top[z % kk]
            j = (z - anchor) // kk
            if side == "B":
                return ("B", partner + 2 * n * j)
            z = partner + kk * j

    thru_raw = []
    outer_raw = []
    inner_raw = []
    outer_done: set[int] = set()
    for a in range(2 * m):
        if a in outer_done:
            continue
        side, anchor, partner = t_top[a]
        if side == "T":
            outer_raw.append((a, partner + (a - anchor)))
            outer_done.add(a)
            outer_done.add((partner + (a - anchor)) % (2 * m))
            continue
        outer_done.add(a)
        kind, lift = down_from(partner)  # anchor == a, j == 0
        if kind == "B":
            thru_raw.append((a, lift))
        else:
            outer_raw.append((a, lift))
            outer_done.add(lift % (2 * m))
    inner_done = {u % (2 * n) for _, u in thru_raw}
    for v in range(2 * n):
        if v in inner_done:
            continue
        side, anchor, partner = s_bot[v]
        if side == "B":
            inner_raw.append((v, partner + (v - anchor)))
            inner_done.add(v)
            inner_done.add((partner + (v - anchor)) % (2 * n))
            continue
        inner_done.add(v)
        kind, lift = up_from(partner + kk * ((v - anchor) // (2 * n)))
        if kind != "B":
            raise AssertionError("trace from inner ended at outer unexpectedly")
        inner_raw.append((v, lift))
        inner_done.add(lift % (2 * n))

    removed = 0
    new_circles = 0
    for c in range(kk):
        if c in used:
            continue
        z = c
        while True:
            used.add(z % kk)
            side, anchor, partner = s_top[z % kk]
            if side != "T":
                raise AssertionError("cycle touches a through string")
            z = partner + kk * ((z - anchor) // kk)
            used.add(z % kk)
            side, anchor, partner = t_bot[z % kk]
            if side != "B":
                raise AssertionError("cycle touches a through string")
            z = partner + kk * ((z - anchor) // kk)
            if z % kk == c:
                wind = (z - c) // kk
                if wind == 0:
                    removed += 1
                else:
                    if abs(wind) != 1:
                        raise AssertionError(f"impossible circle winding {wind}")
                    new_circles += 1
                break

    d = make_diagram(
        m,
        n,
        thru_raw,
        outer_raw,
        inner_raw,
        t.circles + s.circles + new_circles,
        s.inner_shaded,
    )
    weight = delta**removed if removed else 1
    return WeightedDiagram(d, weight, removed)


def star(d: AnnularDiagram) -> AnnularDiagram:
    """Reflection in a circle half way between the boundaries; swaps (m,n)."""
    thru_raw = [(u, a) for a, u in d.thru]
    return make_diagram(
        d.n, d.m, thru_raw, d.inner_arcs, d.outer_arcs, d.circles, d.outer_shaded
    )


# ---------------------------------------------------------------------------
# named generators


def identity(m: int) -> AnnularDiagram:
    return AnnularDiagram(m, m, tuple((a, a) for a in range(2 * m)))


def identity_zero(shaded: bool) -> AnnularDiagram:
    return AnnularDiagram(0, 0, inner_shaded=shaded)


def rho(m: int, power: int = 1) -> AnnularDiagram:
    """Rotation by one shading period: inner point i joins outer point i+2."""
    if m < 1:
        raise ValueError("rho needs m >= 1")
    return make_diagram(m, m, [(a, a - 2 * power) for a in range(2 * m)], (), ())


def rho_half(m: int, inverse: bool = False) -> AnnularDiagram:
    """Rotation by one boundary point; flips the shading (parity 1)."""
    if m < 1:
        raise ValueError("rho_half needs m >= 1")
    step = 1 if inverse else -1
    return make_diagram(m, m, [(a, a + step) for a in range(2 * m)], (), ())


def eps(m: int, i: int) -> AnnularDiagram:
    """The cap generator: annular (m-1, m)-tangle joining inner points i, i+1.

    Indices are 1-based with 1 <= i <= 2m.  The first inner and outer points
    are joined whenever possible; for i in {1, 2m} the third inner point
    joins the first outer one.  For m = 1 this fixes the two shading
    conventions of the two cap diagrams.
    """
    if m < 1 or not 1 <= i <= 2 * m:
        raise ValueError(f"eps index out of range: m={m}, i={i}")
    if i == 2 * m:
        arc = (2 * m - 1, 2 * m)
        thru = [(a, a + 2) for a in range(2 * m - 3)] + (
            [(2 * m - 3, 2 * m + 1)] if m > 1 else []
        )
    elif i == 1:
        arc = (0, 1)
        thru = [(a, a + 2) for a in range(2 * m - 2)]
    else:
        arc = (i - 1, i)
        thru = [(j, j) for j in range(i - 1)] + [(j - 2, j) for j in range(i + 1, 2 * m)]
    return make_diagram(m - 1, m, thru, (), [arc])


def epsbar(m: int, i: int) -> AnnularDiagram:
    """The cup generator: annular (m+1, m)-tangle joining outer points i, i+1."""
    if m < 0 or not 1 <= i <= 2 * m + 2:
        raise ValueError(f"epsbar index out of range: m={m}, i={i}")
    if i == 2 * m + 2:
        arc = (2 * m + 1, 2 * m + 2)
        thru = [(a, a - 2) for a in range(2, 2 * m + 1)] + ([(1, -1)] if m > 0 else [])
    elif i == 1:
        arc = (0, 1)
        thru = [(a, a - 2) for a in range(2, 2 * m + 2)]
    else:
        arc = (i - 1, i)
        thru = [(j, j) for j in range(i - 1)] + [(j, j - 2) for j in range(i + 1, 2 * m + 2)]
    d = make_diagram(m + 1, m, thru, [arc], ())
    if m == 0:
        # the inner boundary is a sign boundary; fix it so the outer one is honest
        d = AnnularDiagram(1, 0, d.thru, d.outer_arcs, d.inner_arcs, 0, bool(d.parity))
    return d


def cap_pair(m: int, i: int) -> AnnularDiagram:
    """F_i: the (m,m)-tangle with matching cap and cup at positions i, i+1."""
    if m < 1 or not 1 <= i <= 2 * m:
        raise ValueError(f"F index out of range: m={m}, i={i}")
    arc = (2 * m - 1, 2 * m) if i == 2 * m else (i - 1, i)
    held = {arc[0] % (2 * m), arc[1] % (2 * m)}
    thru = [(j, j) for j in range(2 * m) if j not in held]
    return make_diagram(m, m, thru, [arc], [arc])


def sigma(sign: str) -> AnnularDiagram:
    """sigma_plus consumes the shaded 0-boundary, sigma_minus the unshaded one."""
    if sign == "+":
        return AnnularDiagram(0, 0, circles=1, inner_shaded=True)
    if sign == "-":
        return AnnularDiagram(0, 0, circles=1, inner_shaded=False)
    raise ValueError("sign must be '+' or '-'")


_GENERATORS = {
    "eps_i": lambda m, i: eps(m, i),
    "epsbar_i": lambda m, i: epsbar(m, i),
    "F_i": lambda m, i: cap_pair(m, i),
    "rho": lambda m, i: rho(m),
    "rho_half": lambda m, i: rho_half(m),
    "sigma_plus": lambda m, i: sigma("+"),
    "sigma_minus": lambda m, i: sigma("-"),
}


def generator(kind: str, m: int, i: int = 1) -> AnnularDiagram:
    """Dispatch to the named generator; index i is ignored where meaningless."""
    if kind not in _GENERATORS:
        raise ValueError(f"unknown generator kind {kind!r}")
    return _GENERATORS[kind](m, i)


# ---------------------------------------------------------------------------
# bases


def _disc_matchings(points: list[int]):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for idx in range(0, len(rest), 2):
        for left in _disc_matchings(rest[:idx]):
            for right in _disc_matchings(rest[idx + 1:]):
                yield [(first, rest[idx])] + left + right


def _annular_arc_sets(period: int):
    """All arc systems on one boundary of a diagram with no through strings.

    Each system is a set of canonical (p, q) arcs; there are C(period,
    period/2) of them, one per (disc matching, marked region) pair.
    """
    pts = list(range(period))
    out = []
    for match in _disc_matchings(pts):
        covers = []
        for g in range(period):
            covers.append(frozenset((x, y) for x, y in match if x <= g < y))
        regions = sorted(set(covers), key=lambda c: min(
            g for g in range(period) if covers[g] == c))
        for reg in regions:
            arcs = []
            for x, y in match:
                if (x, y) in reg:
                    arcs.append((y, x + period))
                else:
                    arcs.append((x, y))
            out.append(frozenset(arcs))
    if period == 0:
        return [frozenset()]
    return out


def _gap_fillings(gap_points: list[int]):
    """Noncrossing matchings of the points inside one through-string gap."""
    return list(_disc_matchings(gap_points))


def enumerate_annular(m: int, k: int, t: int) -> list[AnnularDiagram]:
    """All shaded annular (m,k)-diagrams with t through strings, no circles.

    Deterministic order.  t must be even and at most 2*min(m,k).
    """
    if t % 2 or t > 2 * min(m, k) or t < 0:
        raise ValueError(f"bad through count {t} for ({m},{k})")
    out = []
    if t == 0:
        for outer in _annular_arc_sets(2 * m):
            for inner in _annular_arc_sets(2 * k):
                d = AnnularDiagram(m, k, (), outer, inner, 0, False)
                if d.parity == 0:
                    out.append(d)
        out.sort(key=AnnularDiagram.sort_key)
        return out
    for tops in combinations(range(2 * m), t):
        top_gaps = []
        for idx in range(t):
            lo = tops[idx]
            hi = tops[idx + 1] if idx + 1 < t else tops[0] + 2 * m
            top_gaps.append(list(range(lo + 1, hi)))
        if any(len(g) % 2 for g in top_gaps):
            continue
        top_arc_choices = _product_fillings(top_gaps)
        for bots in combinations(range(2 * k), t):
            bot_gaps = []
            for idx in range(t):
                lo = bots[idx]
                hi = bots[idx + 1] if idx + 1 < t else bots[0] + 2 * k
                bot_gaps.append(list(range(lo + 1, hi)))
            if any(len(g) % 2 for g in bot_gaps):
                continue
            bot_arc_choices = _product_fillings(bot_gaps)
            for r in range(t):
                thru = []
                for i2 in range(t):
                    pos = i2 + r
                    u = bots[pos % t] + 2 * k * (pos // t)
                    thru.append((tops[i2], u))
                for outer in top_arc_choices:
                    for inner in bot_arc_choices:
                        d = make_diagram(m, k, thru, outer, inner, 0, False)
                        if d.parity == 0:
                            out.append(d)
    out.sort(key=AnnularDiagram.sort_key)
    return out


def _product_fillings(gaps):
    choices = [[]]
    for gap in gaps:
        fills = _gap_fillings(gap)
        choices = [prev + fill for prev in choices for fill in fills]
    return choices


def enumerate_th(m: int) -> list[AnnularDiagram]:
    """Basis tangles of the weight-zero module with a circle parameter:
    annular (m, shaded)-diagrams with at most one non-trivial circle."""
    out = []
    for arcs in _annular_arc_sets(2 * m):
        wraps = sum(1 for _, q in arcs if q >= 2 * m) & 1
        circles = 0 if wraps else 1
        out.append(AnnularDiagram(m, 0, (), arcs, frozenset(), circles, True))
    out.sort(key=AnnularDiagram.sort_key)
    return out


def enumerate_th_pm(m: int, shaded: bool) -> list[AnnularDiagram]:
    """Basis tangles of the circle-killing weight-zero modules: no circles."""
    want = 1 if shaded else 0
    out = []
    for arcs in _annular_arc_sets(2 * m):
        wraps = sum(1 for _, q in arcs if q >= 2 * m) & 1
        if wraps == want:
            out.append(AnnularDiagram(m, 0, (), arcs, frozenset(), 0, shaded))
    out.sort(key=AnnularDiagram.sort_key)
    return out


def annular_count(m: int, k: int) -> int:
    """Number of shaded (m,k)-diagrams with all 2k strings through: k*C(2m, m-k)."""
    return k * comb(2 * m, m - k)
