"""The ordinary (disc) Temperley-Lieb algebra on exact scalars.

A diagram on n strands is a noncrossing perfect matching of 2n rectangle
boundary points.  Points 0..n-1 run along the top edge left to right and
points n..2n-1 along the bottom edge left to right; the first point is the
top-left one.  Products stack: in ``multiply(a, b)`` the bottom edge of
``a`` is glued to the top edge of ``b``, and every closed loop formed
contributes a factor delta.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import comb

from .scalars import Rat, conjugate, chebyshev, is_zero, scalar_key


@dataclass(frozen=True)
class TLDiagram:
    """Noncrossing pairing of the 2n boundary points of a rectangle."""

    n: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        p = self.pairing
        if len(p) != 2 * self.n:
            raise ValueError("pairing length must be 2n")
        for i, j in enumerate(p):
            if not 0 <= j < 2 * self.n or j == i or p[j] != i:
                raise ValueError(f"not a perfect matching: {p}")
        if not _noncrossing(self.n, p):
            raise ValueError(f"crossing pairing: {p}")

    def partner(self, i: int) -> int:
        return self.pairing[i]

    def sort_key(self):
        return self.pairing

    def to_json(self):
        return list(self.pairing)

    @staticmethod
    def from_json(data) -> "TLDiagram":
        pairing = tuple(int(x) for x in data)
        return TLDiagram(len(pairing) // 2, pairing)


def _cyclic_pos(n: int, i: int) -> int:
    # circular order around the rectangle: top left->right, then bottom right->left
    return i if i < n else n + (2 * n - 1 - i)


def _noncrossing(n: int, pairing) -> bool:
    # stack check in circular order; chords of a disc never wrap, so one cut suffices
    pos_to_pt = [0] * (2 * n)
    for i in range(2 * n):
        pos_to_pt[_cyclic_pos(n, i)] = i
    stack = []
    for pos in range(2 * n):
        partner_pos = _cyclic_pos(n, pairing[pos_to_pt[pos]])
        if partner_pos > pos:
            stack.append(pos)
        else:
            if not stack or stack[-1] != partner_pos:
                return False
            stack.pop()
    return not stack


def _matchings_on(points: list[int]):
    """All noncrossing matchings of an ordered run of slots."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for idx in range(0, len(rest), 2):
        for m1 in _matchings_on(rest[:idx]):
            for m2 in _matchings_on(rest[idx + 1:]):
                yield [(first, rest[idx])] + m1 + m2


def enumerate_tl_basis(n: int) -> list[TLDiagram]:
    """All Catalan(n) diagrams on n strands, in a fixed deterministic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    slots = list(range(2 * n))  # circular positions
    inv = {}
    for i in range(2 * n):
        inv[_cyclic_pos(n, i)] = i
    out = []
    for match in _matchings_on(slots):
        pairing = [0] * (2 * n)
        for a, b in match:
            i, j = inv[a], inv[b]
            pairing[i], pairing[j] = j, i
        out.append(TLDiagram(n, tuple(pairing)))
    out.sort(key=lambda d: d.pairing)
    return out


def tl_identity_diagram(n: int) -> TLDiagram:
    return TLDiagram(n, tuple((i + n) % (2 * n) for i in range(2 * n)))


def tl_e_diagram(n: int, i: int) -> TLDiagram:
    """The cap-cup diagram E_i, 1 <= i <= n-1 (1-indexed as usual)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"E_{i} undefined on {n} strands")
    pairing = list(tl_identity_diagram(n).pairing)
    a, b = i - 1, i  # top points, 0-indexed
    pairing[a], pairing[b] = b, a
    pairing[n + a], pairing[n + b] = n + b, n + a
    return TLDiagram(n, tuple(pairing))


def diagram_multiply(a: TLDiagram, b: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack a over b, trace strings, return (diagram, closed loop count)."""
    if a.n != b.n:
        raise ValueError("strand count mismatch")
    n = a.n
    # node labels: ('a', i) for a's points, ('b', i) for b's; glue a's bottom
    # point n+j to b's top point j.
    pairing = [None] * (2 * n)
    seen_mid = [False] * n
    for start in list(range(n)) + list(range(n, 2 * n)):
        # trace from a's top (result top) and b's bottom (result bottom)
        if start < n:
            side, pt = "a", start
        else:
            side, pt = "b", start
        if pairing[start] is not None:
            continue
        cur_side, cur = side, pt
        while True:
            nxt = a.pairing[cur] if cur_side == "a" else b.pairing[cur]
            if cur_side == "a" and nxt < n:
                end = nxt
                break
            if cur_side == "b" and nxt >= n:
                end = nxt
                break
            if cur_side == "a":
                seen_mid[nxt - n] = True
                cur_side, cur = "b", nxt - n  # a bottom n+j -> b top j
            else:
                seen_mid[nxt] = True
                cur_side, cur = "a", nxt + n  # b top j -> a bottom n+j
        pairing[start], pairing[end] = end, start
    loops = 0
    for j in range(n):
        if seen_mid[j]:
            continue
        # midline point j untouched by any boundary path: lies on a closed loop
        loops += 1
        cur_side, cur = "b", j
        while True:
            nxt = a.pairing[cur] if cur_side == "a" else b.pairing[cur]
            if cur_side == "a":
                seen_mid[nxt - n] = True
                cur_side, cur = "b", nxt - n
            else:
                seen_mid[nxt] = True
                cur_side, cur = "a", nxt + n
            if (cur_side, cur) == ("b", j):
                break
    return TLDiagram(n, tuple(pairing)), loops


def rotate_diagram(d: TLDiagram, clicks: int = 2) -> TLDiagram:
    """Rotate the disc diagram by the given number of boundary positions."""
    n = d.n
    pos_to_pt = [0] * (2 * n)
    for i in range(2 * n):
        pos_to_pt[_cyclic_pos(n, i)] = i
    pairing = [0] * (2 * n)
    for i in range(2 * n):
        j = d.pairing[i]
        a = pos_to_pt[(_cyclic_pos(n, i) + clicks) % (2 * n)]
        b = pos_to_pt[(_cyclic_pos(n, j) + clicks) % (2 * n)]
        pairing[a] = b
    return TLDiagram(n, tuple(pairing))


def diagram_star(d: TLDiagram) -> TLDiagram:
    """Reflection in a horizontal line half way up the rectangle."""
    n = d.n
    flip = lambda i: i + n if i < n else i - n
    pairing = [0] * (2 * n)
    for i in range(2 * n):
        pairing[flip(i)] = flip(d.pairing[i])
    return TLDiagram(n, tuple(pairing))


class TLElement:
    """Formal linear combination of diagrams on a common strand count."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for d, c in (terms.items() if isinstance(terms, dict) else terms):
                if d.n != n:
                    raise ValueError("mixed strand counts")
                if not is_zero(c):
                    self.terms[d] = self.terms.get(d, 0) + c
            self.terms = {d: c for d, c in self.terms.items() if not is_zero(c)}

    @staticmethod
    def from_diagram(d: TLDiagram, coeff=1) -> "TLElement":
        return TLElement(d.n, {d: coeff})

    def __add__(self, other: "TLElement") -> "TLElement":
        if self.n != other.n:
            raise ValueError("mixed strand counts")
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return TLElement(self.n, out)

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + other.scale(-1)

    def scale(self, c) -> "TLElement":
        if is_zero(c):
            return TLElement(self.n)
        return TLElement(self.n, {d: c * x for d, x in self.terms.items()})

    def coefficient(self, d: TLDiagram):
        return self.terms.get(d, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TLElement) or self.n != other.n:
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        return f"TLElement(n={self.n}, {len(self.terms)} terms)"

    def to_json(self):
        items = sorted(self.terms.items(), key=lambda t: t[0].pairing)
        from .scalars import format_scalar

        return [{"diagram": d.to_json(), "coeff": format_scalar(c)} for d, c in items]


def tl_identity(n: int) -> TLElement:
    return TLElement.from_diagram(tl_identity_diagram(n))


def tl_e(n: int, i: int) -> TLElement:
    return TLElement.from_diagram(tl_e_diagram(n, i))


def multiply(a: TLElement, b: TLElement, delta) -> TLElement:
    if a.n != b.n:
        raise ValueError("strand count mismatch")
    out: dict[TLDiagram, object] = {}
    for da, ca in a.terms.items():
        for db, cb in b.terms.items():
            d, loops = diagram_multiply(da, db)
            c = ca * cb * delta**loops if loops else ca * cb
            out[d] = out.get(d, 0) + c
    return TLElement(a.n, out)


def star(a: TLElement) -> TLElement:
    """Antilinear involution fixing every E_i."""
    return TLElement(a.n, {diagram_star(d): conjugate(c) for d, c in a.terms.items()})


_jw_cache: dict = {}
_jw_lock = threading.Lock()


def jones_wenzl(n: int, delta) -> TLElement:
    """The Jones-Wenzl idempotent p_n by the Wenzl recursion.

    p_1 = 1 and p_{n+1} = p_n - (P_n/P_{n+1}) p_n E_n p_n, with P_k the
    Tchebychev values of ``chebyshev``.  Requires P_k(delta) != 0 for
    2 <= k <= n; a vanishing denominator is reported with the offending k.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    key = (n, scalar_key(delta))
    with _jw_lock:
        hit = _jw_cache.get(key)
    if hit is not None:
        return hit
    p = tl_identity(1)
    for m in range(1, n):
        # build p_{m+1} inside TL_{m+1}
        p_big = _include(p, m + 1)
        pk1 = chebyshev(m + 1, delta)
        if is_zero(pk1):
            raise ZeroDivisionError(f"Tchebychev denominator P_{m + 1}(delta) = 0")
        coeff = chebyshev(m, delta) * _invert(pk1)
        mid = multiply(multiply(p_big, tl_e(m + 1, m), delta), p_big, delta)
        p = p_big - mid.scale(coeff)
    with _jw_lock:
        _jw_cache[key] = p
    return p


def _invert(x):
    if isinstance(x, (int,)):
        return Rat(1, x)
    try:
        return x.inverse()
    except AttributeError:
        return 1 / x


def _include(a: TLElement, n: int) -> TLElement:
    """Unital inclusion TL_{n-1} -> TL_n adding a vertical strand on the right."""
    out = {}
    for d, c in a.terms.items():
        m = d.n
        relab = lambda i: i if i < m else i + 1
        pairing = [0] * (2 * n)
        for i in range(2 * m):
            pairing[relab(i)] = relab(d.pairing[i])
        pairing[m] = 2 * m + 1
        pairing[2 * m + 1] = m
        out[TLDiagram(n, tuple(pairing))] = c
    return TLElement(n, out)


def jw_chain_coefficient(n: int, r: int, delta):
    """Coefficient of E_{n-1} E_{n-2} ... E_r in p_n: (-1)**(n-r) * P_r/P_n.

    The sign is pinned by the recursion itself: the chain word at level n+1
    only arises as E_n times the chain word at level n, so the coefficient
    picks up one factor -P_n/P_{n+1} per level from the base value
    -P_{n-1}/P_n of the single cap E_{n-1}.
    """
    if not 1 <= r <= n - 1:
        raise ValueError("need 1 <= r <= n-1")
    pn = chebyshev(n, delta)
    if is_zero(pn):
        raise ZeroDivisionError(f"P_{n}(delta) = 0")
    val = chebyshev(r, delta) * _invert(pn)
    return -val if (n - r) % 2 else val


def chain_word_diagram(n: int, r: int) -> TLDiagram:
    """The diagram of the word E_{n-1} E_{n-2} ... E_r in TL_n."""
    elt = tl_e(n, n - 1)
    for i in range(n - 2, r - 1, -1):
        d, loops = diagram_multiply(next(iter(elt.terms)), tl_e_diagram(n, i))
        assert loops == 0
        elt = TLElement.from_diagram(d)
    return next(iter(elt.terms))


def tl_dim(n: int, t: int) -> int:
    """Generic dimension of the t-through-string irreducible of TL_n."""
    if (n - t) % 2 or not 0 <= t <= n:
        raise ValueError(f"bad (n, t) = ({n}, {t})")
    k = (n - t) // 2
    return comb(n, k) - (comb(n, k - 1) if k >= 1 else 0)


def tl_dim_at_root(n: int, t: int, m: int) -> int:
    """Dimension of the same module at delta = 2*cos(pi/m), m >= 3.

    Determined by: vanishing outside 0 <= t <= n, one-dimensionality on the
    diagonal up to n = m-2, the vanishing V_{m-1}^{m-1} = 0, and the
    branching dim(n, t) = dim(n-1, t-1) + dim(n-1, t+1).  Values never
    exceed their generic counterparts.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    if (n - t) % 2:
        raise ValueError(f"parity violation: (n, t) = ({n}, {t})")
    return _root_dim_table(n, m).get(t, 0)


def _root_dim_table(n: int, m: int) -> dict[int, int]:
    row = {0: 1}
    for strands in range(1, n + 1):
        new = {}
        for t in range(strands % 2, min(strands, m - 2) + 1, 2):
            if t == strands:
                new[t] = 1
            else:
                new[t] = row.get(t - 1, 0) + row.get(t + 1, 0)
        row = new
    return row


def tl_algebra_dim_at_root(n: int, m: int) -> int:
    """Total dimension of the semisimple quotient of TL_n at delta = 2*cos(pi/m)."""
    return sum(d * d for d in _root_dim_table(n, m).values())
