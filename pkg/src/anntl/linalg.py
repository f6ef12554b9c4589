"""Exact linear algebra for Hermitian Gram matrices.

Two engines: a fraction-free Bareiss pass over the integers whose pivots
are exactly the leading principal minors (the fast path for positive
definiteness of integer matrices), and a congruence diagonalization over
any exact field with a sign oracle, which yields inertia, rank and an
exact kernel basis.  Floats are never consulted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import CycloNumber, Rat, conjugate, is_zero, sign

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int


def leading_minors_int(rows) -> tuple[list, bool]:
    """Leading principal minors of an integer matrix by Bareiss elimination.

    Returns (minors, complete); complete is False if a zero pivot stopped
    the sweep early (then the matrix has a singular leading block).
    """
    n = len(rows)
    a = [[mpz(x) for x in row] for row in rows]
    minors = []
    prev = mpz(1)
    for k in range(n):
        piv = a[k][k]
        if piv == 0:
            return minors, False
        minors.append(piv)
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (piv * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return minors, True


def is_int_matrix(rows) -> bool:
    for row in rows:
        for x in row:
            if isinstance(x, int):
                continue
            if isinstance(x, CycloNumber):
                return False
            try:
                if x.denominator != 1:
                    return False
            except AttributeError:
                return False
    return True


def _as_int_matrix(rows):
    out = []
    for row in rows:
        out.append([int(x) if isinstance(x, int) else int(x.numerator) for x in row])
    return out


def _one_like(x):
    if isinstance(x, CycloNumber):
        return CycloNumber.from_rational(1, x.n)
    return Rat(1)


def _inv(x):
    if isinstance(x, CycloNumber):
        return x.inverse()
    return 1 / Rat(x)


@dataclass
class HermitianProfile:
    size: int
    rank: int
    n_plus: int
    n_minus: int
    kernel: list
    determinant: object
    positive_definite: bool
    positive_semidefinite: bool
    indefinite: bool


def hermitian_profile(rows) -> HermitianProfile:
    """Inertia, rank, determinant and kernel of a Hermitian matrix.

    Congruence diagonalization with diagonal pivoting; the signs of the
    resulting diagonal are decided exactly.  A fully zero remaining block
    terminates with its coordinates in the kernel; a remaining block with
    zero diagonal but nonzero entries is indefinite (its rank and kernel
    are then recovered by plain elimination).
    """
    n = len(rows)
    if n == 0:
        return HermitianProfile(0, 0, 0, 0, [], 1, True, True, False)
    a = [list(row) for row in rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    remaining = list(range(n))
    n_plus = n_minus = 0
    det = _one_like(a[0][0]) if not isinstance(a[0][0], int) else Rat(1)
    indefinite_block = False
    while remaining:
        piv = None
        for p in remaining:
            if not is_zero(a[p][p]):
                piv = p
                break
        if piv is None:
            if any(not is_zero(a[r][c]) for r in remaining for c in remaining):
                indefinite_block = True
            break
        d = a[piv][piv]
        s = sign(d)
        if s > 0:
            n_plus += 1
        else:
            n_minus += 1
        det = det * d
        dinv = _inv(d)
        for r in remaining:
            if r == piv:
                continue
            f = a[r][piv] * dinv
            if is_zero(f):
                continue
            fc = conjugate(f)
            for c in range(n):
                a[r][c] = a[r][c] - f * a[piv][c]
                u[r][c] = u[r][c] - f * u[piv][c]
            for c in range(n):
                a[c][r] = a[c][r] - fc * a[c][piv]
        remaining.remove(piv)
    rank = n_plus + n_minus
    if indefinite_block:
        # finish rank/kernel with unsymmetric elimination on the original matrix
        rank, right_kernel = _rank_and_kernel(rows)
        kernel = [[conjugate(x) for x in v] for v in right_kernel]
        return HermitianProfile(n, rank, n_plus, n_minus, kernel, 0 if rank < n else det,
                                False, False, True)
    # radical basis: <v, w> = 0 for all w, i.e. A @ conj(v) = 0
    kernel = [list(u[r]) for r in remaining]
    pd = rank == n and n_minus == 0
    psd = n_minus == 0
    determinant = det if rank == n else 0
    return HermitianProfile(n, rank, n_plus, n_minus, kernel, determinant,
                            pd, psd, n_minus > 0)


def _rank_and_kernel(rows):
    n = len(rows)
    a = [list(row) for row in rows]
    cols = len(a[0])
    pivot_cols = []
    r = 0
    for c in range(cols):
        p = None
        for i in range(r, n):
            if not is_zero(a[i][c]):
                p = i
                break
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = _inv(a[r][c])
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and not is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivot_cols.append(c)
        r += 1
        if r == n:
            break
    free = [c for c in range(cols) if c not in pivot_cols]
    kernel = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for i, pc in enumerate(pivot_cols):
            v[pc] = -a[i][fc]
        kernel.append(v)
    return r, kernel


def determinant(rows):
    """Exact determinant over a field by elimination with row swaps."""
    n = len(rows)
    a = [list(row) for row in rows]
    det = Rat(1)
    signflip = 1
    for c in range(n):
        p = None
        for i in range(c, n):
            if not is_zero(a[i][c]):
                p = i
                break
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            signflip = -signflip
        piv = a[c][c]
        det = det * piv
        inv = _inv(piv)
        for i in range(c + 1, n):
            if is_zero(a[i][c]):
                continue
            f = a[i][c] * inv
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return -det if signflip < 0 else det


def matrix_apply(rows, vec):
    out = []
    for row in rows:
        acc = 0
        for x, v in zip(row, vec):
            if not is_zero(x) and not is_zero(v):
                acc = acc + x * v
        out.append(acc)
    return out
