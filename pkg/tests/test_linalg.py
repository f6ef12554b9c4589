import random

from anntl.linalg import (determinant, hermitian_profile, leading_minors_int,
                          matrix_apply)
from anntl.scalars import CycloNumber, Rat, conjugate, cyclo, is_zero


def brute_minor(rows, k):
    # Leibniz determinant of the leading k x k block (small k only)
    import itertools

    total = 0
    for perm in itertools.permutations(range(k)):
        sign = 1
        seen = list(perm)
        for i in range(k):
            for j in range(i + 1, k):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(k):
            term *= rows[i][perm[i]]
        total += term
    return total


def test_leading_minors_match_leibniz():
    rng = random.Random(0)
    m = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(5)]
    for i in range(5):
        m[i][i] += 20  # dominate the diagonal so no pivot vanishes
    minors, complete = leading_minors_int(m)
    assert complete
    for k in range(1, 6):
        assert minors[k - 1] == brute_minor(m, k)


def test_leading_minors_stop_on_zero():
    minors, complete = leading_minors_int([[0, 1], [1, 0]])
    assert not complete and minors == []


def test_hermitian_profile_definite():
    m = [[5, 1, 0], [1, 4, 2], [0, 2, 6]]
    p = hermitian_profile(m)
    assert p.positive_definite and p.rank == 3 and not p.kernel
    assert p.determinant == determinant(m)


def test_hermitian_profile_semidefinite_kernel():
    # rank-2 PSD with kernel (1, 1, -1)
    base = [[1, 0], [0, 1], [1, 1]]
    m = [[sum(base[i][k] * base[j][k] for k in range(2)) for j in range(3)] for i in range(3)]
    p = hermitian_profile(m)
    assert p.positive_semidefinite and not p.positive_definite
    assert p.rank == 2 and len(p.kernel) == 1
    v = p.kernel[0]
    assert all(x == 0 for x in matrix_apply(m, [conjugate(c) for c in v]))


def test_hermitian_profile_indefinite():
    p = hermitian_profile([[0, 1], [1, 0]])
    assert p.indefinite and not p.positive_semidefinite
    assert p.rank == 2
    p = hermitian_profile([[1, 0], [0, -2]])
    assert p.indefinite and p.n_minus == 1


def test_hermitian_profile_cyclotomic():
    w = cyclo(3, 1)
    one = CycloNumber.from_rational(1, 3)
    m = [[one * 2, w], [w.conj(), one * 2]]
    p = hermitian_profile(m)
    assert p.positive_definite
    det = determinant(m)
    assert det == 3


def test_determinant_with_swaps():
    m = [[0, 1], [1, 0]]
    assert determinant([[Rat(x) for x in row] for row in m]) == -1


def test_complex_kernel_is_radical():
    # Gram of two proportional complex vectors: radical vector has complex entries
    w = cyclo(4, 1)  # i
    one = CycloNumber.from_rational(1, 4)
    # v2 = i v1, Gram = [[1, -i], [i, 1]] for <x,y> linear in first slot
    m = [[one, -w], [w, one]]
    p = hermitian_profile(m)
    assert p.rank == 1 and len(p.kernel) == 1
    v = p.kernel[0]
    assert all(is_zero(x) for x in matrix_apply(m, [conjugate(c) for c in v]))
