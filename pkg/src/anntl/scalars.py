"""Exact scalars: arbitrary-precision rationals and cyclotomic field elements.

Conventions
-----------
``cyclo(n, j)`` is the root of unity exp(2*pi*i*j/n).  A :class:`CycloNumber`
of conductor ``n`` is stored in the power basis ``1, z, ..., z**(phi(n)-1)``
of ``Q(zeta_n)``, i.e. reduced modulo the n-th cyclotomic polynomial, so two
values of the same conductor are equal iff their coefficient tuples are
equal.  Mixed-conductor arithmetic promotes both operands to the lcm
conductor.

Sign decisions for real values are exact: zero is decided on the canonical
form alone, and the sign of a nonzero value by interval evaluation of the
complex embedding at doubling precision until the enclosure excludes zero.
Floats never decide equality.
"""

from __future__ import annotations

import cmath
from math import gcd

import mpmath

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rat

_ZERO = Rat(0)
_ONE = Rat(1)


def _as_rat(x):
    """Coerce plain rational-like values to Rat, else return None."""
    if isinstance(x, (int, type(_ZERO))):
        return Rat(x)
    try:
        from fractions import Fraction
    except ImportError:  # pragma: no cover
        return None
    if isinstance(x, Fraction):
        return Rat(x.numerator, x.denominator)
    return None


# ---------------------------------------------------------------------------
# integer polynomial helpers (ascending coefficient lists)


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divexact_int(num, den):
    """Exact division of integer polynomials, den monic up to integer lead."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        c //= lead
        q[i] = c
        if c:
            for j, y in enumerate(den):
                num[i + j] -= c * y
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder")
    return q


_cyclo_poly_cache: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending order."""
    if n in _cyclo_poly_cache:
        return _cyclo_poly_cache[n]
    if n == 1:
        phi = (-1, 1)
    else:
        num = [0] * (n + 1)
        num[0], num[n] = -1, 1
        den = [1]
        for d in range(1, n):
            if n % d == 0:
                den = _poly_mul_int(den, list(cyclotomic_polynomial(d)))
        phi = tuple(_poly_divexact_int(num, den))
    _cyclo_poly_cache[n] = phi
    return phi


def _reduce_mod_cyclo(coeffs, n):
    """Reduce a rational coefficient vector modulo Phi_n; returns length phi(n)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = list(coeffs)
    # first fold exponents mod n (z**n = 1), cheap and keeps vectors short
    if len(c) > n:
        folded = [_ZERO] * n
        for j, x in enumerate(c):
            if x:
                folded[j % n] += x
        c = folded
    for i in range(len(c) - 1, deg - 1, -1):
        x = c[i]
        if x:
            c[i] = _ZERO
            for j in range(deg):
                c[i - deg + j] -= x * phi[j]
    c = c[:deg]
    c += [_ZERO] * (deg - len(c))
    return tuple(Rat(x) for x in c)


def _rpoly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _rpoly_sub(a, b):
    out = [Rat(x) for x in a] + [_ZERO] * max(0, len(b) - len(a))
    for j, y in enumerate(b):
        out[j] -= y
    return _rpoly_trim(out)


def _rpoly_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _rpoly_trim(out)


def _rpoly_divmod(a, b):
    q = []
    rem = [Rat(x) for x in a]
    _rpoly_trim(rem)
    while len(rem) >= len(b):
        c = rem[-1] / b[-1]
        shift = len(rem) - len(b)
        while len(q) < shift + 1:
            q.append(_ZERO)
        q[shift] += c
        for j, y in enumerate(b):
            rem[j + shift] -= c * y
        _rpoly_trim(rem)
    return q, rem


def _poly_xgcd(a, b):
    """Extended gcd for rational polynomials: g, s, t with s*a + t*b = g."""
    r0, r1 = _rpoly_trim([Rat(x) for x in a]), _rpoly_trim([Rat(x) for x in b])
    s0, s1 = [_ONE], []
    t0, t1 = [], [_ONE]
    while r1:
        q, rem = _rpoly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _rpoly_sub(s0, _rpoly_mul(q, s1))
        t0, t1 = t1, _rpoly_sub(t0, _rpoly_mul(q, t1))
    return r0, s0, t0


class CycloNumber:
    """Element of the cyclotomic field Q(zeta_n) with exact rational coordinates."""

    __slots__ = ("n", "c")
    __hash__ = None  # mathematical equality crosses conductors; do not hash

    def __init__(self, n: int, coeffs):
        if n < 1:
            raise ValueError("conductor must be >= 1")
        self.n = n
        deg = len(cyclotomic_polynomial(n)) - 1
        c = tuple(coeffs)
        if len(c) != deg:
            c = _reduce_mod_cyclo(c, n)
        self.c = c

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_rational(x, n: int = 1) -> "CycloNumber":
        r = _as_rat(x)
        if r is None:
            raise TypeError(f"not a rational value: {x!r}")
        deg = len(cyclotomic_polynomial(n)) - 1
        return CycloNumber(n, (r,) + (_ZERO,) * (deg - 1))

    @staticmethod
    def root_of_unity(n: int, j: int = 1) -> "CycloNumber":
        j %= n
        vec = [_ZERO] * (j + 1)
        vec[j] = _ONE
        return CycloNumber(n, _reduce_mod_cyclo(vec, n))

    # -- structure ----------------------------------------------------------

    def promote(self, m: int) -> "CycloNumber":
        """Rewrite in the larger conductor m (n must divide m)."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"{self.n} does not divide {m}")
        step = m // self.n
        vec = [_ZERO] * ((len(self.c) - 1) * step + 1 or 1)
        for j, x in enumerate(self.c):
            if x:
                vec[j * step] += x
        return CycloNumber(m, _reduce_mod_cyclo(vec, m))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.c[0]

    def conj(self) -> "CycloNumber":
        """Complex conjugation, zeta**j -> zeta**(n-j)."""
        vec = [_ZERO] * self.n
        for j, x in enumerate(self.c):
            if x:
                vec[(self.n - j) % self.n] += x
        return CycloNumber(self.n, _reduce_mod_cyclo(vec, self.n))

    def is_real(self) -> bool:
        return self.conj() == self

    def real_part(self) -> "CycloNumber":
        two = CycloNumber.from_rational(Rat(1, 2), self.n)
        return (self + self.conj()) * two

    # -- arithmetic ---------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, CycloNumber):
            if other.n == self.n:
                return self, other
            m = self.n * other.n // gcd(self.n, other.n)
            return self.promote(m), other.promote(m)
        r = _as_rat(other)
        if r is None:
            return None
        return self, CycloNumber.from_rational(r, self.n)

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return CycloNumber(a.n, tuple(x + y for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.n, tuple(-x for x in self.c))

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return CycloNumber(a.n, tuple(x - y for x, y in zip(a.c, b.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        if b.is_rational():
            r = b.c[0]
            return CycloNumber(a.n, tuple(x * r for x in a.c))
        if a.is_rational():
            r = a.c[0]
            return CycloNumber(b.n, tuple(x * r for x in b.c))
        out = [_ZERO] * (len(a.c) + len(b.c) - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        out[i + j] += x * y
        return CycloNumber(a.n, _reduce_mod_cyclo(out, a.n))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational():
            return CycloNumber.from_rational(_ONE / self.c[0], self.n)
        phi = [Rat(x) for x in cyclotomic_polynomial(self.n)]
        g, s, _ = _poly_xgcd(list(self.c), phi)
        if len(g) != 1:
            raise ArithmeticError("element not invertible mod Phi_n")
        inv = [x / g[0] for x in s]
        return CycloNumber(self.n, _reduce_mod_cyclo(inv, self.n))

    def __truediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return a * b.inverse()

    def __rtruediv__(self, other):
        r = _as_rat(other)
        if r is None:
            return NotImplemented
        return CycloNumber.from_rational(r, self.n) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = CycloNumber.from_rational(1, base.n)
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = p
        return a.c == b.c

    # -- embedding ----------------------------------------------------------

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        acc = 0j
        for x in reversed(self.c):
            acc = acc * z + complex(x)
        return acc

    def real_interval(self, prec: int = 64):
        """Enclosure of Re(self) as an mpmath interval at binary precision prec."""
        with mpmath.workprec(prec):
            iv = mpmath.iv
            iv.prec = prec
            two_pi = 2 * iv.pi
            acc = iv.mpf(0)
            for j, x in enumerate(self.c):
                if x:
                    num = iv.mpf(int(x.numerator))
                    den = iv.mpf(int(x.denominator))
                    acc += (num / den) * iv.cos(two_pi * j / self.n)
            return acc

    # -- formatting ---------------------------------------------------------

    def __repr__(self):
        return f"CycloNumber({self.n}, {self.c!r})"

    def __str__(self):
        return format_scalar(self)


def cyclo(n: int, j: int = 1) -> CycloNumber:
    """The root of unity exp(2*pi*i*j/n) as an exact cyclotomic number."""
    return CycloNumber.root_of_unity(n, j)


def two_cos_pi_over(n: int) -> CycloNumber:
    """2*cos(pi/n) = zeta_{2n} + zeta_{2n}**-1, exact in Q(zeta_{2n})."""
    return cyclo(2 * n, 1) + cyclo(2 * n, 2 * n - 1)


def sin_pi_multiple(a: int, n: int) -> CycloNumber:
    """sin(a*pi/n), exact in Q(zeta_{lcm(2n,4)})."""
    m = 2 * n * 4 // gcd(2 * n, 4)
    z = cyclo(m, a * (m // (2 * n)))
    i = cyclo(4, 1)
    return (z - z.conj()) / (2 * i)


def conjugate(x):
    """Complex conjugate for any supported scalar."""
    if isinstance(x, CycloNumber):
        return x.conj()
    return x


def is_zero(x) -> bool:
    if isinstance(x, CycloNumber):
        return x.is_zero()
    return x == 0


def as_complex(x) -> complex:
    if isinstance(x, CycloNumber):
        return x.to_complex()
    return complex(x)


def sign(x) -> int:
    """Exact sign (-1, 0, +1) of a real scalar.

    Zero is decided by canonical form.  For nonzero cyclotomic values the
    embedding is enclosed in an interval at doubling precision until zero is
    excluded; non-real input is rejected.
    """
    r = _as_rat(x)
    if r is not None:
        return (r > 0) - (r < 0)
    if not isinstance(x, CycloNumber):
        raise TypeError(f"no sign for {x!r}")
    if x.is_zero():
        return 0
    if not x.is_real():
        raise ValueError(f"sign of non-real value: {x}")
    prec = 64
    while prec <= 1 << 16:
        enc = x.real_interval(prec)
        if enc.a > 0:
            return 1
        if enc.b < 0:
            return -1
        prec *= 2
    raise ArithmeticError(f"sign undecided at precision {prec}: {x!r}")


def chebyshev(k: int, delta):
    """P_k(delta) from P_0 = 0, P_1 = 1, P_{k+1} = delta*P_k - P_{k-1}.

    Satisfies P_k(2*cosh x) = sinh(k*x)/sinh(x); works over any exact scalar.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    prev, cur = 0, 1
    for _ in range(k):
        prev, cur = cur, delta * cur - prev
    return prev


def scalar_key(x):
    """Hashable canonical key for a scalar (used for caching)."""
    r = _as_rat(x)
    if r is not None:
        return ("Q", int(r.numerator), int(r.denominator))
    if isinstance(x, CycloNumber):
        return ("C", x.n, tuple((int(c.numerator), int(c.denominator)) for c in x.c))
    raise TypeError(f"unsupported scalar {x!r}")


def format_scalar(x, approx: bool = False, digits: int = 6) -> str:
    """Render a scalar exactly ('z12^2 - 1/3') or as a decimal approximation."""
    if approx:
        z = as_complex(x)
        if abs(z.imag) < 1e-12:
            return f"{z.real:.{digits}f}"
        return f"{z.real:.{digits}f}{z.imag:+.{digits}f}i"
    r = _as_rat(x)
    if r is not None:
        return str(r)
    if not isinstance(x, CycloNumber):
        return str(x)
    if x.is_rational():
        return str(x.c[0])
    parts = []
    for j, c in enumerate(x.c):
        if c == 0:
            continue
        if j == 0:
            parts.append(str(c))
            continue
        mono = f"z{x.n}" if j == 1 else f"z{x.n}^{j}"
        if c == 1:
            term = mono
        elif c == -1:
            term = f"-{mono}"
        else:
            term = f"{c}*{mono}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


class ScalarContext:
    """Ambient scalar choice for a computation: the loop parameter and its field.

    ``delta`` must be real (conjugation-fixed).  ``conductor`` records the
    cyclotomic field in use, 1 meaning plain rationals.
    """

    def __init__(self, delta, conductor: int | None = None):
        if isinstance(delta, CycloNumber):
            if not delta.is_real():
                raise ValueError("delta must be real")
            conductor = conductor or delta.n
        self.delta = delta
        self.conductor = conductor or 1

    @staticmethod
    def at_root(n: int) -> "ScalarContext":
        """Context with delta = 2*cos(pi/n)."""
        return ScalarContext(two_cos_pi_over(n), 2 * n)

    def __repr__(self):
        return f"ScalarContext(delta={format_scalar(self.delta)}, conductor={self.conductor})"
