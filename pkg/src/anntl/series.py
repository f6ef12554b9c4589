"""Truncated power series with exact rational coefficients.

Used for the module dimension series, the Poincare series of a planar
algebra and its Theta transform, and the annular multiplicity coefficients
a_r.  All arithmetic is exact through the truncation order; composition
requires the inner series to have zero constant term.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .scalars import Rat


@dataclass(frozen=True)
class IntSeries:
    coeffs: tuple  # index = degree, length = order + 1

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Rat(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int):
        return self.coeffs[d] if 0 <= d <= self.order else Rat(0)

    def truncate(self, order: int) -> "IntSeries":
        c = list(self.coeffs[: order + 1])
        c += [Rat(0)] * (order + 1 - len(c))
        return IntSeries(tuple(c))

    def __add__(self, other: "IntSeries") -> "IntSeries":
        order = min(self.order, other.order)
        return IntSeries(tuple(self[d] + other[d] for d in range(order + 1)))

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        order = min(self.order, other.order)
        return IntSeries(tuple(self[d] - other[d] for d in range(order + 1)))

    def scale(self, c) -> "IntSeries":
        c = Rat(c)
        return IntSeries(tuple(c * x for x in self.coeffs))

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        order = min(self.order, other.order)
        out = [Rat(0)] * (order + 1)
        for i, x in enumerate(self.coeffs[: order + 1]):
            if x == 0:
                continue
            for j in range(0, order + 1 - i):
                y = other[j]
                if y != 0:
                    out[i + j] += x * y
        return IntSeries(tuple(out))

    def shift(self, k: int) -> "IntSeries":
        """Multiply by z**k, keeping the truncation order."""
        out = [Rat(0)] * (self.order + 1)
        for d in range(self.order + 1 - k):
            out[d + k] = self.coeffs[d]
        return IntSeries(tuple(out))

    def pow(self, e: int) -> "IntSeries":
        acc = IntSeries((Rat(1),) + (Rat(0),) * self.order)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def inverse(self) -> "IntSeries":
        """Multiplicative inverse; constant term must be nonzero."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series has zero constant term")
        order = self.order
        inv0 = 1 / Rat(self.coeffs[0])
        out = [inv0] + [Rat(0)] * order
        for d in range(1, order + 1):
            s = Rat(0)
            for i in range(1, d + 1):
                s += self.coeffs[i] * out[d - i] if i <= order else 0
            out[d] = -inv0 * s
        return IntSeries(tuple(out))

    def compose(self, inner: "IntSeries") -> "IntSeries":
        """self(inner(z)); inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series needs zero constant term")
        order = min(self.order, inner.order)
        one = IntSeries((Rat(1),) + (Rat(0),) * order)
        acc = IntSeries((Rat(0),) * (order + 1))
        # Horner from the top coefficient down
        for d in range(order, -1, -1):
            acc = acc * inner.truncate(order) + one.scale(self[d])
        return acc

    def ints(self) -> list[int]:
        """Coefficients as integers; raises if any is not integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(int(c))
        return out

    def __repr__(self):
        return f"IntSeries({[str(c) for c in self.coeffs]})"


def constant(value, order: int) -> IntSeries:
    return IntSeries((Rat(value),) + (Rat(0),) * order)


def monomial(degree: int, order: int, value=1) -> IntSeries:
    c = [Rat(0)] * (order + 1)
    if degree <= order:
        c[degree] = Rat(value)
    return IntSeries(tuple(c))


def catalan_series(order: int) -> IntSeries:
    """C(z) = sum Catalan(n) z**n = (1 - sqrt(1-4z)) / (2z)."""
    return IntSeries(tuple(Rat(comb(2 * n, n), n + 1) for n in range(order + 1)))


def sqrt_inv_series(order: int) -> IntSeries:
    """1/sqrt(1-4z) = sum C(2n, n) z**n."""
    return IntSeries(tuple(Rat(comb(2 * n, n)) for n in range(order + 1)))


def module_dim_series(k: int, order: int) -> IntSeries:
    """Dimension series of a lowest-weight-k module: z**k C**(2k)/sqrt(1-4z).

    Its degree-m coefficient is C(2m, m-k).
    """
    if k == 0:
        return sqrt_inv_series(order)
    return (catalan_series(order).pow(2 * k) * sqrt_inv_series(order)).shift(k)


def theta_transform(phi: IntSeries, order: int | None = None) -> IntSeries:
    """Theta(q) = (1-q)/(1+q) * Phi(q/(1+q)**2) + q, exact through the order."""
    order = phi.order if order is None else order
    phi = phi.truncate(order)
    one_plus = IntSeries((Rat(1), Rat(1)) + (Rat(0),) * (order - 1)) if order >= 1 else constant(1, order)
    inner = monomial(1, order) * one_plus.pow(2).inverse()
    outer = phi.compose(inner)
    pref = (constant(1, order) - monomial(1, order)) * one_plus.inverse()
    return pref * outer + monomial(1, order)


def annular_multiplicities(dims, r_max: int) -> list:
    """The multiplicity coefficients a_0..a_r from level dimensions.

    a_0 = 1 by convention (requires dims[0] = 1); for r >= 1 the closed form
    sum_{n=0..r} (-1)**(r-n) * (2r/(r+n)) * C(r+n, r-n) * dims[n] applies,
    with the extra +1 at r = 1 coming from the q shift of the transform.
    """
    dims = list(dims)
    if not dims or dims[0] != 1:
        raise ValueError("dims[0] must be 1")
    out = [Rat(1)]
    for r in range(1, r_max + 1):
        acc = Rat(0)
        for n in range(0, r + 1):
            if n >= len(dims):
                break
            term = Rat(2 * r, r + n) * comb(r + n, r - n) * dims[n]
            acc += term if (r - n) % 2 == 0 else -term
        if r == 1:
            acc += 1
        out.append(acc)
    result = []
    for c in out:
        if c.denominator != 1:
            raise ValueError(f"non-integer multiplicity {c}")
        result.append(int(c))
    return result


def poincare_series(dims, order: int) -> IntSeries:
    """Series with the given level dimensions as coefficients."""
    c = [Rat(d) for d in dims[: order + 1]]
    c += [Rat(0)] * (order + 1 - len(c))
    return IntSeries(tuple(c))
