"""Truncated power series in q over a pluggable coefficient ring.

A series carries its ring and a dense coefficient list of length N+1; all
arithmetic truncates at the shorter operand and never extends silently.
Multiplication is schoolbook O(N^2) on purpose: exactness and simplicity
beat FFT tricks at the sizes used here (N up to a few thousand).
"""

from __future__ import annotations

from . import kernels
from .rings import NonUnitError, RingMismatchError

# default truncation order when a caller has no better-informed choice;
# everything here fails loudly rather than extending a series silently
DEFAULT_ORDER = 400


class TruncatedSeries:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the q^0 coefficient")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, ring, order):
        return cls(ring, [ring.zero] * (order + 1))

    @classmethod
    def one(cls, ring, order):
        s = cls.zeros(ring, order)
        s.coeffs[0] = ring.one
        return s

    @classmethod
    def monomial(cls, ring, coeff, exponent, order):
        s = cls.zeros(ring, order)
        if exponent <= order:
            s.coeffs[exponent] = ring.coerce(coeff)
        return s

    @classmethod
    def from_coeffs(cls, ring, coeffs, order=None):
        coeffs = [ring.coerce(c) for c in coeffs]
        if order is not None:
            if len(coeffs) > order + 1:
                coeffs = coeffs[: order + 1]
            else:
                coeffs += [ring.zero] * (order + 1 - len(coeffs))
        return cls(ring, coeffs)

    # -- basics ------------------------------------------------------------

    @property
    def order(self):
        return len(self.coeffs) - 1

    def coeff(self, k):
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside 0..{self.order}")
        return self.coeffs[k]

    def copy(self):
        return TruncatedSeries(self.ring, self.coeffs)

    def truncate(self, order):
        if order >= self.order:
            return self.copy()
        return TruncatedSeries(self.ring, self.coeffs[: order + 1])

    def _check_ring(self, other):
        if not isinstance(other, TruncatedSeries):
            raise RingMismatchError(f"expected a TruncatedSeries, got {other!r}")
        if other.ring != self.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring.name} vs {other.ring.name}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        self._check_ring(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.ring, [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])])

    def __sub__(self, other):
        self._check_ring(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.ring, [a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])])

    def __neg__(self):
        return TruncatedSeries(self.ring, [-a for a in self.coeffs])

    def __mul__(self, other):
        self._check_ring(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.ring,
            kernels.cauchy_mul(self.coeffs[: n + 1], other.coeffs[: n + 1], self.ring.zero))

    def scale(self, c):
        c = self.ring.coerce(c)
        return TruncatedSeries(self.ring, [c * a for a in self.coeffs])

    def inverse(self):
        """Series b with self*b = 1 up to the truncation order.

        Requires the constant term to be a unit; raises NonUnitError
        otherwise.
        """
        inv0 = self.ring.invert_unit(self.coeffs[0])  # may raise NonUnitError
        n = self.order
        out = [self.ring.zero] * (n + 1)
        out[0] = inv0
        for k in range(1, n + 1):
            acc = self.ring.zero
            for j in range(1, k + 1):
                cj = self.coeffs[j]
                if cj:
                    acc = acc + cj * out[k - j]
            out[k] = -(inv0 * acc)
        return TruncatedSeries(self.ring, out)

    def __eq__(self, other):
        """Series are equal iff coefficients agree on the common range."""
        if not isinstance(other, TruncatedSeries) or other.ring != self.ring:
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None  # mutable coefficient list

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, q_value):
        """Horner evaluation at a numeric q; coefficients must support
        multiplication by q_value's type (used with the complex ring)."""
        acc = 0j if isinstance(q_value, complex) else 0
        for c in reversed(self.coeffs):
            acc = acc * q_value + c
        return acc

    def map_coefficients(self, func, ring):
        return TruncatedSeries(ring, [func(c) for c in self.coeffs])

    def __repr__(self):
        head = ", ".join(repr(c) for c in self.coeffs[:5])
        tail = ", ..." if self.order > 4 else ""
        return f"TruncatedSeries({self.ring.name}, N={self.order}, [{head}{tail}])"


def pochhammer(ring, coeff, qexp, n, order, step=1):
    """Truncated product of (1 - coeff*q^(qexp + k*step)) for k = 0..n-1.

    n=None means the infinite product, truncated once factors are 1 mod
    q^(order+1).  Covers (A;q)_n for A = scalar*q^qexp, and with
    Laurent/cyclotomic coeff also A = +-w^(+-1)*q^qexp; step=2 gives the
    odd-index products like (q;q^2)_n.
    """
    if n is not None and n < 0:
        raise ValueError("pochhammer length must be >= 0 or None for infinity")
    if step < 1:
        raise ValueError("pochhammer step must be >= 1")
    out = [ring.zero] * (order + 1)
    out[0] = ring.one
    coeff = ring.coerce(coeff)
    neg = -coeff
    k = 0
    while n is None or k < n:
        a = qexp + k * step
        if a > order:
            break  # remaining factors are 1 mod q^(order+1)
        if a == 0:
            raise ValueError("pochhammer factor with q^0 would need ring division")
        kernels.shifted_add(out, a, neg)
        k += 1
    return TruncatedSeries(ring, out)
