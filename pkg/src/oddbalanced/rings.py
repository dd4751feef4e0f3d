"""Coefficient rings for truncated q-series.

Five rings are supported: arbitrary-precision integers, rationals, complex
floats, Laurent polynomials in the rank variable w, and cyclotomic integers
of order c (vectors reduced mod x^c - 1).  A ring object supplies zero/one,
coercion, and inversion of units; the elements themselves carry the
arithmetic, so the series kernels stay coefficient-agnostic.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction


class RingMismatchError(TypeError):
    """Operands live in different coefficient rings."""


class NonUnitError(ArithmeticError):
    """Constant term is not invertible in its ring."""


# ---------------------------------------------------------------------------
# Laurent polynomials in w
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Laurent polynomial sum(coeffs[i] * w^(shift+i)) with integer coefficients.

    Normal form: coeffs is a tuple with nonzero first and last entry; the
    zero polynomial is coeffs=() and shift=0.
    """

    __slots__ = ("shift", "coeffs")

    def __init__(self, shift=0, coeffs=()):
        lo, hi = 0, len(coeffs)
        while lo < hi and not coeffs[lo]:
            lo += 1
        while hi > lo and not coeffs[hi - 1]:
            hi -= 1
        if lo == hi:
            self.shift = 0
            self.coeffs = ()
        else:
            self.shift = shift + lo
            self.coeffs = tuple(coeffs[lo:hi])

    @classmethod
    def const(cls, n):
        return cls(0, (n,))

    @classmethod
    def w_power(cls, m, coeff=1):
        return cls(m, (coeff,))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.shift == other.shift and self.coeffs == other.coeffs or (
            not self.coeffs and not other.coeffs)

    def __hash__(self):
        return hash((self.shift, self.coeffs))

    def __neg__(self):
        return LaurentPoly(self.shift, tuple(-c for c in self.coeffs))

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.shift, other.shift)
        hi = max(self.shift + len(self.coeffs), other.shift + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.shift - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.shift - lo + i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly(self.shift + other.shift, out)

    __rmul__ = __mul__

    def items(self):
        """Yield (exponent, coefficient) pairs for nonzero coefficients."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.shift + i, c

    def coefficient(self, m):
        i = m - self.shift
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def substitute(self, value, one=1):
        """Evaluate at w=value; value must be invertible when shift < 0."""
        acc = one * 0
        for m, c in self.items():
            acc = acc + c * _int_power(value, m, one)
        return acc

    def mirror(self):
        """Swap w and w^-1."""
        return LaurentPoly(-(self.shift + len(self.coeffs) - 1),
                           tuple(reversed(self.coeffs)))

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        parts = [f"{c}*w^{m}" for m, c in self.items()]
        return "LaurentPoly(" + " + ".join(parts) + ")"


def _int_power(value, m, one):
    if m >= 0:
        out = one
        for _ in range(m):
            out = out * value
        return out
    inv = one / value if not hasattr(value, "inverse") else value.inverse()
    out = one
    for _ in range(-m):
        out = out * inv
    return out


# ---------------------------------------------------------------------------
# Cyclotomic integers: vectors of length c reduced mod (x^c - 1)
# ---------------------------------------------------------------------------

def cyclotomic_polynomial(c):
    """Coefficient list (low to high) of the c-th cyclotomic polynomial,
    computed by exact division of x^c - 1 by the proper-divisor factors."""
    assert c >= 1
    poly = [-1] + [0] * (c - 1) + [1]  # x^c - 1
    for d in range(1, c):
        if c % d == 0:
            poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return poly


def _poly_exact_div(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], den[-1])
        assert r == 0, "non-exact polynomial division"
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    assert not any(num[: len(den) - 1]), "non-exact polynomial division"
    return out


class CyclotomicElement:
    """Integer combination sum(coeffs[j] * zeta^j) with zeta a primitive
    c-th root of unity, stored as a length-c vector mod (x^c - 1).

    The representation is redundant (the all-ones vector embeds to zero for
    prime c, and more generally anything divisible by (x^c-1)/Phi_c does);
    vector equality is used for arithmetic, while value equality goes
    through reduce_mod_minimal() or the complex embedding.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        coeffs = tuple(coeffs)
        assert len(coeffs) == order, "cyclotomic vector must have length c"
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def const(cls, order, n):
        return cls(order, (n,) + (0,) * (order - 1))

    @classmethod
    def root_power(cls, order, j):
        v = [0] * order
        v[j % order] = 1
        return cls(order, v)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicElement.const(self.order, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.order != self.order:
                raise RingMismatchError("cyclotomic orders differ")
            return other
        if isinstance(other, int):
            return CyclotomicElement.const(self.order, other)
        return None

    def __neg__(self):
        return CyclotomicElement(self.order, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicElement(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = self.order
        out = [0] * c
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    k = i + j
                    if k >= c:
                        k -= c
                    out[k] += a * b
        return CyclotomicElement(c, out)

    __rmul__ = __mul__

    def embed(self):
        """Complex value with zeta = exp(2*pi*i/c)."""
        c = self.order
        return sum(a * cmath.exp(2j * math.pi * j / c)
                   for j, a in enumerate(self.coeffs) if a)

    def reduce_mod_minimal(self):
        """Remainder of the representative polynomial mod the order-c
        cyclotomic polynomial; canonical for value comparisons."""
        phi = cyclotomic_polynomial(self.order)
        rem = list(self.coeffs)
        d = len(phi) - 1
        for i in range(len(rem) - 1, d - 1, -1):
            top = rem[i]
            if top:
                rem[i] = 0
                for j in range(d):
                    rem[i - d + j] -= top * phi[j]
        return tuple(rem[:d])

    def as_rational_integer(self):
        """Exact integer value, or ValueError if the element is not one."""
        rem = self.reduce_mod_minimal()
        if any(rem[1:]):
            raise ValueError(f"cyclotomic element is not a rational integer: {self!r}")
        return rem[0]

    def __repr__(self):
        return f"CyclotomicElement({self.order}, {self.coeffs})"


# ---------------------------------------------------------------------------
# Ring objects
# ---------------------------------------------------------------------------

class IntegerRing:
    name = "ZZ"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, int):
            return x
        raise RingMismatchError(f"cannot coerce {x!r} into {self.name}")

    def invert_unit(self, x):
        if x in (1, -1):
            return x
        raise NonUnitError(f"{x!r} is not a unit in {self.name}")

    def embed_complex(self, x):
        return complex(x)


class RationalRing:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise RingMismatchError(f"cannot coerce {x!r} into {self.name}")

    def invert_unit(self, x):
        if not x:
            raise NonUnitError("zero is not a unit")
        return 1 / Fraction(x)

    def embed_complex(self, x):
        return complex(x)


class ComplexRing:
    name = "CC"
    zero = 0j
    one = 1.0 + 0j

    def coerce(self, x):
        return complex(x)

    def invert_unit(self, x):
        x = complex(x)
        if abs(x) < 1e-300:
            raise NonUnitError("zero is not a unit")
        return 1.0 / x

    def embed_complex(self, x):
        return complex(x)


class LaurentRing:
    """Laurent polynomials in w over the integers."""

    name = "ZZ[w,w^-1]"
    zero = LaurentPoly()
    one = LaurentPoly.const(1)
    w = LaurentPoly.w_power(1)
    w_inv = LaurentPoly.w_power(-1)

    def coerce(self, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise RingMismatchError(f"cannot coerce {x!r} into {self.name}")

    def invert_unit(self, x):
        x = self.coerce(x)
        if len(x.coeffs) == 1 and x.coeffs[0] in (1, -1):
            return LaurentPoly.w_power(-x.shift, x.coeffs[0])
        raise NonUnitError(f"{x!r} is not a unit in {self.name}")

    def embed_complex(self, x, w_value=1.0 + 0j):
        return x.substitute(w_value, one=1.0 + 0j)


class CyclotomicRing:
    """Cyclotomic integers of a fixed order c."""

    def __init__(self, order):
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.order = order
        self.name = f"ZZ[zeta_{order}]"
        self.zero = CyclotomicElement.const(order, 0)
        self.one = CyclotomicElement.const(order, 1)

    def root(self, j=1):
        return CyclotomicElement.root_power(self.order, j)

    def coerce(self, x):
        if isinstance(x, CyclotomicElement):
            if x.order != self.order:
                raise RingMismatchError("cyclotomic orders differ")
            return x
        if isinstance(x, int):
            return CyclotomicElement.const(self.order, x)
        raise RingMismatchError(f"cannot coerce {x!r} into {self.name}")

    def invert_unit(self, x):
        x = self.coerce(x)
        # units used in practice are +-zeta^j
        nz = [(j, a) for j, a in enumerate(x.coeffs) if a]
        if len(nz) == 1 and nz[0][1] in (1, -1):
            j, a = nz[0]
            v = [0] * self.order
            v[(-j) % self.order] = a
            return CyclotomicElement(self.order, v)
        raise NonUnitError(f"{x!r} is not an obvious unit in {self.name}")

    def embed_complex(self, x):
        return x.embed()

    def __eq__(self, other):
        return isinstance(other, CyclotomicRing) and other.order == self.order

    def __hash__(self):
        return hash(("CyclotomicRing", self.order))


ZZ = IntegerRing()
QQ = RationalRing()
CC = ComplexRing()
W = LaurentRing()
