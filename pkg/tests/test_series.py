import random
from fractions import Fraction

import pytest

from oddbalanced.rings import CC, QQ, W, ZZ, CyclotomicRing, NonUnitError, RingMismatchError
from oddbalanced.series import TruncatedSeries, pochhammer


def S(coeffs, ring=ZZ, order=None):
    return TruncatedSeries.from_coeffs(ring, coeffs, order)


def test_add_examples():
    assert S([1, 1]) + S([1, -1]) == S([2, 0])
    a = S([3, 1, 4, 1])
    assert a + TruncatedSeries.zeros(ZZ, 3) == a
    assert S([1, 2, 1]) + S([0, 0, 1]) == S([1, 2, 2])


def test_mul_examples():
    # (1-q)(1+q+q^2+q^3) telescopes to 1 at order 3
    assert S([1, -1], order=3) * S([1, 1, 1, 1]) == S([1, 0, 0, 0])
    a = S([2, 0, 5, 1])
    assert a * TruncatedSeries.one(ZZ, 3) == a
    assert S([1, 1], order=2) * S([1, 1], order=2) == S([1, 2, 1])


def test_inverse_examples():
    geo = S([1, -1], order=8).inverse()
    assert geo.coeffs == [1] * 9
    assert TruncatedSeries.one(ZZ, 5).inverse() == TruncatedSeries.one(ZZ, 5)
    a = S([1, -1], order=8)
    assert a.inverse() * a == TruncatedSeries.one(ZZ, 8)


def test_inverse_requires_unit_constant_term():
    with pytest.raises(NonUnitError):
        S([2, 1], order=4).inverse()
    with pytest.raises(NonUnitError):
        S([0, 1], order=4).inverse()
    # over the rationals 2 is a unit
    inv = S([2, 1], ring=QQ, order=3).inverse()
    assert inv.coeff(0) == Fraction(1, 2)


def test_coeff_access():
    a = S([1, 0, 3])
    assert a.coeff(2) == 3
    assert a.coeff(1) == 0
    assert S([1, -1], order=9).inverse().coeff(7) == 1
    with pytest.raises(IndexError):
        a.coeff(3)
    with pytest.raises(IndexError):
        a.coeff(-1)


def test_ring_mismatch_rejected():
    with pytest.raises(RingMismatchError):
        S([1, 1]) + S([1, 1], ring=QQ)
    with pytest.raises(RingMismatchError):
        S([1, 1]) * S([1, 1], ring=QQ)


def test_equality_on_common_range():
    assert S([1, 2, 3]) == S([1, 2, 3, 9, 9])
    assert S([1, 2, 4]) != S([1, 2, 3, 9])


def test_pochhammer_examples():
    # (q;q)_2 = (1-q)(1-q^2)
    assert pochhammer(ZZ, 1, 1, 2, 4).coeffs == [1, -1, -1, 1, 0]
    # empty product
    assert pochhammer(ZZ, 1, 1, 0, 4) == TruncatedSeries.one(ZZ, 4)
    # (q;q^2)_2 = (1-q)(1-q^3)
    assert pochhammer(ZZ, 1, 1, 2, 4, step=2).coeffs == [1, -1, 0, -1, 1]


def test_pochhammer_infinite_truncates():
    # (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - ... (pentagonal numbers)
    euler = pochhammer(ZZ, 1, 1, None, 12)
    assert euler.coeffs == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]


def test_pochhammer_with_laurent_coefficient():
    # (-wq;q)_2 = (1+wq)(1+wq^2)
    p = pochhammer(W, -W.w, 1, 2, 3)
    assert p.coeff(0) == W.one
    assert p.coeff(1) == W.w
    assert p.coeff(2) == W.w
    assert p.coeff(3) == W.w * W.w


RINGS = {
    "ZZ": (ZZ, lambda rng: rng.randrange(-9, 10)),
    "QQ": (QQ, lambda rng: Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))),
    "CC": (CC, lambda rng: complex(rng.uniform(-1, 1), rng.uniform(-1, 1))),
    "W": (W, lambda rng: W.w if rng.random() < 0.3 else W.coerce(rng.randrange(-4, 5))),
    "Z5": (CyclotomicRing(5),
           lambda rng: CyclotomicRing(5).coerce(rng.randrange(-4, 5))
           + CyclotomicRing(5).root(rng.randrange(5))),
}


@pytest.mark.parametrize("name", sorted(RINGS))
def test_ring_axioms_randomized(name):
    ring, rand = RINGS[name]
    rng = random.Random(hash(name) & 0xFFFF)
    close = (lambda x, y: abs(x - y) < 1e-12) if ring is CC else (lambda x, y: x == y)
    for _ in range(12):
        order = rng.randrange(2, 7)
        a, b, c = (TruncatedSeries.from_coeffs(
            ring, [rand(rng) for _ in range(order + 1)]) for _ in range(3))
        lhs = (a + b) + c
        rhs = a + (b + c)
        assert all(close(x, y) for x, y in zip(lhs.coeffs, rhs.coeffs))
        lhs = a * (b + c)
        rhs = a * b + a * c
        assert all(close(x, y) for x, y in zip(lhs.coeffs, rhs.coeffs))


def test_laurent_substitution_is_ring_hom():
    # substituting w=1 in a product equals the convolution of substitutions
    rng = random.Random(7)
    for _ in range(10):
        a = TruncatedSeries.from_coeffs(
            W, [W.coerce(rng.randrange(-3, 4)) + W.w * rng.randrange(-2, 3)
                for _ in range(4)])
        b = TruncatedSeries.from_coeffs(
            W, [W.w_inv * rng.randrange(-3, 4) for _ in range(4)])
        prod = a * b
        at1 = [p.substitute(1) for p in prod.coeffs]
        conv = [sum(a.coeffs[i].substitute(1) * b.coeffs[k - i].substitute(1)
                    for i in range(k + 1)) for k in range(4)]
        assert at1 == conv


def test_truncation_never_extends():
    a = S([1, 2])
    b = S([1, 1, 1, 1])
    assert (a + b).order == 1
    assert (a * b).order == 1
    assert a.truncate(0).coeffs == [1]
