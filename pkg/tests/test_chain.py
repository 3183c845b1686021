import random

import numpy as np
import pytest

import u4codes as u
from u4codes.chain import RingElement
from u4codes.errors import MixedLength
from u4codes.sring import SPoly


def rand_relem(rng, spec, n):
    return RingElement(
        tuple(
            SPoly(spec, n, np.array([rng.randrange(spec.q) for _ in range(n)], dtype=np.int16))
            for _ in range(4)
        )
    )


def test_u4_truncates(F2):
    u2 = RingElement.from_part(2, SPoly.one(F2, 4))
    assert (u2 * u2).is_zero()


def test_u_shift(F2):
    x = RingElement.from_part(1, SPoly.monomial(F2, 4, 3)) + RingElement.from_part(
        2, SPoly.one(F2, 4)
    )
    got = x * RingElement.from_part(1, SPoly.one(F2, 4))
    want = RingElement.from_part(2, SPoly.monomial(F2, 4, 3)) + RingElement.from_part(
        3, SPoly.one(F2, 4)
    )
    assert got == want


def test_derived_mixed_product_with_truncation(F4):
    # (u s^6 + u^2 s(1+s) + u^3 a s^2) * s^2 over n = 8: the u-part dies at s^8
    a = F4.gen()
    x = (
        RingElement.from_part(1, SPoly.monomial(F4, 8, 6))
        + RingElement.from_part(2, SPoly.from_ints(F4, 8, [0, 1, 1]))
        + RingElement.from_part(3, SPoly.monomial(F4, 8, 2, a))
    )
    got = x.shift_mul(2, 0)
    want = RingElement.from_part(2, SPoly.from_ints(F4, 8, [0, 0, 0, 1, 1])) + RingElement.from_part(
        3, SPoly.monomial(F4, 8, 4, a)
    )
    assert got == want
    # cross-check with the span oracle: x generates a code and the product
    # is a member of it
    code = u.validate_canonical(
        F4, 3,
        u.GeneratorForm(r1=6, k4=1, p4=SPoly.from_ints(F4, 8, [1, 1]),
                        k5=2, p5=SPoly.from_ints(F4, 8, [a])),
    )
    assert code.generator(1) == x
    assert u.contains(u.span_basis(code), got)


def test_shift_mul_equals_explicit_multiplier(F3):
    rng = random.Random(21)
    for _ in range(150):
        x = rand_relem(rng, F3, 9)
        a, b = rng.randrange(10), rng.randrange(4)
        mult = RingElement.from_part(b, SPoly.monomial(F3, 9, a))
        assert x.shift_mul(a, b) == x * mult


def test_shift_examples(F2):
    x = RingElement.from_part(2, SPoly.monomial(F2, 4, 2)) + RingElement.from_part(
        3, SPoly.monomial(F2, 4, 1)
    )
    assert x.shift_mul(1, 1) == RingElement.from_part(3, SPoly.monomial(F2, 4, 3))
    assert x.shift_mul(0, 0) == x


def test_u_valuation(F2):
    assert RingElement.from_part(2, SPoly.monomial(F2, 4, 1)).u_valuation() == 2
    assert RingElement.zero(F2, 4).u_valuation() == 4
    x = RingElement.constant(F2, 4, 1) + RingElement.from_part(3, SPoly.monomial(F2, 4, 1))
    assert x.u_valuation() == 0


def test_ring_axioms_random(F4):
    rng = random.Random(3)
    for _ in range(120):
        x, y, z = (rand_relem(rng, F4, 8) for _ in range(3))
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_vector_roundtrip(F3):
    rng = random.Random(4)
    for _ in range(50):
        x = rand_relem(rng, F3, 9)
        assert RingElement.from_vector(F3, 9, x.to_vector()) == x


def test_part_count_enforced(F2):
    with pytest.raises(MixedLength):
        RingElement((SPoly.one(F2, 4), SPoly.one(F2, 4)))


def test_display(F2):
    x = RingElement.from_part(0, SPoly.from_ints(F2, 4, [1, 1])) + RingElement.from_part(
        3, SPoly.monomial(F2, 4, 2)
    )
    assert str(x) == "1 + s + u^3*(s^2)"
    assert str(RingElement.zero(F2, 4)) == "0"


def test_pow(F2):
    s = RingElement.from_part(0, SPoly.monomial(F2, 4, 1))
    assert s**4 == RingElement.zero(F2, 4)
    uu = RingElement.from_part(1, SPoly.one(F2, 4))
    assert uu**3 == RingElement.from_part(3, SPoly.one(F2, 4))
    assert uu**4 == RingElement.zero(F2, 4)
