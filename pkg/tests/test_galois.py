import itertools
import random

import pytest

import u4codes as u
from u4codes.errors import DegreeOutOfRange, DivisionByZero, NonPrime, NotMonic, Reducible


def test_field_make_f4():
    spec = u.field_make(2, 2, [1, 1, 1])
    assert spec.q == 4
    a = spec.gen()
    assert str(a * a) == "a+1"          # forced by a^2 + a + 1 = 0


def test_field_make_prime_field():
    spec = u.field_make(3, 1, [0, 1])
    assert spec.q == 3
    assert (spec.element(2) * spec.element(2)).coeffs == (1,)


def test_field_make_rejects_reducible():
    with pytest.raises(Reducible):
        u.field_make(2, 2, [0, 0, 1])   # a^2 = a * a


def test_field_make_rejects_nonprime_nonmonic_degree():
    with pytest.raises(NonPrime):
        u.field_make(4, 1, [0, 1])
    with pytest.raises(NotMonic):
        u.field_make(2, 2, [1, 1, 0])
    with pytest.raises(DegreeOutOfRange):
        u.field_make(2, 9, [1] + [0] * 8 + [1])
    with pytest.raises(DegreeOutOfRange):
        u.field_make(257, 1, [0, 1])


def test_default_moduli_all_valid():
    for (p, m) in u.DEFAULT_MODULI:
        spec = u.field_make(p, m)
        assert spec.q == p**m


def test_f4_multiplication_against_bruteforce():
    # Independent oracle: polynomial multiplication mod (a^2+a+1) mod 2.
    spec = u.field_make(2, 2)

    def slow_mul(x, y):
        prod = [0, 0, 0]
        for i, ci in enumerate(x):
            for j, cj in enumerate(y):
                prod[i + j] ^= ci & cj
        # a^2 = a + 1
        return ((prod[0] ^ prod[2]), (prod[1] ^ prod[2]))

    for x in spec.elements():
        for y in spec.elements():
            assert (x * y).coeffs == slow_mul(x.coeffs, y.coeffs)


def test_derived_square_of_a_plus_1():
    spec = u.field_make(2, 2)
    a = spec.gen()
    assert (a + 1) * (a + 1) == a


def test_additive_identity():
    for spec in (u.field_make(2, 2), u.field_make(5, 1)):
        for x in spec.elements():
            assert x + spec.zero() == x


@pytest.mark.parametrize(
    "p,m,modulus",
    [(2, 1, None), (2, 2, None), (3, 1, None), (2, 3, None), (5, 1, None),
     (3, 2, None), (2, 4, [1, 1, 0, 0, 1])],
)
def test_field_axioms_exhaustive_small(p, m, modulus):
    spec = u.field_make(p, m, modulus)
    elems = list(spec.elements())
    assert len(elems) == spec.q
    for x, y, z in itertools.product(elems, repeat=3):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
    for x, y in itertools.product(elems, repeat=2):
        assert x + y == y + x
        assert x * y == y * x


@pytest.mark.parametrize("p,m", [(5, 2), (3, 2)])
def test_field_axioms_random_larger(p, m):
    spec = u.field_make(p, m)
    rng = random.Random(2024)
    for _ in range(10_000):
        x, y, z = (spec.from_encoding(rng.randrange(spec.q)) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (5, 2), (2, 3)])
def test_inverses_and_unit_group_order(p, m):
    spec = u.field_make(p, m)
    one = spec.one()
    for x in spec.elements():
        if x.is_zero():
            with pytest.raises(DivisionByZero):
                x.inverse()
            continue
        assert x * x.inverse() == one
        assert x ** (spec.q - 1) == one


def test_elem_arith_dispatcher():
    spec = u.field_make(2, 2)
    a = spec.gen()
    assert u.elem_arith(spec, a, a, "mul") == a + 1
    assert u.elem_arith(spec, a, None, "pow", exponent=3) == spec.one()
    assert u.elem_arith(spec, a, a, "div") == spec.one()
    with pytest.raises(DivisionByZero):
        u.elem_arith(spec, a, spec.zero(), "div")


def test_element_display():
    spec = u.field_make(5, 2)
    a = spec.gen()
    assert str(spec.zero()) == "0"
    assert str(spec.one()) == "1"
    assert str(a) == "a"
    assert str(a * 3 + 2) == "3*a+2"
    big = u.field_make(2, 3)
    b = big.gen()
    assert str(b * b) == "a^2"
