import random
from itertools import product

import pytest

from zetaforge import polyfp
from zetaforge.arith import prime_factors
from zetaforge.errors import DivisionByZero, FieldMismatch, NoFieldTooLarge, NotPrime, ReducibleModulus, ZeroArgument
from zetaforge.field import construct_field, discrete_log, field_arithmetic

PRIME_POWERS_49 = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4), (17, 1),
                   (19, 1), (23, 1), (5, 2), (3, 3), (29, 1), (31, 1), (2, 5), (37, 1), (41, 1), (43, 1),
                   (47, 1), (7, 2)]


def test_prime_field_generator():
    F = construct_field(5, 1)
    assert F.q == 5
    assert F.generator.coeffs == (2,)
    assert [(F.generator**k).coeffs[0] for k in range(4)] == [1, 2, 4, 3]


def test_first_irreducible_modulus_f9():
    F = construct_field(3, 2)
    assert F.modulus == (1, 0, 1)


def test_not_prime():
    with pytest.raises(NotPrime):
        construct_field(4, 1)


def test_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        construct_field(3, 2, modulus=[2, 0, 1])  # x^2 - 1


def test_explicit_modulus_accepted():
    F = construct_field(3, 2, modulus=[2, 1, 1])
    assert F.modulus == (2, 1, 1)
    assert F != construct_field(3, 2)


def test_too_large():
    with pytest.raises(NoFieldTooLarge):
        construct_field(2, 21)
    with pytest.raises(NoFieldTooLarge):
        construct_field(3, 3, bound=26)


def test_arithmetic_examples():
    F9 = construct_field(3, 2)
    x = F9.element([0, 1])
    assert field_arithmetic(x, x, "mul") == F9.from_int(2)
    F5 = construct_field(5)
    assert field_arithmetic(F5.from_int(2), None, "inv") == F5.from_int(3)
    for p, n in PRIME_POWERS_49:
        F = construct_field(p, n)
        assert field_arithmetic(F.generator, F.q - 1, "pow") == F.one


def test_negative_power_and_division():
    F = construct_field(7, 2)
    g = F.generator
    assert g**-3 * g**3 == F.one
    assert (g / g) == F.one
    with pytest.raises(DivisionByZero):
        F.zero.inverse()
    with pytest.raises(DivisionByZero):
        F.zero ** -1


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        construct_field(5).one + construct_field(7).one


def test_discrete_log():
    F5 = construct_field(5)
    assert discrete_log(F5.one) == 0
    assert discrete_log(F5.generator) == 1
    assert discrete_log(F5.from_int(4)) == 2
    with pytest.raises(ZeroArgument):
        discrete_log(F5.zero)


@pytest.mark.parametrize("p,n", PRIME_POWERS_49)
def test_generator_and_modulus_invariants(p, n):
    F = construct_field(p, n)
    assert F.q == p**n
    assert polyfp.is_irreducible(list(F.modulus), p)
    g = F.generator
    assert g ** (F.q - 1) == F.one
    for ell in prime_factors(F.q - 1):
        assert g ** ((F.q - 1) // ell) != F.one
    # discrete log is a total inverse of exponentiation
    for x in F.elements():
        if not x.is_zero():
            assert g ** discrete_log(x) == x


@pytest.mark.parametrize("p,n", PRIME_POWERS_49)
def test_modulus_is_first_irreducible(p, n):
    F = construct_field(p, n)
    idx = polyfp.to_index(F.modulus[:-1], p)
    for tail in range(idx):
        assert not polyfp.is_irreducible(polyfp.from_index(tail, p, n) + [1], p)
    # generator is the smallest element of full order
    for i in range(1, F.generator_index):
        x = F.from_index(i)
        assert any(x ** ((F.q - 1) // ell) == F.one for ell in prime_factors(F.q - 1))


def test_deterministic_construction():
    from zetaforge.field import _build

    a = construct_field(3, 3)
    _build.cache_clear()
    b = construct_field(3, 3)
    assert a is not b
    assert a.modulus == b.modulus and a.generator_index == b.generator_index


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_axioms_exhaustive_small(p, n):
    F = construct_field(p, n)
    els = list(F.elements())
    for a, b, c in product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in els:
        assert a + F.zero == a and a * F.one == a
        assert a + (-a) == F.zero
        if not a.is_zero():
            assert a * a.inverse() == F.one


@pytest.mark.parametrize("p,n", [(11, 1), (13, 1), (2, 4), (5, 2), (3, 3), (31, 1), (2, 5), (7, 2), (47, 1)])
def test_axioms_random_larger(p, n):
    F = construct_field(p, n)
    rng = random.Random(p * 100 + n)
    for _ in range(300):
        a, b, c = (F.from_index(rng.randrange(F.q)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_vector_ops_agree_with_scalar():
    import numpy as np

    F = construct_field(3, 3)
    idx = np.arange(F.q)
    for j in (0, 1, 5, 17):
        assert [int(v) for v in F.vadd(idx, np.full_like(idx, j))] == [(F.from_index(i) + F.from_index(j)).index for i in range(F.q)]
        assert [int(v) for v in F.vmul(idx, np.full_like(idx, j))] == [(F.from_index(i) * F.from_index(j)).index for i in range(F.q)]
    assert [int(v) for v in F.vpow(idx, 5)] == [(F.from_index(i) ** 5).index for i in range(F.q)]
