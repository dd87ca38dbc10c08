import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_jacobi
from zetaforge.characters import MultChar, characters_of_order_dividing, jacobi_sum
from zetaforge.cyclotomic import CyclotomicInt, cyclotomic_poly
from zetaforge.errors import FieldMismatch, TrivialCharacter
from zetaforge.field import construct_field


@pytest.mark.parametrize("m,phi", [(1, [-1, 1]), (2, [1, 1]), (3, [1, 1, 1]), (4, [1, 0, 1]),
                                   (6, [1, -1, 1]), (12, [1, 0, -1, 0, 1])])
def test_cyclotomic_polynomials(m, phi):
    assert list(cyclotomic_poly(m)) == phi


def test_cyclotomic_ring_identities():
    z = CyclotomicInt.zeta(5)
    acc = CyclotomicInt.integer(5, 1)
    for _ in range(5):
        acc = acc * z
    assert acc == 1
    assert sum((CyclotomicInt.zeta(5, k) for k in range(5)), CyclotomicInt.integer(5, 0)) == 0
    assert z * z.conj() == 1
    assert CyclotomicInt.zeta(3).lift(6) == CyclotomicInt.zeta(6, 2)
    assert CyclotomicInt.zeta(3) == CyclotomicInt.zeta(6, 2)


@given(st.integers(2, 24), st.lists(st.integers(-5, 5), min_size=1, max_size=30),
       st.lists(st.integers(-5, 5), min_size=1, max_size=30))
@settings(max_examples=60, deadline=None)
def test_cyclotomic_ring_laws(m, a, b):
    x, y = CyclotomicInt.from_exponents(m, a), CyclotomicInt.from_exponents(m, b)
    assert x * y == y * x
    assert (x + y).conj() == x.conj() + y.conj()
    assert (x * y).conj() == x.conj() * y.conj()
    assert x.conj().conj() == x


def test_quadratic_jacobi_f5():
    F = construct_field(5)
    eta = MultChar(F, 2, 1)
    assert jacobi_sum([eta, eta]) == -1
    assert brute_jacobi([eta, eta]) == -1


def test_cubic_jacobi_f7_norm():
    F = construct_field(7)
    assert F.generator.coeffs == (3,)
    chi = MultChar(F, 3, 1)
    assert chi(F.from_int(3)) == CyclotomicInt.zeta(3)
    J = jacobi_sum([chi, chi])
    assert J * J.conj() == 7


def test_jacobi_errors():
    F = construct_field(7)
    with pytest.raises(TrivialCharacter):
        jacobi_sum([MultChar(F, 3, 0), MultChar(F, 3, 1)])
    with pytest.raises(FieldMismatch):
        jacobi_sum([MultChar(F, 2, 1), MultChar(construct_field(5), 2, 1)])


@pytest.mark.parametrize("p,n", [(5, 1), (7, 1), (3, 2), (13, 1), (2, 4)])
def test_jacobi_matches_scalar_summation(p, n):
    F = construct_field(p, n)
    chars = [c for c in characters_of_order_dividing(F, F.q - 1) if not c.is_trivial]
    rng = random.Random(p)
    for _ in range(12):
        a, b = rng.choice(chars), rng.choice(chars)
        assert jacobi_sum([a, b]) == brute_jacobi([a, b])
    a, b, c = chars[0], chars[1], chars[-1]
    assert jacobi_sum([a, b, c]) == brute_jacobi([a, b, c])


@pytest.mark.parametrize("p,n", [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4),
                                 (17, 1), (5, 2), (3, 3), (31, 1), (7, 2)])
def test_character_multiplicativity(p, n):
    F = construct_field(p, n)
    rng = random.Random(1000 + p * n)
    chars = [MultChar(F, F.q - 1, i) for i in (1, (F.q - 1) // 2 or 1, F.q - 2)]
    for _ in range(1000):
        a = F.from_index(rng.randrange(1, F.q))
        b = F.from_index(rng.randrange(1, F.q))
        chi = chars[rng.randrange(len(chars))]
        assert chi(a * b) == chi(a) * chi(b)


def test_character_power_is_trivial():
    F = construct_field(13)
    chi = MultChar(F, 12, 5)
    assert (chi**12).is_trivial
    assert chi(F.zero) == 0
    assert (chi * chi.conj()).is_trivial


@pytest.mark.parametrize("p,n", [(7, 1), (13, 1), (3, 2)])
def test_jacobi_sum_conjugate_pair_is_unit(p, n):
    F = construct_field(p, n)
    for chi in characters_of_order_dividing(F, F.q - 1):
        if chi.is_trivial:
            continue
        J = jacobi_sum([chi, chi.conj()])
        assert J == -chi(F.from_int(-1))
