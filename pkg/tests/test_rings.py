import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kerpair import (
    CompositeModulusError,
    ModRing,
    NotFiniteError,
    NotInvertible,
    PolyRing,
    PrimeField,
    make_ring,
)
from kerpair.rings import crt_combine, crt_idempotents, factorize, is_prime

RINGS = [PrimeField(2), PrimeField(5), PrimeField(7), ModRing(30), ModRing(12),
         PolyRing(2), PolyRing(3)]


def random_element(ring, rng):
    if isinstance(ring, PolyRing):
        return ring.normalize([rng.randrange(ring.n) for _ in range(rng.randint(0, 4))])
    return rng.randrange(ring.size)


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_ring_laws(ring):
    # associativity, commutativity, distributivity on 1100 random triples
    rng = random.Random(99)
    for _ in range(1100):
        a, b, c = (random_element(ring, rng) for _ in range(3))
        assert ring.add(a, b) == ring.add(b, a)
        assert ring.mul(a, b) == ring.mul(b, a)
        assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
        assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        assert ring.add(a, ring.neg(a)) == ring.zero
        assert ring.mul(a, ring.one) == a
        assert ring.sub(a, b) == ring.add(a, ring.neg(b))


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_normalize_idempotent(ring):
    rng = random.Random(3)
    for _ in range(200):
        a = random_element(ring, rng)
        assert ring.normalize(a) == a
        assert ring.contains(a)


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_inverse_law(ring):
    rng = random.Random(17)
    for _ in range(300):
        a = random_element(ring, rng)
        if ring.is_unit(a):
            assert ring.mul(ring.inv(a), a) == ring.one
        else:
            with pytest.raises(NotInvertible):
                ring.inv(a)


def test_prime_field_rejects_composite():
    with pytest.raises(CompositeModulusError):
        PrimeField(4)
    with pytest.raises(CompositeModulusError):
        PrimeField(30)


def test_mod_ring_factorization():
    assert ModRing(30).primes == (2, 3, 5)
    assert ModRing(30).square_free
    twelve = ModRing(12)
    assert twelve.primes == (2, 3)
    assert not twelve.square_free


def test_arithmetic_fixtures():
    assert PrimeField(5).add(3, 4) == 2
    assert ModRing(30).mul(15, 15) == 15
    one_plus_z = (1, 1)
    assert PolyRing(2).mul(one_plus_z, one_plus_z) == (1, 0, 1)


def test_inverse_fixtures():
    assert PrimeField(7).inv(3) == 5
    with pytest.raises(NotInvertible) as err:
        ModRing(30).inv(10)
    assert err.value.witness == 10
    with pytest.raises(NotInvertible):
        PolyRing(3).inv((0, 1))


def test_zmod_unit_iff_nonzero_mod_every_prime():
    ring = ModRing(30)
    for a in range(30):
        expect = all(a % p != 0 for p in ring.primes)
        assert ring.is_unit(a) == expect


@given(st.lists(st.integers(0, 4), max_size=6), st.lists(st.integers(0, 4), max_size=6))
def test_poly_divmod(a, b):
    ring = PolyRing(5)
    a, b = ring.normalize(a), ring.normalize(b)
    if b == ring.zero:
        return
    q, r = ring.divmod(a, b)
    assert ring.add(ring.mul(q, b), r) == a
    assert r == ring.zero or len(r) < len(b)


def test_poly_degree_and_indeterminate():
    ring = PolyRing(3)
    assert ring.degree(ring.zero) is None
    assert ring.degree(ring.one) == 0
    assert ring.z == (0, 1)
    assert ring.monic((0, 2)) == (0, 1)


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_parse_format_round_trip(ring):
    rng = random.Random(5)
    for _ in range(100):
        a = random_element(ring, rng)
        assert ring.parse(ring.format(a)) == a


def test_poly_parse_forms():
    ring = PolyRing(2)
    assert ring.parse("[0]") == ()
    assert ring.parse("[1,0,1]") == (1, 0, 1)
    assert ring.parse("3") == (1,)  # bare ints are constants
    assert ring.format(()) == "[0]"
    with pytest.raises(ValueError):
        ring.parse("[1,0")


def test_poly_ring_not_enumerable():
    with pytest.raises(NotFiniteError):
        PolyRing(2).elements()


def test_make_ring_dispatch():
    assert make_ring("gf", 7) == PrimeField(7)
    assert make_ring("zmod", 30) == ModRing(30)
    assert make_ring("polygf", 2) == PolyRing(2)
    with pytest.raises(ValueError):
        make_ring("qq", 1)


def test_is_prime_and_factorize():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]


@settings(max_examples=200)
@given(st.integers(0, 29))
def test_crt_combine_round_trip(x):
    primes = (2, 3, 5)
    assert crt_combine([x % p for p in primes], primes, 30) == x


def test_idempotents_defining_congruences():
    es = crt_idempotents((2, 3, 5), 30)
    for i, p in enumerate((2, 3, 5)):
        for j, e in enumerate(es):
            assert e % p == (1 if i == j else 0)
