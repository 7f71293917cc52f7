import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadufd.arith import make_discriminant
from quadufd.primes import primes_up_to
from quadufd.residues import Kind, is_prime_in_order, kronecker, splitting_type, sqrt_mod_p

from oracles import brute_roots, valid_discriminants


def brute_legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if any(x * x % p == a for x in range(1, p)) else -1


def test_kronecker_examples():
    assert 73 % 8 in {x * x % 8 for x in range(8)}
    assert kronecker(73, 2) == 1
    assert kronecker(-163, 3) == -1
    assert kronecker(-163, 5) == -1
    assert kronecker(-163, 7) == -1
    for D in (-163, 73, 40, -4, 0, 17):
        assert kronecker(D, 1) == 1


def test_kronecker_two_rule():
    for D in range(-50, 50):
        expected = 0 if D % 2 == 0 else (1 if D % 8 in (1, 7) else -1)
        assert kronecker(D, 2) == expected


@pytest.mark.parametrize("p", primes_up_to(200)[1:])
def test_kronecker_matches_legendre(p):
    for D in range(-300, 300, 7):
        assert kronecker(D, p) == brute_legendre(D, p)


@given(st.integers(-10**6, 10**6), st.integers(1, 2000), st.integers(1, 2000))
def test_kronecker_multiplicative(D, m, n):
    assert kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n)


def test_sqrt_mod_p_examples():
    assert sqrt_mod_p(2, 7) == (3, 4)
    assert {x for x in range(7) if x * x % 7 == 2} == {3, 4}
    assert sqrt_mod_p(0, 11) == (0,)
    assert sqrt_mod_p(3, 7) == ()
    assert {x * x % 7 for x in range(7)} == {0, 1, 2, 4}


@pytest.mark.parametrize("p", [3, 5, 7, 13, 17, 41, 97, 257, 65537, 1000003])
def test_sqrt_mod_p_all_residues(p):
    step = max(1, p // 500)
    for a in range(0, p, step):
        roots = sqrt_mod_p(a, p)
        assert all(r * r % p == a for r in roots)
        assert len(roots) == {0: 1, 1: 2, -1: 0}[kronecker(a, p)]
        assert sqrt_mod_p(a, p) == roots  # deterministic


def test_sqrt_mod_p_rejects_non_odd_primes():
    for p in (2, 9, 15, 1, 0):
        with pytest.raises(ValueError):
            sqrt_mod_p(1, p)


@pytest.mark.parametrize(
    "D,p,kind,root",
    [
        (73, 2, Kind.SPLIT, 0),
        (73, 3, Kind.SPLIT, None),
        (-163, 2, Kind.INERT, None),
        (-163, 3, Kind.INERT, None),
        (-163, 5, Kind.INERT, None),
        (-163, 7, Kind.INERT, None),
        (-12, 2, Kind.RAMIFIED, 1),
        (40, 2, Kind.RAMIFIED, None),
        (-15, 2, Kind.SPLIT, 0),
    ],
)
def test_splitting_examples(D, p, kind, root):
    disc = make_discriminant(D)
    st_ = splitting_type(disc, p)
    assert st_.kind is kind
    if root is not None:
        assert st_.root == root
    if kind is not Kind.INERT:
        assert disc.m(st_.root) % p == 0


def test_splitting_minus_12_root_by_hand():
    assert make_discriminant(-12).m(1) == 4


def test_is_prime_in_order_examples():
    assert is_prime_in_order(make_discriminant(-163), 7)
    assert not is_prime_in_order(make_discriminant(73), 3)
    assert not is_prime_in_order(make_discriminant(-15), 2)
    assert brute_roots(-15, 2) == [0, 1]


def test_splitting_rejects_composite():
    with pytest.raises(ValueError):
        splitting_type(make_discriminant(73), 9)


def test_splitting_matches_root_count_small():
    for D in valid_discriminants(-300, 300):
        disc = make_discriminant(D)
        for p in primes_up_to(60):
            roots = brute_roots(D, p)
            st_ = splitting_type(disc, p)
            if st_.kind is Kind.INERT:
                assert roots == []
            elif st_.kind is Kind.RAMIFIED:
                assert D % p == 0 and len(roots) == 1 and st_.root in roots
            else:
                assert len(roots) == 2 and st_.root in roots
                if p > 2:
                    assert (2 * st_.root - disc.sigma) % p != 0


def test_split_iff_sqrt_exists():
    rng = random.Random(5)
    for _ in range(100):
        D = rng.choice(valid_discriminants(-5000, 5000))
        disc = make_discriminant(D)
        for p in primes_up_to(100)[1:]:
            if D % p:
                assert (splitting_type(disc, p).kind is Kind.SPLIT) == bool(sqrt_mod_p(D % p, p))
