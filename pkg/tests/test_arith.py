import math
import random

import pytest
from hypothesis import given, strategies as st

from markoff.arith import (
    PrimePowerClass,
    classify_prime_power,
    factorize,
    gcd,
    iroot,
    is_probable_prime,
    mod_inv,
    prime_power_moduli,
    primes_up_to,
)
from markoff.errors import NotInvertible
from oracles import is_prime_td, prime_power_shape, trial_factor


def test_gcd_examples():
    assert gcd(12, 18) == 6
    assert gcd(5, 13) == 1
    assert gcd(0, 7) == 7


@given(st.integers(0, 10**30), st.integers(0, 10**30))
def test_gcd_divides(a, b):
    g = gcd(a, b)
    if g:
        assert a % g == 0 and b % g == 0
        assert math.gcd(a // g, b // g) == 1
    else:
        assert a == b == 0


def test_mod_inv_examples():
    assert mod_inv(5, 13) == 8
    assert mod_inv(1, 7) == 1
    with pytest.raises(NotInvertible):
        mod_inv(4, 8)


@given(st.integers(1, 10**40), st.integers(2, 10**40))
def test_mod_inv_property(a, m):
    if math.gcd(a, m) == 1:
        assert a * mod_inv(a, m) % m == 1
    else:
        with pytest.raises(NotInvertible):
            mod_inv(a, m)


def test_primality_examples():
    assert is_probable_prime(29)
    assert not is_probable_prime(1)
    # 7561 has no divisor up to 86, so it is prime
    assert is_prime_td(7561)
    assert is_probable_prime(7561)


def test_primality_matches_trial_division():
    for n in range(20000):
        assert is_probable_prime(n) == is_prime_td(n), n


def test_primality_hard_composites():
    # strong pseudoprimes to several small bases
    for n in (3215031751, 2152302898747, 3474749660383, 341550071728321, 3825123056546413051):
        assert not is_probable_prime(n)
    assert is_probable_prime(2**61 - 1)
    assert is_probable_prime(2**89 - 1)  # beyond 64 bits: randomized rounds
    assert not is_probable_prime((2**61 - 1) * (2**89 - 1))


def test_classify_examples():
    assert classify_prime_power(169) == PrimePowerClass(13, 2, False)
    assert classify_prime_power(34) == PrimePowerClass(17, 1, True)
    assert classify_prime_power(6466) is None
    assert classify_prime_power(1) is None
    assert classify_prime_power(2) is None
    assert classify_prime_power(16) is None
    assert classify_prime_power(169).value == 169


def test_classify_against_trial_division():
    for n in range(1, 200001):
        got = classify_prime_power(n)
        want = prime_power_shape(n) if n > 2 else None
        assert (None if got is None else (got.p, got.n, got.twice)) == want, n


def test_classify_big():
    p = 2**89 - 1
    assert classify_prime_power(2 * p**3) == PrimePowerClass(p, 3, True)
    assert classify_prime_power(p * (2**61 - 1)) is None


def test_factorize():
    assert factorize(6466) == {2: 1, 53: 1, 61: 1}
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(2, 10**12)
        assert factorize(n) == trial_factor(n)
    big = (2**61 - 1) * 1000003**2 * 6
    assert factorize(big) == {2: 1, 3: 1, 1000003: 2, 2**61 - 1: 1}


def test_iroot():
    for n in (0, 1, 2, 15, 16, 17, 10**40, 10**40 - 1):
        for k in (2, 3, 5):
            r = iroot(n, k)
            assert r**k <= n < (r + 1) ** k


def test_sieves():
    assert list(primes_up_to(30)) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    want = [m for m in range(3, 1001) if prime_power_shape(m)]
    assert prime_power_moduli(1000) == want


def test_json():
    assert PrimePowerClass(13, 2, False).to_json() == {"p": "13", "n": 2, "twice": False}
