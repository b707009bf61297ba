"""Integer helpers: gcd, modular inverse, primality, prime-power classification.

Python ints are arbitrary precision, so they serve directly as both the
unsigned and the signed big-integer type; nothing here wraps them.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import NotInvertible

DEFAULT_ROUNDS = 40

# Deterministic Miller-Rabin witnesses for n < 2**64 (Jim Sinclair's set).
_SINCLAIR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
_TWO64 = 1 << 64


@dataclass(frozen=True)
class PrimePowerClass:
    """``p**n`` (``twice=False``) or ``2 * p**n`` (``twice=True``), ``p`` an odd prime."""

    p: int
    n: int
    twice: bool

    @property
    def value(self) -> int:
        v = self.p**self.n
        return 2 * v if self.twice else v

    def to_json(self) -> dict:
        return {"p": str(self.p), "n": self.n, "twice": self.twice}


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def mod_inv(a: int, m: int) -> int:
    """Return ``x`` in ``[0, m)`` with ``a*x == 1 (mod m)``."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if math.gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m}")
    if m == 1:
        return 0
    return pow(a, -1, m)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = DEFAULT_ROUNDS) -> bool:
    """Miller-Rabin test.

    Deterministic below 2**64. Above that, ``rounds`` random bases are used
    (error probability below 4**-rounds); the bases come from an RNG seeded
    by ``n`` so repeated calls agree.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _TWO64:
        bases = [a % n for a in _SINCLAIR_BASES]
        return all(a == 0 or _strong_probable_prime(n, a, d, s) for a in bases)
    rng = random.Random(n)
    return all(
        _strong_probable_prime(n, rng.randrange(2, n - 1), d, s) for _ in range(rounds)
    )


def iroot(n: int, k: int) -> int:
    """Floor of the real k-th root of ``n >= 0``."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    # Newton iteration from an overestimate
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_prime_power(n: int, rounds: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k`` and p prime, else None."""
    if n < 2:
        return None
    for k in range(n.bit_length(), 0, -1):
        r = iroot(n, k)
        if r >= 2 and r**k == n and is_probable_prime(r, rounds):
            return r, k
    return None


def classify_prime_power(n: int, rounds: int = DEFAULT_ROUNDS) -> PrimePowerClass | None:
    """Classify ``n`` as ``p**k`` or ``2*p**k`` with p an odd prime and k >= 1.

    Plain odd primes count (k = 1). 1, 2 and powers of two are not in the class.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    twice = n % 2 == 0
    core = n // 2 if twice else n
    if core % 2 == 0:
        return None
    hit = _perfect_prime_power(core, rounds)
    if hit is None:
        return None
    return PrimePowerClass(p=hit[0], n=hit[1], twice=twice)


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the composite odd ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


_TRIAL_PRIMES = tuple(p for p in range(2, 1000) if all(p % q for q in range(2, int(p**0.5) + 1)))


def factorize(n: int, rounds: int = DEFAULT_ROUNDS) -> dict[int, int]:
    """Prime factorization as ``{prime: exponent}``.

    Trial division up to 1000, then Brent's variant of Pollard rho. Meant for
    the moderate sizes that show up here, not for adversarial inputs.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    rng = None
    stack = [n] if n > 1 else []
    while stack:
        f = stack.pop()
        if f < 1_000_000 or is_probable_prime(f, rounds):
            # below 10**6 every cofactor left after trial division is prime
            out[f] = out.get(f, 0) + 1
            continue
        if rng is None:
            rng = random.Random(n)
        d = _pollard_brent(f, rng)
        stack += [d, f // d]
    return dict(sorted(out.items()))


def primes_up_to(n: int) -> np.ndarray:
    """All primes ``<= n`` by the sieve of Eratosthenes."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, math.isqrt(n) + 1, 2):
        if sieve[p]:
            sieve[p * p :: 2 * p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def prime_power_moduli(limit: int) -> list[int]:
    """Sorted list of every ``p**n`` and ``2*p**n <= limit`` (p odd prime, n >= 1)."""
    out = []
    for p in primes_up_to(limit)[1:].tolist():
        q = p
        while q <= limit:
            out.append(q)
            if 2 * q <= limit:
                out.append(2 * q)
            q *= p
    out.sort()
    return out
