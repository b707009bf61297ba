"""Root counting for x^2 + l (mod m) and unicity certificates for Markoff numbers.

For ``m = p**n`` or ``2 p**n`` (p an odd prime) the congruence
``x^2 + 1 == 0 (mod m)`` has at most one root in ``(0, m/2)``. Since ``u_t``
is such a root and ``u_t / m_t`` is strictly increasing in ``t``, a Markoff
number of that shape sits on exactly one slope. The certificate records
the evidence for one number.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from . import kernels
from .arith import DEFAULT_ROUNDS, PrimePowerClass, classify_prime_power, factorize
from .characters import u_of
from .errors import CertificateViolation, NotCoprime
from .farey import Slope
from .tree import enumerate_numbers, markoff_number

BRUTE_LIMIT = 10**7


def sqrt_mod_prime(a: int, p: int) -> list[int]:
    """Square roots of ``a`` modulo an odd prime ``p`` (Tonelli-Shanks), sorted."""
    a %= p
    if a == 0:
        return [0]
    if pow(a, (p - 1) // 2, p) != 1:
        return []
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return sorted({r, p - r})
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    mm, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (mm - i - 1), p)
        mm, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return sorted({r, p - r})


def sqrt_mod_prime_power(a: int, p: int, n: int) -> list[int]:
    """Roots of ``x^2 == a (mod p**n)`` for ``a`` coprime to the prime ``p``."""
    if p == 2:
        mod = min(2**n, 8)
        roots = [x for x in range(1, mod, 2) if (x * x - a) % mod == 0]
        while mod < 2**n:
            nxt = mod * 2
            roots = sorted({y for r in roots for y in (r, r + mod) if (y * y - a) % nxt == 0})
            mod = nxt
        return roots
    if p < 64:
        roots = [x for x in range(p) if (x * x - a) % p == 0]
    else:
        roots = sqrt_mod_prime(a, p)
    mod = p
    for _ in range(n - 1):
        nxt = mod * p
        lifted = []
        for r in roots:
            # Newton step; 2r is a unit because p is odd and r != 0
            f = (r * r - a) % nxt
            lifted.append((r - f * pow(2 * r, -1, nxt)) % nxt)
        roots, mod = lifted, nxt
    return sorted(roots)


def hensel_roots(l: int, m: int) -> list[int]:
    """Roots of ``x^2 + l == 0 (mod m)`` in ``(0, m/2)`` via factorization and lifting."""
    if math.gcd(l, m) != 1:
        raise NotCoprime(f"gcd({l}, {m}) != 1")
    if m == 1:
        return []
    residues = [0]
    modulus = 1
    for p, e in factorize(m).items():
        pe = p**e
        local = sqrt_mod_prime_power(-l % pe, p, e)
        if not local:
            return []
        combined = []
        for r0, r1 in product(residues, local):
            # CRT for the coprime moduli ``modulus`` and ``pe``
            k = (r1 - r0) * pow(modulus, -1, pe) % pe
            combined.append(r0 + modulus * k)
        residues, modulus = combined, modulus * pe
    return sorted(x for x in residues if 0 < 2 * x < m)


def count_roots(l: int, m: int, brute_limit: int = BRUTE_LIMIT) -> tuple[int, list[int]]:
    """All ``x`` in ``(0, m/2)`` with ``x^2 + l == 0 (mod m)``, and their count."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if math.gcd(l, m) != 1:
        raise NotCoprime(f"gcd({l}, {m}) != 1")
    if m <= brute_limit:
        roots = kernels.half_roots(l % m, m)
    else:
        roots = hensel_roots(l, m)
    return len(roots), roots


@dataclass(frozen=True)
class UnicityCertificate:
    m: int
    cls: PrimePowerClass
    u: int
    slope: Slope
    root_count: int
    primality_rounds: int | None  # None: primality of p was decided deterministically

    def to_json(self) -> dict:
        return {
            "m": str(self.m),
            "class": self.cls.to_json(),
            "u": str(self.u),
            "slope": str(self.slope),
            "root_count": self.root_count,
            "primality_rounds": self.primality_rounds,
        }


def certify_unique(t: Slope, rounds: int = DEFAULT_ROUNDS,
                   brute_limit: int = BRUTE_LIMIT) -> UnicityCertificate | None:
    """Certificate for ``m_t`` when it is ``p**n`` or ``2 p**n``; None otherwise.

    Raises ``CertificateViolation`` if more than one root exists or ``u_t``
    is not the root; either would mean a bug somewhere upstream.
    """
    m = markoff_number(t)
    cls = classify_prime_power(m, rounds)
    if cls is None:
        return None
    count, roots = count_roots(1, m, brute_limit)
    u = u_of(t)
    if count > 1:
        raise CertificateViolation(f"m={m} (t={t}) has {count} roots in (0, m/2): {roots}")
    if u not in roots:
        raise CertificateViolation(f"u_t={u} is not a root of x^2+1 mod {m} (t={t})")
    used = None if cls.p < 1 << 64 else rounds
    return UnicityCertificate(m, cls, u, t, count, used)


def find_duplicates(bound: int, threads: int = 1) -> dict[int, list[Slope]]:
    """Markoff numbers ``<= bound`` sitting on more than one slope (expected: none)."""
    return {
        rec.m: list(rec.slopes)
        for rec in enumerate_numbers(bound, threads=threads)
        if len(rec.slopes) > 1
    }


@dataclass
class TheoremReport:
    bound: int
    numbers: list[int] = field(default_factory=list)
    certificates: list[UnicityCertificate] = field(default_factory=list)
    unmet: list[int] = field(default_factory=list)  # numbers outside the hypothesis
    duplicates: dict[int, list[Slope]] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.duplicates

    def to_json(self) -> dict:
        return {
            "bound": str(self.bound),
            "numbers": len(self.numbers),
            "certified": [c.to_json() for c in self.certificates],
            "hypothesis_unmet": len(self.unmet),
            "duplicates": {str(m): [str(s) for s in ss] for m, ss in self.duplicates.items()},
            "violations": self.violations,
        }


def verify_theorem(bound: int, threads: int = 1, rounds: int = DEFAULT_ROUNDS) -> TheoremReport:
    """Certify every prime-power or twice-prime-power Markoff number ``<= bound``.

    1 and 2 are outside the hypothesis (p must be an odd prime, n >= 1) and
    land in ``unmet`` with every other composite shape.
    """
    records = enumerate_numbers(bound, threads=threads)
    report = TheoremReport(bound, [r.m for r in records])
    report.duplicates = {r.m: list(r.slopes) for r in records if len(r.slopes) > 1}

    def work(rec):
        out = []
        for t in rec.slopes:
            try:
                out.append(certify_unique(t, rounds))
            except CertificateViolation as exc:
                out.append(str(exc))
        return rec, out

    workers = max(1, threads)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(work, records))
    for rec, outs in results:
        if outs[0] is None:
            report.unmet.append(rec.m)
            continue
        for item in outs:
            if isinstance(item, str):
                report.violations.append(item)
            else:
                report.certificates.append(item)
        if len(rec.slopes) > 1:
            report.violations.append(f"m={rec.m} is a prime-power class number on slopes {rec.slopes}")
    return report
