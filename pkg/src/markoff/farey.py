"""Slopes in [0, inf], Farey sums, direct descents and Farey levels.

A slope ``nu/mu`` is kept in lowest terms with ``mu, nu >= 0``; infinity is
``1/0``. All comparisons are by cross-multiplication.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import NotFareyPair, RootSlope, ZeroSlope


@dataclass(frozen=True, slots=True)
class Slope:
    nu: int  # numerator
    mu: int  # denominator

    def __post_init__(self):
        if self.mu < 0 or self.nu < 0:
            raise ValueError("slope components must be non-negative")
        if self.mu == 0 and self.nu == 0:
            raise ZeroSlope("0/0 is not a slope")
        if math.gcd(self.mu, self.nu) != 1:
            raise ValueError(f"{self.nu}/{self.mu} is not reduced; use make_slope")

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse ``"nu/mu"`` (or a bare integer ``"nu"``)."""
        head, sep, tail = text.strip().partition("/")
        try:
            nu = int(head)
            mu = int(tail) if sep else 1
        except ValueError:
            raise ValueError(f"malformed slope {text!r}") from None
        if nu < 0 or mu < 0:
            raise ValueError(f"malformed slope {text!r}")
        return make_slope(mu, nu)

    def is_root(self) -> bool:
        return self.mu == 0 or self.nu == 0

    def _cmp(self, other: "Slope") -> int:
        lhs, rhs = self.nu * other.mu, other.nu * self.mu
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __str__(self):
        return f"{self.nu}/{self.mu}"

    def __repr__(self):
        return f"Slope({self.nu}/{self.mu})"


ZERO = Slope(0, 1)
INF = Slope(1, 0)
ONE = Slope(1, 1)


class FareyTriple(NamedTuple):
    """``(r, t, s)`` with ``r < t < s``, ``r, s`` Farey neighbours, ``t = r (+) s``."""

    r: Slope
    t: Slope
    s: Slope


def make_slope(mu: int, nu: int) -> Slope:
    """Reduced slope ``nu/mu``. Note the argument order: denominator first."""
    if mu < 0 or nu < 0:
        raise ValueError("slope components must be non-negative")
    if mu == 0 and nu == 0:
        raise ZeroSlope("0/0 is not a slope")
    g = math.gcd(mu, nu)
    return Slope(nu // g, mu // g)


def is_farey_pair(r: Slope, s: Slope) -> bool:
    return abs(r.nu * s.mu - r.mu * s.nu) == 1


def farey_sum(r: Slope, s: Slope) -> Slope:
    if not is_farey_pair(r, s):
        raise NotFareyPair(f"{r} and {s} are not Farey neighbours")
    return Slope(r.nu + s.nu, r.mu + s.mu)


def direct_descents(t: Slope) -> tuple[Slope, Slope]:
    """The Farey pair ``(r, s)``, ``r < s``, with ``t = r (+) s``.

    Solved directly from one modular inverse; the right descent is ``t``
    minus the left one, componentwise.
    """
    if t.is_root():
        raise RootSlope(f"{t} has no direct descents")
    p, q = t.nu, t.mu
    if q == 1:
        return Slope(p - 1, 1), INF
    # left descent b/a solves p*a - q*b = 1 with 0 < a < q
    a = pow(p, -1, q)
    b = (p * a - 1) // q
    return Slope(b, a), Slope(p - b, q - a)


def farey_triple(t: Slope) -> FareyTriple:
    r, s = direct_descents(t)
    return FareyTriple(r, t, s)


def stern_brocot_path(t: Slope) -> str:
    """Descent word from 1/1 to ``t``; ``L`` moves toward smaller slopes.

    Built from the continued fraction of ``t``, so the cost is linear in the
    word length rather than a search.
    """
    if t.is_root():
        raise RootSlope(f"{t} is not below 1/1")
    p, q = t.nu, t.mu
    parts = []
    right = p > q
    while True:
        if right:
            k, p = divmod(p, q)
            if p == 0:
                parts.append("R" * (k - 1))
                break
            parts.append("R" * k)
        else:
            k, q = divmod(q, p)
            if q == 0:
                parts.append("L" * (k - 1))
                break
            parts.append("L" * k)
        right = not right
    return "".join(parts)


def replay_path(word: str) -> tuple[Slope, Slope, Slope]:
    """Follow ``word`` from 1/1; return the final ``(left, node, right)`` bracket."""
    left, right = (0, 1), (1, 0)
    for ch in word:
        mid = (left[0] + right[0], left[1] + right[1])
        if ch == "L":
            right = mid
        elif ch == "R":
            left = mid
        else:
            raise ValueError(f"bad path letter {ch!r}")
    node = (left[0] + right[0], left[1] + right[1])
    return Slope(*left), Slope(*node), Slope(*right)


def farey_level(t: Slope) -> int:
    """Depth in the mediant tree: 0 for 0/1 and 1/0, else 1 + max over descents.

    Equal to the sum of the continued-fraction partial quotients of ``t``.
    """
    if t.is_root():
        return 0
    p, q = t.nu, t.mu
    total = 0
    while q:
        k, r = divmod(p, q)
        total += k
        p, q = q, r
    return total


def slopes_at_level(n: int) -> list[Slope]:
    """All slopes of Farey level ``n`` in ascending order."""
    if n < 0:
        raise ValueError("level must be >= 0")
    if n == 0:
        return [ZERO, INF]
    # walk the Stern-Brocot tree row by row keeping brackets
    row = [((0, 1), (1, 0))]
    for _ in range(n - 1):
        nxt = []
        for lo, hi in row:
            mid = (lo[0] + hi[0], lo[1] + hi[1])
            nxt.append((lo, mid))
            nxt.append((mid, hi))
        row = nxt
    return [Slope(lo[0] + hi[0], lo[1] + hi[1]) for lo, hi in row]


def iter_slopes(max_level: int) -> Iterator[Slope]:
    """Every slope of level ``<= max_level``, level by level."""
    for n in range(max_level + 1):
        yield from slopes_at_level(n)


def sorted_slopes(max_level: int) -> list[Slope]:
    """Every slope of level ``<= max_level`` in ascending order."""
    out = [ZERO, INF]
    for _ in range(max_level):
        nxt = [out[0]]
        for lo, hi in zip(out, out[1:]):
            nxt.append(Slope(lo.nu + hi.nu, lo.mu + hi.mu))
            nxt.append(hi)
        out = nxt
    return out
