"""Markoff triples, neighbours, reduction, and slope-indexed Markoff numbers.

Slope convention: ``m(1/2) = 13`` and ``m(2/1) = 29``, the one fixed by the
matrices ``M_t`` (trace 3*m_t) and by the binary-tree picture of the
numbers.
"""
from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .arith import factorize
from .errors import RootSlope
from .farey import (
    INF,
    ONE,
    ZERO,
    FareyTriple,
    Slope,
    direct_descents,
    farey_level,
    stern_brocot_path,
)

Triple = tuple[int, int, int]


def is_markoff_triple(x: int, y: int, z: int) -> bool:
    return x * x + y * y + z * z == 3 * x * y * z


def sort_triple(x: int, y: int, z: int) -> Triple:
    return tuple(sorted((x, y, z)))  # type: ignore[return-value]


def neighbors(x: int, y: int, z: int) -> tuple[Triple, Triple, Triple]:
    """The three neighbours, each replacing one coordinate (positions kept)."""
    return (
        (3 * y * z - x, y, z),
        (x, 3 * x * z - y, z),
        (x, y, 3 * x * y - z),
    )


def reduce(triple: Triple) -> list[Triple]:
    """Path from ``triple`` down to (1, 1, 1), each entry sorted ascending."""
    x, y, z = sort_triple(*triple)
    if not is_markoff_triple(x, y, z):
        raise ValueError(f"{triple} is not a Markoff triple")
    path = [(x, y, z)]
    while (x, y, z) != (1, 1, 1):
        x, y, z = sort_triple(x, y, 3 * x * y - z)
        path.append((x, y, z))
    return path


@lru_cache(maxsize=1 << 16)
def _bracket_values(t: Slope) -> tuple[int, int, int]:
    """``(m_r, m_t, m_s)`` for the Farey triple of ``t`` (level >= 1)."""
    left, right, mid = 1, 2, 5
    for step in stern_brocot_path(t):
        if step == "L":
            # new triple (left, ?, mid); the dropped value is right
            left, mid, right = left, 3 * left * mid - right, mid
        else:
            left, mid, right = mid, 3 * mid * right - left, right
    return left, mid, right


def markoff_number(t: Slope) -> int:
    if t == ZERO:
        return 1
    if t == INF:
        return 2
    return _bracket_values(t)[1]


class SlopedTriple(NamedTuple):
    farey: FareyTriple
    values: Triple  # (m_r, m_t, m_s)


def triple_at(t: Slope) -> SlopedTriple:
    """Farey triple ``(r, t, s)`` of ``t`` with its Markoff values."""
    if t.is_root():
        raise RootSlope(f"{t} sits on a singular triple; use root_triple()")
    r, s = direct_descents(t)
    return SlopedTriple(FareyTriple(r, t, s), _bracket_values(t))


def root_triple(t: Slope) -> Triple:
    """The singular triple conventionally attached to 0/1 or 1/0."""
    if t == ZERO:
        return (1, 1, 1)
    if t == INF:
        return (1, 1, 2)
    raise ValueError(f"{t} is not a level-0 slope")


def _children(node):
    r, t, s, mr, mt, ms, lvl = node
    return (
        (r, Slope(r.nu + t.nu, r.mu + t.mu), t, mr, 3 * mr * mt - ms, mt, lvl + 1),
        (t, Slope(t.nu + s.nu, t.mu + s.mu), s, mt, 3 * mt * ms - mr, ms, lvl + 1),
    )


def _walk(stack, max_level=None, bound=None):
    while stack:
        node = stack.pop()
        r, t, s, mr, mt, ms, lvl = node
        if max_level is not None and lvl > max_level:
            continue
        if bound is not None and mt > bound:
            continue
        yield FareyTriple(r, t, s), (mr, mt, ms)
        left, right = _children(node)
        stack.append(right)
        stack.append(left)


def iter_farey_values(max_level: int | None = None, bound: int | None = None
                      ) -> Iterator[tuple[FareyTriple, Triple]]:
    """Walk the tree of Farey triples with their values, depth first.

    Stops below ``max_level`` (Farey level of ``t``) and/or prunes any node
    whose Markoff number exceeds ``bound``; children always carry larger
    numbers than their parent, so pruning never loses anything.
    """
    return _walk([(ZERO, ONE, INF, 1, 5, 2, 1)], max_level, bound)


@dataclass(frozen=True)
class NumberRecord:
    m: int
    slopes: tuple[Slope, ...]
    triple: Triple
    level: int

    def to_json(self) -> dict:
        return {
            "m": str(self.m),
            "slopes": [str(s) for s in self.slopes],
            "level": self.level,
            "triple": [str(v) for v in self.triple],
        }


def _collect(seeds, bound):
    return [(vals[1], ft.t, sort_triple(*vals)) for ft, vals in _walk(list(seeds), bound=bound)]


def enumerate_numbers(bound: int, threads: int = 1) -> list[NumberRecord]:
    """Every Markoff number ``<= bound`` with all slopes attaining it.

    With ``threads > 1`` the tree is cut into at least ``threads`` subtrees
    explored by a thread pool; the merged result is sorted, so it does not
    depend on scheduling.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    found: list[tuple[int, Slope, Triple]] = [(1, ZERO, (1, 1, 1))]
    if bound >= 2:
        found.append((2, INF, (1, 1, 2)))
    root = (ZERO, ONE, INF, 1, 5, 2, 1)
    if threads <= 1:
        found += _collect([root], bound)
        return _group(found)
    frontier = [root]
    while 0 < len(frontier) < threads:
        nxt = []
        for node in frontier:
            if node[4] > bound:
                continue
            found.append((node[4], node[1], sort_triple(*node[3:6])))
            nxt += _children(node)
        frontier = nxt
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(lambda node: _collect([node], bound), frontier):
            found += part
    return _group(found)


def _group(found: list[tuple[int, Slope, Triple]]) -> list[NumberRecord]:
    groups: dict[int, list[tuple[Slope, Triple]]] = defaultdict(list)
    for m, t, triple in found:
        groups[m].append((t, triple))
    out = []
    for m in sorted(groups):
        entries = sorted(groups[m], key=lambda e: e[0])
        slopes = tuple(e[0] for e in entries)
        out.append(NumberRecord(m, slopes, entries[0][1], farey_level(slopes[0])))
    return out


def enumerate_level(max_level: int) -> list[NumberRecord]:
    """Records for every slope of Farey level ``<= max_level``, sorted by m."""
    if max_level < 0:
        raise ValueError("level must be >= 0")
    found = [(1, ZERO, (1, 1, 1)), (2, INF, (1, 1, 2))]
    for ft, vals in iter_farey_values(max_level=max_level):
        found.append((vals[1], ft.t, sort_triple(*vals)))
    return _group(found)


@dataclass(frozen=True)
class CongruenceReport:
    m: int
    parity: str  # "odd" or "even"
    modulus: int  # 4 for odd m, 32 for even m
    residue: int
    expected: int  # 1 for odd, 2 for even
    odd_prime_factors: tuple[int, ...] | None  # None when m was too large to factor
    factors_ok: bool | None

    @property
    def ok(self) -> bool:
        return self.residue == self.expected and self.factors_ok is not False


def congruence_report(m: int, factor_limit: int = 1 << 64) -> CongruenceReport:
    """Residue checks for a Markoff number: odd ones are 1 mod 4, even ones 2 mod 32.

    For ``m < factor_limit`` also checks every odd prime factor is 1 mod 4.
    """
    if m % 2:
        parity, modulus, expected = "odd", 4, 1
    else:
        parity, modulus, expected = "even", 32, 2
    primes = None
    ok = None
    if m < factor_limit:
        primes = tuple(p for p in factorize(m) if p != 2)
        ok = all(p % 4 == 1 for p in primes)
    return CongruenceReport(m, parity, modulus, m % modulus, expected, primes, ok)
