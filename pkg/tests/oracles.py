"""Slow, independent re-derivations used to check the package.

Nothing here imports ``markoff``; every oracle is the most literal
computation available.
"""
from __future__ import annotations

from collections import deque


def trial_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime_td(n: int) -> bool:
    return n >= 2 and trial_factor(n) == {n: 1}


def prime_power_shape(n: int):
    """(p, k, twice) for n = p^k or 2 p^k with p odd, k >= 1; else None."""
    twice = n % 2 == 0
    f = trial_factor(n // 2 if twice else n)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    if p == 2:
        return None
    return p, k, twice


def markoff_bfs(bound: int) -> set[tuple[int, int, int]]:
    """Sorted Markoff triples with max <= bound, by search over neighbours.

    Reduction strictly lowers the maximum, so pruning at ``bound`` loses
    nothing.
    """
    start = (1, 1, 1)
    seen = {start}
    todo = deque([start])
    while todo:
        x, y, z = todo.popleft()
        for nb in ((3 * y * z - x, y, z), (x, 3 * x * z - y, z), (x, y, 3 * x * y - z)):
            key = tuple(sorted(nb))
            if key[0] > 0 and key[2] <= bound and key not in seen:
                seen.add(key)
                todo.append(key)
    return seen


def markoff_numbers_bfs(bound: int) -> list[int]:
    return sorted({v for t in markoff_bfs(bound) for v in t})


def _mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mediant_table(max_level: int):
    """``{(nu, mu): (level, matrix)}`` built by inserting mediants row by row.

    Matrices follow M(r+s) = M(r) M(s) with the smaller slope on the left,
    starting from M(0/1) = [[2,1],[1,1]] and M(1/0) = [[3,4],[2,3]].
    Also returns the ascending list of slopes.
    """
    A = (2, 1, 1, 1)
    AB = (3, 4, 2, 3)
    row = [(0, 1), (1, 0)]  # (nu, mu), ascending
    table = {(0, 1): (0, A), (1, 0): (0, AB)}
    for level in range(1, max_level + 1):
        nxt = [row[0]]
        for lo, hi in zip(row, row[1:]):
            mid = (lo[0] + hi[0], lo[1] + hi[1])
            table[mid] = (level, _mul(table[lo][1], table[hi][1]))
            nxt += [mid, hi]
        row = nxt
    return table, row


def farey_triples(max_level: int):
    """Every (r, t, s) with t = r + s, t of level 1..max_level, as (nu, mu) pairs."""
    out = []
    row = [(0, 1), (1, 0)]
    for _ in range(max_level):
        nxt = [row[0]]
        for lo, hi in zip(row, row[1:]):
            mid = (lo[0] + hi[0], lo[1] + hi[1])
            out.append((lo, mid, hi))
            nxt += [mid, hi]
        row = nxt
    return out


def u_brute(m: int, mr: int, ms: int) -> int:
    """Least u in [0, m/2] with u * mr == +-ms (mod m)."""
    for u in range(m // 2 + 1):
        r = u * mr % m
        if r == ms % m or r == -ms % m:
            return u
    raise AssertionError("no character")


def roots_brute(l: int, m: int) -> list[int]:
    return [x for x in range(1, m) if 2 * x < m and (x * x + l) % m == 0]
