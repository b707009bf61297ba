"""Markoff forms ``m x^2 + (3m - 2u) x y + (v - 3u) y^2`` attached to triples."""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .arith import mod_inv
from .errors import DiscriminantMismatch
from .tree import Triple, is_markoff_triple

SCAN_LIMIT = 10**6
DEFAULT_BOX = 50


@dataclass(frozen=True)
class MarkoffForm:
    a: int
    b: int
    c: int
    source: Triple  # (m, m1, m2), descending
    u: int
    v: int

    @property
    def m(self) -> int:
        return self.source[0]

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def to_json(self) -> dict:
        return {
            "triple": [str(v) for v in self.source],
            "u": str(self.u),
            "v": str(self.v),
            "form": [str(self.a), str(self.b), str(self.c)],
            "delta": str(discriminant(self)),
        }


def form_u_scan(m: int, m1: int, m2: int) -> int:
    """Least ``u >= 0`` with ``u*m1 == +-m2 (mod m)``, by linear scan."""
    for u in range(m):
        r = u * m1 % m
        if r == m2 % m or r == -m2 % m:
            return u
    return 0  # m == 1


def form_u_inverse(m: int, m1: int, m2: int) -> int:
    """Same as ``form_u_scan`` through one modular inverse."""
    if m == 1:
        return 0
    u = m2 * mod_inv(m1, m) % m
    return min(u, m - u)


def markoff_form(triple: Triple) -> MarkoffForm:
    m, m1, m2 = sorted(triple, reverse=True)
    if not is_markoff_triple(m, m1, m2):
        raise ValueError(f"{triple} is not a Markoff triple")
    u = form_u_scan(m, m1, m2) if m <= SCAN_LIMIT else form_u_inverse(m, m1, m2)
    v, rem = divmod(u * u + 1, m)
    if rem:
        raise ArithmeticError(f"u={u} does not satisfy u^2+1 == 0 mod {m}")
    return MarkoffForm(m, 3 * m - 2 * u, v - 3 * u, (m, m1, m2), u, v)


def discriminant(f: MarkoffForm) -> int:
    delta = f.b * f.b - 4 * f.a * f.c
    if delta != 9 * f.m * f.m - 4:
        raise DiscriminantMismatch(f"discriminant {delta} != 9m^2-4 for m={f.m}")
    return delta


@dataclass(frozen=True)
class MinimumReport:
    minimum: int
    at: tuple[int, int]
    radius: int
    equals_m: bool

    @property
    def attained_at_unit(self) -> bool:
        return self.at == (1, 0)


def verify_minimum(f: MarkoffForm, K: int = DEFAULT_BOX) -> MinimumReport:
    """Scan ``0 < max(|x|, |y|) <= K`` for the least ``|f(x, y)|``.

    Only ever a necessary check: the true minimum is an infimum over all
    integer pairs. ``at`` is the first minimiser in scan order, and the
    scan starts at (1, 0).
    """
    if K < 1:
        raise ValueError("box radius must be >= 1")
    best, x, y = kernels.box_min(f.a, f.b, f.c, K)
    return MinimumReport(best, (x, y), K, best == f.m)


def markoff_ratio_check(f: MarkoffForm) -> bool:
    """``m / sqrt(delta) > 1/3``, checked as ``9 m^2 > delta``."""
    return 9 * f.m * f.m > discriminant(f)
