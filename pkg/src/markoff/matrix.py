"""2x2 integer matrices, Fricke trace identities and the Markoff matrices ``M_t``.

``M_0/1 = A``, ``M_1/0 = AB`` and ``M_{r (+) s} = M_r M_s`` for ``r < s``.
Everything is exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .characters import character
from .errors import NotFareyPair, ZeroDenominator
from .farey import INF, ZERO, Slope, is_farey_pair, stern_brocot_path


class Mat2(NamedTuple):
    """Row-major ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def to_json(self) -> list[list[str]]:
        return [[str(self.a), str(self.b)], [str(self.c), str(self.d)]]


IDENTITY = Mat2(1, 0, 0, 1)
A = Mat2(2, 1, 1, 1)
B = Mat2(1, 1, 1, 2)
# alternative generators; M_1/0 is no longer AB
ALT_ZERO = Mat2(2, 1, 1, 1)
ALT_INF = Mat2(5, 2, 2, 1)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return Mat2(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def mat_inv(x: Mat2) -> Mat2:
    """Inverse of a determinant-1 matrix (the adjugate)."""
    if x.det != 1:
        raise ValueError(f"determinant is {x.det}, expected 1")
    return Mat2(x.d, -x.b, -x.c, x.a)


def trace(x: Mat2) -> int:
    return x.a + x.d


def commutator(x: Mat2, y: Mat2) -> Mat2:
    return x @ y @ mat_inv(x) @ mat_inv(y)


@dataclass(frozen=True)
class FrickeResult:
    sum_identity: bool  # tr(XY) + tr(XY^-1) == tr X tr Y
    commutator_identity: bool  # tr^2 X + tr^2 Y + tr^2 XY - trX trY trXY == 2 + tr[X,Y]
    markoff_identity: bool | None  # only asserted when tr[X,Y] == -2
    commutator_trace: int

    @property
    def ok(self) -> bool:
        return self.sum_identity and self.commutator_identity and self.markoff_identity is not False


def fricke_check(x: Mat2, y: Mat2) -> FrickeResult:
    tx, ty, txy = trace(x), trace(y), trace(x @ y)
    ctr = trace(commutator(x, y))
    eq_sum = txy + trace(x @ mat_inv(y)) == tx * ty
    eq_comm = tx * tx + ty * ty + txy * txy - tx * ty * txy == 2 + ctr
    eq_markoff = None
    if ctr == -2:
        eq_markoff = tx * tx + ty * ty + txy * txy == tx * ty * txy
    return FrickeResult(eq_sum, eq_comm, eq_markoff, ctr)


def _path_product(t: Slope, zero: Mat2, inf: Mat2) -> Mat2:
    if t == ZERO:
        return zero
    if t == INF:
        return inf
    left, right = zero, inf
    for step in stern_brocot_path(t):
        mid = left @ right
        if step == "L":
            right = mid
        else:
            left = mid
    return left @ right


@lru_cache(maxsize=1 << 16)
def markoff_matrix(t: Slope) -> Mat2:
    return _path_product(t, A, A @ B)


@lru_cache(maxsize=1 << 12)
def alt_markoff_matrix(t: Slope) -> Mat2:
    """Markoff matrix built from the alternative generators [[2,1],[1,1]], [[5,2],[2,1]]."""
    return _path_product(t, ALT_ZERO, ALT_INF)


def markoff_number_from_matrix(t: Slope) -> int:
    tr = trace(markoff_matrix(t))
    q, rem = divmod(tr, 3)
    if rem:
        raise ArithmeticError(f"trace of M_{t} is {tr}, not a multiple of 3")
    return q


def commutator_trace(r: Slope, s: Slope) -> int:
    if not is_farey_pair(r, s):
        raise NotFareyPair(f"{r} and {s} are not Farey neighbours")
    if s < r:
        r, s = s, r
    return trace(commutator(markoff_matrix(r), markoff_matrix(s)))


@dataclass(frozen=True)
class StructureReport:
    t: Slope
    formula: bool  # M_t == [[2m-u, 2m+u-v], [m, m+u]]
    order: bool  # c <= d <= a <= b (strict off the roots)
    ratios: bool  # 3a >= 2b and 3c >= 2d (strict off the roots)
    trace_rule: bool  # a + d == 3c
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def structure_check(t: Slope, m: Mat2 | None = None) -> StructureReport:
    """Check ``M_t`` against its closed form and the entry inequalities.

    Every inequality is checked literally, at the roots too. At ``t = 0/1``
    the matrix ``[[2, 1], [1, 1]]`` has ``a > b``, so ``order`` is False
    there; the report names exactly which comparisons failed.
    """
    M = markoff_matrix(t) if m is None else m
    a, b, c, d = M
    ch = character(t)
    strict = not t.is_root()
    lt = (lambda x, y: x < y) if strict else (lambda x, y: x <= y)
    fails = []
    formula = M == Mat2(2 * ch.m - ch.u, 2 * ch.m + ch.u - ch.v, ch.m, ch.m + ch.u)
    if not formula:
        fails.append("closed form")
    checks = {
        "c<=d": lt(c, d),
        "d<=a": lt(d, a),
        "a<=b": lt(a, b),
        "3a>=2b": lt(2 * b, 3 * a),
        "3c>=2d": lt(2 * d, 3 * c),
    }
    fails += [k for k, okay in checks.items() if not okay]
    trace_rule = a + d == 3 * c
    if not trace_rule:
        fails.append("a+d=3c")
    order = checks["c<=d"] and checks["d<=a"] and checks["a<=b"]
    ratios = checks["3a>=2b"] and checks["3c>=2d"]
    return StructureReport(t, formula, order, ratios, trace_rule, tuple(fails))


def rho(M: Mat2) -> Fraction:
    """The index ``a / c`` as an exact fraction."""
    if M.c == 0:
        raise ZeroDenominator("rho needs c != 0")
    return Fraction(M.a, M.c)


def alt_structure_ok(t: Slope) -> bool:
    """Alternative-generator matrix equals ``[[2m+u, m], [2m-u-v, m-u]]``."""
    ch = character(t)
    return alt_markoff_matrix(t) == Mat2(2 * ch.m + ch.u, ch.m, 2 * ch.m - ch.u - ch.v, ch.m - ch.u)
