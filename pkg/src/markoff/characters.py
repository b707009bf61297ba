"""The characters ``u_t``, ``v_t`` attached to each slope, and their identities.

``u_t`` is ``m_s / m_r`` modulo ``m_t`` for the Farey triple ``(r, t, s)``,
taken in ``[0, m_t/2]``; ``v_t = (u_t**2 + 1) / m_t``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arith import mod_inv
from .farey import INF, ZERO, FareyTriple, Slope
from .tree import markoff_number, triple_at


@dataclass(frozen=True)
class Character:
    t: Slope
    m: int
    u: int
    v: int

    def to_json(self) -> dict:
        return {"t": str(self.t), "m": str(self.m), "u": str(self.u), "v": str(self.v)}


_MEMO: dict[Slope, Character] = {}
_MEMO_LIMIT = 1 << 17
_MEMO_LOCK = threading.Lock()


def raw_residue(t: Slope) -> int:
    """``m_s * m_r^-1 mod m_t`` in ``[0, m_t)`` before any canonicalisation."""
    if t == ZERO:
        return 0
    if t == INF:
        return 1
    mr, mt, ms = triple_at(t).values
    return ms * mod_inv(mr, mt) % mt


def character(t: Slope) -> Character:
    hit = _MEMO.get(t)
    if hit is not None:
        return hit
    m = markoff_number(t)
    u = raw_residue(t)
    if 2 * u > m:
        u = m - u
    q, rem = divmod(u * u + 1, m)
    if rem:
        raise ArithmeticError(f"m_t={m} does not divide u_t^2+1 at t={t}")
    ch = Character(t, m, u, q)
    with _MEMO_LOCK:
        if len(_MEMO) >= _MEMO_LIMIT:
            _MEMO.clear()
        _MEMO[t] = ch
    return ch


def seed(records: Iterable[Character]) -> None:
    """Preload memo entries (e.g. from an on-disk cache)."""
    with _MEMO_LOCK:
        for ch in records:
            _MEMO[ch.t] = ch


def clear_memo() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()


def memo_snapshot() -> list[Character]:
    with _MEMO_LOCK:
        return list(_MEMO.values())


def u_of(t: Slope) -> int:
    return character(t).u


def v_of(t: Slope) -> int:
    return character(t).v


def check_lemma_um(ft: FareyTriple) -> bool:
    """``u_t m_r - u_r m_t == m_s`` and ``u_s m_t - u_t m_s == m_r``."""
    cr, ct, cs = (character(x) for x in ft)
    return (ct.u * cr.m - cr.u * ct.m == cs.m) and (cs.u * ct.m - ct.u * cs.m == cr.m)


def reflected(ft: FareyTriple) -> tuple[Slope, Slope]:
    """``(s', r')``: the other mediants of ``(r, t)`` and ``(t, s)``.

    ``s' = r (+) t`` lies across the edge ``r t`` from ``s`` and
    ``r' = t (+) s`` lies across ``t s`` from ``r``.
    """
    r, t, s = ft
    return Slope(r.nu + t.nu, r.mu + t.mu), Slope(t.nu + s.nu, t.mu + s.mu)


def check_product_identities(ft: FareyTriple) -> bool:
    """``m_s m_s' == m_r^2 + m_t^2`` and ``m_r m_r' == m_t^2 + m_s^2``."""
    r, t, s = ft
    s_ref, r_ref = reflected(ft)
    mr, mt, ms = markoff_number(r), markoff_number(t), markoff_number(s)
    return (ms * markoff_number(s_ref) == mr * mr + mt * mt) and (
        mr * markoff_number(r_ref) == mt * mt + ms * ms
    )


def check_monotonicity(slopes: Sequence[Slope]) -> bool:
    """True iff ``u_t / m_t`` strictly increases along ``slopes``."""
    prev = None
    for t in slopes:
        ch = character(t)
        if prev is not None and not prev.u * ch.m < ch.u * prev.m:
            return False
        prev = ch
    return True


def u_from_flank(ft: FareyTriple, side: str) -> int:
    """The residue of ``t`` recomputed from a neighbouring Farey triple.

    ``side='left'`` uses ``(r, s', t)`` giving ``m_r / m_s'``; ``'right'``
    uses ``(t, r', s)`` giving ``m_r' / m_s``. Both must equal
    ``raw_residue(t)`` with no sign folding.
    """
    r, t, s = ft
    s_ref, r_ref = reflected(ft)
    mt = markoff_number(t)
    if side == "left":
        u = markoff_number(r) * mod_inv(markoff_number(s_ref), mt) % mt
    elif side == "right":
        u = markoff_number(r_ref) * mod_inv(markoff_number(s), mt) % mt
    else:
        raise ValueError("side must be 'left' or 'right'")
    return u
