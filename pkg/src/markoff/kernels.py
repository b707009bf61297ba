"""Backend selection for the machine-word inner loops.

The Cython extension ``markoff._kernels`` is used when it imports;
otherwise, or when ``MARKOFF_PURE_PYTHON=1``, the pure-Python module is
used. The wrappers here own the word-size limits: ``half_roots`` and
``box_min`` send wider inputs down the Python route, which works on
unbounded ints; the table kernels reject them.
"""
from __future__ import annotations

import os

from . import _kernels_py

_py = _kernels_py
_ext = None
if os.environ.get("MARKOFF_PURE_PYTHON") != "1":
    try:
        from . import _kernels as _ext  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _ext = None

BACKEND = "cython" if _ext is not None else "python"
_impl = _ext if _ext is not None else _py

# x < m/2 and x*x must fit in 64 bits
_ROOT_LIMIT = 1 << 32
_INT63 = 1 << 62


def half_roots(l: int, m: int) -> list[int]:
    """Brute force: every x with 0 < x < m/2 and x^2 + l == 0 (mod m)."""
    if m < _ROOT_LIMIT and 0 <= l < _ROOT_LIMIT:
        return _impl.half_roots(l, m)
    return _py.half_roots(l, m)


def residue_counts(m: int, lmax: int):
    """Brute-force root counts in (0, m/2) of x^2 + l for every l in 0..lmax."""
    if m >= 1 << 31:
        raise ValueError("residue_counts is for word-size moduli")
    return _impl.residue_counts(m, lmax)


def box_min(a: int, b: int, c: int, K: int) -> tuple[int, int, int]:
    """Minimum of |f| over the box of radius K, with the first minimiser."""
    if 4 * max(abs(a), abs(b), abs(c)) * K * K < _INT63:
        return tuple(int(v) for v in _impl.box_min(a, b, c, K))  # type: ignore[return-value]
    return _py.box_min(a, b, c, K)


def x2p1_table(limit: int):
    """``(count, root)`` arrays indexed by m <= limit for x^2 + 1 == 0 (mod m)."""
    if limit > 1 << 31:
        raise ValueError("x2p1_table limit too large")
    return _impl.x2p1_table(limit)


def using(backend: str):
    """Return the raw implementation module for ``"cython"`` or ``"python"``."""
    if backend == "python":
        return _py
    if backend == "cython":
        if _ext is None:
            raise ImportError("Cython kernels are not built")
        return _ext
    raise ValueError(backend)
