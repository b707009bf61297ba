"""Cross-module invariant sweep over the tree of Farey triples.

Each check is run for every Farey triple ``(r, t, s)`` reached (``t`` of
level >= 1), so level 0 alone is a vacuous pass. Per-slope checks are run
on ``t``; the level-0 slopes only ever appear as ``r`` or ``s``.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from . import characters as ch
from . import forms
from .farey import INF, ZERO, Slope
from .matrix import (
    alt_structure_ok,
    commutator_trace,
    markoff_matrix,
    mat_mul,
    rho,
    structure_check,
    trace,
)
from .tree import congruence_report, is_markoff_triple, iter_farey_values, markoff_number, sort_triple

BOX_M_LIMIT = 10**4
CONGRUENCE_FACTOR_LIMIT = 10**18

CHECKS = (
    "equation",
    "coprime",
    "path-recursion",
    "trace/3",
    "u-m-identities",
    "products",
    "residue",
    "u-bounds",
    "u-well-defined",
    "structure",
    "alt-structure",
    "commutator",
    "noncommuting",
    "monotone-u/m",
    "monotone-rho",
    "distinct-matrices",
    "distinct-numbers",
    "form-discriminant",
    "form-ratio",
    "form-u",
    "form-box",
    "congruence",
)


@dataclass
class SweepReport:
    checked: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    witnesses: dict[str, list[str]] = field(default_factory=dict)
    triples: int = 0

    def record(self, name: str, ok: bool, witness) -> None:
        self.checked[name] += 1
        if not ok:
            self.failed[name] += 1
            self.witnesses.setdefault(name, []).append(str(witness))

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def lines(self) -> list[str]:
        out = []
        for name in CHECKS:
            n, bad = self.checked[name], self.failed[name]
            status = "ok" if bad == 0 else "FAIL"
            line = f"{name:<20} {status:<4} checked={n} failed={bad}"
            if bad:
                line += " first=" + self.witnesses[name][0]
            out.append(line)
        return out


def run_sweep(max_level: int | None = None, bound: int | None = None,
              box_radius: int = forms.DEFAULT_BOX) -> SweepReport:
    if max_level is None and bound is None:
        raise ValueError("give max_level or bound")
    rep = SweepReport()
    seen_slopes: list[Slope] = []
    matrices = set()
    numbers: dict[int, Slope] = {}
    for ft, (mr, mt, ms) in iter_farey_values(max_level=max_level, bound=bound):
        r, t, s = ft
        rep.triples += 1
        seen_slopes.append(t)
        rep.record("equation", is_markoff_triple(mr, mt, ms), t)
        rep.record("coprime", math.gcd(mr, mt) == math.gcd(mt, ms) == math.gcd(mr, ms) == 1, t)
        rep.record("path-recursion", markoff_number(t) == mt, t)
        M = markoff_matrix(t)
        rep.record("trace/3", trace(M) == 3 * mt and M.det == 1 and min(M) > 0, t)
        rep.record("u-m-identities", ch.check_lemma_um(ft), ft)
        rep.record("products", ch.check_product_identities(ft), ft)
        c = ch.character(t)
        rep.record("residue", (c.u * c.u + 1) % c.m == 0 and c.v * c.m == c.u * c.u + 1, t)
        raw = ch.raw_residue(t)
        rep.record("u-bounds", 0 < raw and 2 * raw < mt, t)
        rep.record("u-well-defined",
                   ch.u_from_flank(ft, "left") == raw == ch.u_from_flank(ft, "right"), t)
        rep.record("structure", structure_check(t).ok, t)
        rep.record("alt-structure", alt_structure_ok(t), t)
        rep.record("commutator", commutator_trace(r, s) == commutator_trace(r, t)
                   == commutator_trace(t, s) == -2, ft)
        Mr, Ms = markoff_matrix(r), markoff_matrix(s)
        rep.record("noncommuting", mat_mul(Mr, Ms) != mat_mul(Ms, Mr), ft)
        rep.record("distinct-matrices", M not in matrices, t)
        matrices.add(M)
        rep.record("distinct-numbers", mt not in numbers, f"{t} vs {numbers.get(mt)}")
        numbers.setdefault(mt, t)
        f = forms.markoff_form(sort_triple(mr, mt, ms))
        try:
            delta = forms.discriminant(f)
            rep.record("form-discriminant", delta == 9 * mt * mt - 4, t)
            rep.record("form-ratio", forms.markoff_ratio_check(f), t)
        except forms.DiscriminantMismatch as exc:
            rep.record("form-discriminant", False, f"{t}: {exc}")
        rep.record("form-u", f.u == c.u, t)
        if mt <= BOX_M_LIMIT:
            box = forms.verify_minimum(f, box_radius)
            rep.record("form-box", box.equals_m and box.attained_at_unit, t)
        rep.record("congruence", congruence_report(mt, CONGRUENCE_FACTOR_LIMIT).ok, t)
    if seen_slopes:
        ordered = [ZERO, *sorted(seen_slopes), INF]
        rep.record("monotone-u/m", ch.check_monotonicity(ordered), "sorted slopes")
        rhos = [rho(markoff_matrix(t)) for t in ordered]
        rep.record("monotone-rho", all(a > b for a, b in zip(rhos, rhos[1:])), "sorted slopes")
    return rep
