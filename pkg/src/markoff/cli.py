"""Command-line entry point: ``markoff {enumerate,slope,verify,unicity}``.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
All integers in JSON and CSV output are decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
from typing import Sequence

from . import cache, characters
from .arith import DEFAULT_ROUNDS
from .farey import INF, ONE, ZERO, Slope, farey_level
from .forms import DEFAULT_BOX, discriminant, markoff_form, verify_minimum
from .matrix import markoff_matrix
from .sweep import run_sweep
from .tree import (
    NumberRecord,
    enumerate_level,
    enumerate_numbers,
    root_triple,
    sort_triple,
    triple_at,
)
from .unicity import verify_theorem

FORMATS = ("json", "csv", "table", "tree")


def parse_natural(text: str) -> int:
    """Accept ``1000``, ``10^12``, ``10**12`` or ``1e12``."""
    s = text.strip().replace("_", "")
    m = re.fullmatch(r"(\d+)(?:\^|\*\*)(\d+)", s)
    if m:
        return int(m.group(1)) ** int(m.group(2))
    m = re.fullmatch(r"(\d+)[eE](\d+)", s)
    if m:
        return int(m.group(1)) * 10 ** int(m.group(2))
    if s.isdigit():
        return int(s)
    raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")


def _positive(text: str) -> int:
    n = parse_natural(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def geodesic_length(m: int) -> float:
    """Length ``l`` of the closed geodesic with ``3m = 2 cosh(l/2)``."""
    x = 1.5 * m if m < 10**300 else math.inf
    if math.isfinite(x):
        return 2.0 * math.acosh(x)
    # acosh(x) = log(2x) + O(x^-2) far out
    return 2.0 * (math.log(3) + math.log(m))


# -- enumerate ---------------------------------------------------------------

def _write_records(records: Sequence[NumberRecord], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec.to_json()) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["m", "slopes", "level", "x", "y", "z"])
        for rec in records:
            w.writerow([rec.m, ";".join(map(str, rec.slopes)), rec.level, *rec.triple])
    else:
        rows = [("m", "slopes", "level", "triple")]
        rows += [
            (str(r.m), ",".join(map(str, r.slopes)), str(r.level), "(%d, %d, %d)" % r.triple)
            for r in records
        ]
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        for row in rows:
            out.write("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() + "\n")


def read_csv_records(lines) -> list[dict]:
    """Parse ``enumerate --format csv`` output into the JSON record shape."""
    out = []
    for row in csv.DictReader(lines):
        out.append({
            "m": row["m"],
            "slopes": row["slopes"].split(";"),
            "level": int(row["level"]),
            "triple": [row["x"], row["y"], row["z"]],
        })
    return out


def render_tree(max_level: int | None = None, bound: int | None = None) -> list[str]:
    """ASCII tree of Markoff numbers, larger slopes on top."""
    lines: list[str] = []

    def within(t: Slope, m: int) -> bool:
        return (max_level is None or farey_level(t) <= max_level) and (bound is None or m <= bound)

    def walk(r, t, s, mr, mt, ms, prefix, tail, first):
        if not within(t, mt):
            return
        if first:
            lines.append(f"{t}  {mt}")
            child_prefix = ""
        else:
            lines.append(prefix + ("└── " if tail else "├── ") + f"{t}  {mt}")
            child_prefix = prefix + ("    " if tail else "│   ")
        up = (t, Slope(t.nu + s.nu, t.mu + s.mu), s, mt, 3 * mt * ms - mr, ms)
        down = (r, Slope(r.nu + t.nu, r.mu + t.mu), t, mr, 3 * mr * mt - ms, mt)
        kids = [k for k in (up, down) if within(k[1], k[4])]
        for i, k in enumerate(kids):
            walk(*k, child_prefix, i == len(kids) - 1, False)

    if within(INF, 2):
        lines.append(f"{INF}  2")
    walk(ZERO, ONE, INF, 1, 5, 2, "", True, True)
    lines.append(f"{ZERO}  1")
    return lines


def cmd_enumerate(args, out) -> int:
    if args.format == "tree":
        level = args.level
        bound = args.bound if args.level is None else None
        for line in render_tree(level, bound):
            out.write(line + "\n")
        return 0
    if args.level is not None:
        records = enumerate_level(args.level)
    else:
        records = enumerate_numbers(args.bound, threads=args.threads)
    _write_records(records, args.format, out)
    return 0


# -- slope -------------------------------------------------------------------

def slope_report(t: Slope, box_radius: int = DEFAULT_BOX) -> dict:
    ch = characters.character(t)
    M = markoff_matrix(t)
    if t.is_root():
        triple = root_triple(t)
        farey = None
    else:
        st = triple_at(t)
        triple = sort_triple(*st.values)
        farey = [str(x) for x in st.farey]
    form = markoff_form(triple)
    box = verify_minimum(form, box_radius)
    return {
        "t": str(t),
        "level": farey_level(t),
        "m": str(ch.m),
        "u": str(ch.u),
        "v": str(ch.v),
        "triple": [str(x) for x in triple],
        "farey": farey,
        "M": M.to_json(),
        "form": [str(form.a), str(form.b), str(form.c)],
        "form_u": str(form.u),
        "delta": str(discriminant(form)),
        "box_radius": box_radius,
        "box_min": str(box.minimum),
        "box_min_at": list(box.at),
        "length": f"{geodesic_length(ch.m):.15g}",
    }


def cmd_slope(args, out) -> int:
    path = cache.cache_path()
    if path is not None:
        characters.seed(cache.load(path))
    rep = slope_report(args.t, args.box_radius)
    if args.format == "json":
        out.write(json.dumps(rep) + "\n")
    else:
        M = rep["M"]
        a, b, c = rep["form"]
        rows = [
            ("slope", rep["t"]),
            ("level", str(rep["level"])),
            ("m", rep["m"]),
            ("u", rep["u"]),
            ("v", rep["v"]),
            ("triple", "(" + ", ".join(rep["triple"]) + ")"),
            ("farey", "(" + ", ".join(rep["farey"]) + ")" if rep["farey"] else "-"),
            ("M", f"[[{M[0][0]}, {M[0][1]}], [{M[1][0]}, {M[1][1]}]]"),
            ("form", f"({a}, {b}, {c})"),
            ("delta", rep["delta"]),
            ("box_min", f"{rep['box_min']} at {tuple(rep['box_min_at'])} (K={rep['box_radius']})"),
            ("length", rep["length"]),
        ]
        for k, v in rows:
            out.write(f"{k:<8} {v}\n")
    if path is not None:
        cache.save(path, characters.memo_snapshot())
    return 0


# -- verify ------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    rep = run_sweep(max_level=args.level, bound=args.bound if args.level is None else None,
                    box_radius=args.box_radius)
    scope = f"level <= {args.level}" if args.level is not None else f"m_t <= {args.bound}"
    out.write(f"invariant sweep over {rep.triples} Farey triples ({scope})\n")
    for line in rep.lines():
        out.write(line + "\n")
    if rep.ok:
        out.write("all invariants hold\n")
        return 0
    for name, wit in rep.witnesses.items():
        out.write(f"violation {name}: {wit[0]}\n")
    return 1


# -- unicity -----------------------------------------------------------------

def cmd_unicity(args, out) -> int:
    rep = verify_theorem(args.bound, threads=args.threads, rounds=args.primality_rounds)
    if args.format == "json":
        out.write(json.dumps(rep.to_json()) + "\n")
    else:
        out.write(f"Markoff numbers <= {args.bound}: {len(rep.numbers)}\n")
        out.write(f"duplicates: {len(rep.duplicates)}\n")
        for m, slopes in rep.duplicates.items():
            out.write(f"  DUPLICATE m={m} slopes={','.join(map(str, slopes))}\n")
        out.write(f"certified (prime power or twice a prime power): {len(rep.certificates)}\n")
        for c in rep.certificates:
            shape = f"{c.cls.p}^{c.cls.n}" if c.cls.n > 1 else str(c.cls.p)
            if c.cls.twice:
                shape = "2*" + shape
            out.write(f"  {c.m} = {shape}  slope={c.slope}  u={c.u}  roots={c.root_count}\n")
        out.write(f"hypothesis unmet: {len(rep.unmet)}\n")
        out.write(f"violations: {len(rep.violations)}\n")
        for v in rep.violations:
            out.write(f"  {v}\n")
    path = cache.cache_path()
    if path is not None:
        cache.save(path, characters.memo_snapshot())
    return 0 if rep.ok else 1


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)
    common.add_argument("--primality-rounds", type=_positive, default=DEFAULT_ROUNDS)
    common.add_argument("--box-radius", type=_positive, default=DEFAULT_BOX)

    p = argparse.ArgumentParser(prog="markoff", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common], help="list Markoff numbers")
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--bound", type=_positive)
    g.add_argument("--level", type=parse_natural)
    e.add_argument("--format", choices=FORMATS, default="table")

    s = sub.add_parser("slope", parents=[common], help="full report for one slope nu/mu")
    s.add_argument("t", type=_slope)
    s.add_argument("--format", choices=("json", "table"), default="table")

    v = sub.add_parser("verify", parents=[common], help="run the invariant sweep")
    g = v.add_mutually_exclusive_group(required=True)
    g.add_argument("--level", type=parse_natural)
    g.add_argument("--bound", type=_positive)

    u = sub.add_parser("unicity", parents=[common], help="duplicates and unicity certificates")
    u.add_argument("--bound", type=_positive, required=True)
    u.add_argument("--format", choices=("json", "table"), default="table")
    return p


COMMANDS = {
    "enumerate": cmd_enumerate,
    "slope": cmd_slope,
    "verify": cmd_verify,
    "unicity": cmd_unicity,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
