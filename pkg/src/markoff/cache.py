"""On-disk JSON memo of characters, enabled by ``MARKOFF_CACHE=<dir>``.

File layout::

    {"schema": 1, "records": [{"t": "2/1", "m": "29", "u": "12", "v": "5"}, ...]}

Records whose ``m`` is not the Markoff number of ``t``, whose ``u`` lies
outside ``[0, m/2]``, or which fail ``u^2 + 1 == m v`` are dropped; a file
with another schema is ignored.
"""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .characters import Character
from .farey import Slope
from .tree import markoff_number

SCHEMA = 1
FILENAME = "characters.json"
ENV_VAR = "MARKOFF_CACHE"

log = logging.getLogger(__name__)


def cache_path() -> Path | None:
    root = os.environ.get(ENV_VAR)
    if not root:
        return None
    return Path(root) / FILENAME


def load(path: Path) -> list[Character]:
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        return []
    except (OSError, json.JSONDecodeError) as exc:
        log.warning("ignoring unreadable cache %s: %s", path, exc)
        return []
    if not isinstance(data, dict) or data.get("schema") != SCHEMA:
        log.warning("ignoring cache %s with unknown schema", path)
        return []
    out = []
    for rec in data.get("records", []):
        try:
            ch = Character(Slope.parse(rec["t"]), int(rec["m"]), int(rec["u"]), int(rec["v"]))
        except (KeyError, TypeError, ValueError):
            continue
        if 0 <= 2 * ch.u <= ch.m and ch.u * ch.u + 1 == ch.m * ch.v and ch.m == markoff_number(ch.t):
            out.append(ch)
    return out


def save(path: Path, records: list[Character]) -> None:
    merged = {str(c.t): c for c in load(path)}
    merged.update((str(c.t), c) for c in records)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "schema": SCHEMA,
        "records": [merged[k].to_json() for k in sorted(merged, key=lambda k: Slope.parse(k))],
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(payload, indent=1))
    tmp.replace(path)
