"""On-disk cache for structure constants and constants reports.

One JSON file holds everything, keyed per field. The cache only ever speeds
things up: corrupt or stale content is discarded with a warning, and outputs
are byte-identical with or without it.
"""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction

from . import asymptotics, ring
from .params import FieldParams

ENV_VAR = "MODP_GL2_CACHE"
VERSION = 1


def resolve_path(explicit: str | None) -> str | None:
    return explicit if explicit else os.environ.get(ENV_VAR)


def load_cache(path: str | None) -> None:
    """Populate the in-memory memo tables from a cache file, if readable."""
    if not path or not os.path.exists(path):
        return
    try:
        with open(path) as fh:
            data = json.load(fh)
        if data.get("version") != VERSION:
            raise ValueError(f"unknown cache version {data.get('version')!r}")
        for field_key, pairs in data.get("structure_constants", {}).items():
            p, f = (int(x) for x in field_key.split(","))
            FieldParams(p, f)  # validates
            table = ring._SC_CACHE.setdefault((p, f), {})
            for pair_key, rows in pairs.items():
                a, b = (int(x) for x in pair_key.split(","))
                table[(a, b)] = {(int(n), int(t)): int(c) for n, t, c in rows}
        for field_key, report in data.get("constants", {}).items():
            p, f, h = (int(x) for x in field_key.split(","))
            params = FieldParams(p, f, h)
            asymptotics._CONSTANTS_CACHE[(p, f, h)] = asymptotics.ConstantsReport(
                params, Fraction(report["A"]), Fraction(report["M_upper"]))
    except Exception as exc:  # corrupt cache: warn and start clean
        print(f"warning: discarding unreadable cache {path}: {exc}",
              file=sys.stderr)


def save_cache(path: str | None) -> None:
    if not path:
        return
    data = {"version": VERSION, "structure_constants": {}, "constants": {}}
    for (p, f), table in sorted(ring._SC_CACHE.items()):
        pairs = {}
        for (a, b), rows in sorted(table.items()):
            pairs[f"{a},{b}"] = [[n, t, c] for (n, t), c in sorted(rows.items())]
        data["structure_constants"][f"{p},{f}"] = pairs
    for (p, f, h), report in sorted(asymptotics._CONSTANTS_CACHE.items()):
        data["constants"][f"{p},{f},{h}"] = {
            "A": f"{report.A.numerator}/{report.A.denominator}",
            "M_upper": f"{report.M_upper.numerator}/{report.M_upper.denominator}",
        }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)
