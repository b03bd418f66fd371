"""Betti diagrams (Macaulay style) and the JSON report."""
from __future__ import annotations

import json
import math

from .betti import BettiTable, projective_dimension, regularity


def format_diagram(table: BettiTable) -> str:
    """Columns are homological degrees i, rows are j - i.

    >>> t = BettiTable(complete=True); t.set(0, 2, 2); t.set(1, 4, 1)
    >>> print(format_diagram(t))
           0 1
    total: 2 1
        2: 2 .
        3: . 1
    """
    vals = table.values()
    if not vals:
        return "total: 0"
    cols = range(0, max(i for i, _ in vals) + 1)
    shifts = [j - i for i, j in vals]
    rows = range(min(shifts), max(shifts) + 1)
    cells = {(i, j - i): str(v) for (i, j), v in vals.items()}
    totals = [str(sum(v for (i, _), v in vals.items() if i == c)) for c in cols]
    width = [max(len(str(c)), len(totals[c]),
                 *(len(cells.get((c, r), ".")) for r in rows)) for c in cols]
    label_w = max(len("total:"), *(len(f"{r}:") for r in rows))

    def line(label, items):
        return label.rjust(label_w) + " " + " ".join(s.rjust(w) for s, w in zip(items, width))

    out = [line("", [str(c) for c in cols]), line("total:", totals)]
    for r in rows:
        out.append(line(f"{r}:", [cells.get((c, r), ".") for c in cols]))
    return "\n".join(out)


def parse_diagram(text: str) -> dict[tuple[int, int], int]:
    """Inverse of :func:`format_diagram` on the value map."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if lines[0].strip() == "total: 0":
        return {}
    cols = [int(c) for c in lines[0].split()]
    out = {}
    for ln in lines[2:]:
        label, rest = ln.split(":", 1)
        shift = int(label)
        for c, cell in zip(cols, rest.split()):
            if cell != ".":
                out[(c, c + shift)] = int(cell)
    return out


def report_dict(table: BettiTable, index=None) -> dict:
    vals = table.values()
    if index is None:
        idx = None
    elif index == math.inf:
        idx = "infinity"
    else:
        idx = int(index)
    return {
        "field_char": table.field.characteristic,
        "betti": [[i, j, v] for (i, j), v in sorted(vals.items())],
        "reg": regularity(table) if vals else None,
        "projdim": projective_dimension(table) if vals else None,
        "index": idx,
        "pruned_cells": table.pruned_cells,
    }


def dumps(report: dict) -> str:
    return json.dumps(report)


def betti_from_json(text: str) -> dict[tuple[int, int], int]:
    return {(i, j): v for i, j, v in json.loads(text)["betti"]}
