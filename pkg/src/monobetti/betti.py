"""Graded Betti tables and the invariants read off them."""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Iterable

from .errors import IncompleteTableError
from .homology import FieldSpec, QQ
from .ideal import MonomialIdeal, degree_stats


class Provenance(str, Enum):
    COMPUTED = "computed"
    PRUNED = "pruned"
    BOUND_EXCLUDED = "bound-excluded"


@dataclass
class BettiTable:
    """Sparse map ``(i, j) -> beta_{i,j}`` with provenance.

    Missing keys are zeros.  When ``indeg``/``maxdeg`` are set, cells outside
    the window ``i + indeg <= j <= min(n_ambient, maxdeg*(i+1))`` are zero by
    the degree bounds and report ``BOUND_EXCLUDED``.
    """

    field: FieldSpec = QQ
    n_ambient: int = 0
    subject: str = ""
    indeg: int | None = None
    maxdeg: int | None = None
    entries: dict[tuple[int, int], tuple[int, Provenance]] = dc_field(default_factory=dict)
    complete: bool = False

    def window(self, i: int) -> tuple[int, int]:
        """Inclusive degree range of row ``i`` where non-zero values may occur."""
        if self.indeg is None or self.maxdeg is None:
            raise ValueError("table has no degree window")
        return i + self.indeg, min(self.n_ambient, self.maxdeg * (i + 1))

    def in_window(self, i: int, j: int) -> bool:
        if i < 0:
            return False
        lo, hi = self.window(i)
        return lo <= j <= hi

    def set(self, i: int, j: int, value: int, provenance: Provenance = Provenance.COMPUTED):
        if i < 0 or j < 0 or value < 0:
            raise ValueError(f"invalid entry ({i}, {j}) -> {value}")
        if provenance is Provenance.PRUNED and value:
            raise ValueError("pruned entries are zero")
        self.entries[(i, j)] = (value, provenance)

    def __getitem__(self, key: tuple[int, int]) -> int:
        entry = self.entries.get(key)
        return entry[0] if entry else 0

    def provenance(self, i: int, j: int) -> Provenance | None:
        """Provenance of a cell, or ``None`` if it has not been decided yet."""
        entry = self.entries.get((i, j))
        if entry is not None:
            return entry[1]
        if self.indeg is not None and not self.in_window(i, j):
            return Provenance.BOUND_EXCLUDED
        if self.complete:
            return Provenance.COMPUTED
        return None

    def values(self) -> dict[tuple[int, int], int]:
        """The non-zero part of the table as a plain dict."""
        return {k: v for k, (v, _) in sorted(self.entries.items()) if v}

    @property
    def pruned_cells(self) -> int:
        return sum(1 for _, p in self.entries.values() if p is Provenance.PRUNED)

    def nonzero_rows(self) -> list[int]:
        return sorted({i for (i, _), v in self.values().items()})

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.values() == other.values()

    def __repr__(self):
        return f"BettiTable({self.values()}, field={self.field})"


def top_degrees(table: BettiTable) -> dict[int, int]:
    """``t_i``: the largest ``j`` with a non-zero entry in row ``i``."""
    t: dict[int, int] = {}
    for (i, j) in table.values():
        t[i] = max(t.get(i, j), j)
    return t


def regularity(table: BettiTable) -> int:
    t = top_degrees(table)
    if not t:
        raise ValueError("regularity of the zero module is undefined")
    return max(tj - i for i, tj in t.items())


def projective_dimension(table: BettiTable) -> int:
    t = top_degrees(table)
    if not t:
        raise ValueError("projective dimension of the zero module is undefined")
    return max(t)


def ndp_property(table: BettiTable, d: int, p: int) -> bool:
    """N_{d,p}: beta_{i,i+j} = 0 for every i < p and j > d."""
    if p <= 0:
        raise ValueError("p must be positive")
    return not any(i < p and j - i > d for (i, j) in table.values())


def betti_of_quotient(table: BettiTable) -> BettiTable:
    """Betti table of S/I from that of I: shift every row by one, add beta_{0,0} = 1."""
    out = BettiTable(field=table.field, n_ambient=table.n_ambient,
                     subject=f"S/{table.subject}" if table.subject else "", complete=True)
    out.set(0, 0, 1)
    for (i, j), v in table.values().items():
        out.set(i + 1, j, v)
    return out


@dataclass
class InvariantSummary:
    c: int
    d: int
    t: dict[int, int]
    projdim: int
    reg: int
    linear: bool
    index: float | int
    ndp: dict[tuple[int, int], bool] = dc_field(default_factory=dict)


def green_lazarsfeld_index(table: BettiTable, c: int) -> float | int:
    """Largest p with N_{c,p}; ``math.inf`` for a c-linear resolution.

    Only rows up to the projective dimension can hold a violation, so the
    search stops there.  Returns 0 when already row 0 violates (generators in
    several degrees).
    """
    bad = [i for (i, j) in table.values() if j - i > c]
    return min(bad) if bad else math.inf


def invariants(table: BettiTable, ideal: MonomialIdeal,
               ndp: Iterable[tuple[int, int]] = ()) -> InvariantSummary:
    if not table.complete:
        raise IncompleteTableError("table is not complete over its degree window")
    c, d = degree_stats(ideal)
    t = top_degrees(table)
    reg = regularity(table)
    linear = reg == c == d
    return InvariantSummary(
        c=c, d=d, t=t,
        projdim=projective_dimension(table),
        reg=reg,
        linear=linear,
        index=green_lazarsfeld_index(table, c),
        ndp={(dd, p): ndp_property(table, dd, p) for dd, p in ndp},
    )


def has_linear_resolution(table: BettiTable, ideal: MonomialIdeal) -> bool:
    c, d = degree_stats(ideal)
    return c == d and all(j == i + d for (i, j) in table.values())
