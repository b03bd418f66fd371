"""Betti numbers from the Taylor complex, split into lcm multidegree strands.

The Taylor complex of ``I = (m_1, ..., m_r)`` has a basis element for every
subset ``F`` of the generators, in homological degree ``|F|`` and multidegree
``lcm(F)``.  After tensoring with K only the unit coefficients of the
differential survive, i.e. the terms ``F -> F \\ {f}`` with
``lcm(F \\ {f}) = lcm(F)``, so the complex splits into one strand per lcm.
Each strand's homology in degree ``s`` is ``beta_{s-1, deg m}(I)``.

This module shares nothing with the Hochster engine beyond the rank routine
and the table type, which is what makes it a useful cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .betti import BettiTable, Provenance
from .errors import ResourceCapError, UnitIdealError, ZeroIdealError
from .homology import FieldSpec, Matrix, QQ, rank
from .ideal import MonomialIdeal, degree_stats

MAX_GENERATORS = 20


@dataclass
class TaylorStrand:
    multidegree: tuple[int, ...]
    basis_by_rank: dict[int, list[int]] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return sum(self.multidegree)


def _positions(mask: int) -> list[int]:
    return [k for k in range(mask.bit_length()) if mask >> k & 1]


def taylor_strands(ideal: MonomialIdeal) -> list[TaylorStrand]:
    """Group the non-empty generator subsets (as bitmasks) by their lcm."""
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no Taylor complex")
    gens = ideal.generators
    r = len(gens)
    if r > MAX_GENERATORS:
        raise ResourceCapError(f"{r} generators exceed the Taylor cap of {MAX_GENERATORS}")
    lcms: list[tuple[int, ...]] = [()] * (1 << r)
    lcms[0] = (0,) * ideal.context.n
    strands: dict[tuple[int, ...], TaylorStrand] = {}
    for F in range(1, 1 << r):
        low = F & -F
        g = gens[low.bit_length() - 1].exponents
        m = tuple(map(max, lcms[F ^ low], g))
        lcms[F] = m
        strand = strands.get(m)
        if strand is None:
            strand = strands[m] = TaylorStrand(m)
        strand.basis_by_rank.setdefault(F.bit_count(), []).append(F)
    return [strands[m] for m in sorted(strands)]


def strand_differential(strand: TaylorStrand, s: int) -> Matrix:
    """Differential from rank ``s`` to rank ``s - 1`` inside one strand, over Z."""
    rows = strand.basis_by_rank.get(s - 1, [])
    cols = strand.basis_by_rank.get(s, [])
    index = {F: k for k, F in enumerate(rows)}
    columns = []
    for F in cols:
        col = {}
        for pos, f in enumerate(_positions(F)):
            k = index.get(F ^ (1 << f))
            if k is not None:
                col[k] = -1 if pos & 1 else 1
        columns.append(col)
    return Matrix(len(rows), len(cols), columns)


def strand_homology(strand: TaylorStrand, field: FieldSpec = QQ) -> dict[int, int]:
    """Homology dimensions of one strand, by rank."""
    ranks = {}
    top = max(strand.basis_by_rank)
    for s in range(1, top + 2):
        ranks[s] = rank(strand_differential(strand, s), field)
    out = {}
    for s, basis in strand.basis_by_rank.items():
        h = len(basis) - ranks[s] - ranks[s + 1]
        if h:
            out[s] = h
    return out


def taylor_betti(ideal: MonomialIdeal, field: FieldSpec = QQ) -> BettiTable:
    """Graded Betti table of ``ideal`` from the Taylor complex over ``field``."""
    if ideal.is_zero:
        raise ZeroIdealError("zero ideal: Betti numbers need I != 0")
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no Betti table here")
    c, d = degree_stats(ideal)
    if ideal.is_squarefree:
        n_sq = ideal.context.n
    else:
        n_sq = sum(max(g.exponents[k] for g in ideal.generators) for k in range(ideal.context.n))
    table = BettiTable(field=field, n_ambient=n_sq, subject=ideal.format(), indeg=c, maxdeg=d)
    totals: dict[tuple[int, int], int] = {}
    for strand in taylor_strands(ideal):
        for s, h in strand_homology(strand, field).items():
            key = (s - 1, strand.degree)
            totals[key] = totals.get(key, 0) + h
    for (i, j), v in sorted(totals.items()):
        table.set(i, j, v, Provenance.COMPUTED)
    table.complete = True
    return table
