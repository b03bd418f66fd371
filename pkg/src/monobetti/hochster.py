"""Betti numbers of monomial ideals from the homology of induced subcomplexes.

The ideal is polarized to a square-free one, whose Stanley-Reisner complex
``Δ`` gives

    beta_{i,j}(I) = sum over |W| = j of dim H~_{j-i-2}(Δ_W; K).

Rows are filled in order ``i = 0, 1, ...``, and only over the window
``i + c <= j <= min(n', d(i+1))`` (c, d the least and largest generator
degree, n' the number of square-free variables); cells outside it vanish.
Inside it a cell is skipped as a known zero when the row above has ``d``
consecutive zeros ``beta_{i-1,j-d} = ... = beta_{i-1,j-1} = 0`` with
``j - d >= (i-1) + d``, since such a run forces ``beta_{i,j} = 0``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .betti import BettiTable, Provenance
from .complexes import MAX_GROUND, SimplicialComplex, complex_from_squarefree_ideal, induced_subcomplex
from .errors import IncompleteTableError, ResourceCapError, UnitIdealError, ZeroIdealError
from .homology import FieldSpec, HomologyCalculator, QQ
from .ideal import MonomialIdeal, degree_stats, polarize


def prune_admissible(partial: BettiTable, i: int, j: int, d: int) -> bool:
    """True when row ``i-1`` forces ``beta_{i,j} = 0``.

    Needs ``i >= 1``, ``j - d >= (i-1) + d`` and ``beta_{i-1,j-d}, ...,
    beta_{i-1,j-1}`` all zero.  Pruned zeros count as zeros.
    """
    if i < 1 or j - d < (i - 1) + d:
        return False
    undecided = [jj for jj in range(j - d, j) if partial.provenance(i - 1, jj) is None]
    if undecided:
        raise IncompleteTableError(f"row {i - 1} undecided at degrees {undecided}")
    return all(partial[(i - 1, jj)] == 0 for jj in range(j - d, j))


def support_lattice(supports: Iterable[int]) -> list[int]:
    """All non-empty unions of the given masks (the lcm lattice of a square-free ideal)."""
    found = {0}
    for s in supports:
        found |= {x | s for x in found}
    found.discard(0)
    return sorted(found)


def _all_subsets(ground: int, size: int):
    verts = [k for k in range(ground.bit_length()) if ground >> k & 1]

    def rec(start, chosen, need):
        if need == 0:
            yield chosen
            return
        for idx in range(start, len(verts) - need + 1):
            yield from rec(idx + 1, chosen | (1 << verts[idx]), need - 1)

    yield from rec(0, 0, size)


def _dims_task(labels, ground, nonfaces, W, ks, characteristic):
    cx = SimplicialComplex(labels, ground, nonfaces=nonfaces)
    calc = HomologyCalculator(induced_subcomplex(cx, W), FieldSpec(characteristic))
    return W, {k: calc.dim(k) for k in ks}


class _Engine:
    def __init__(self, cx: SimplicialComplex, field: FieldSpec, skip_cones: bool, workers: int):
        self.cx = cx
        self.field = field
        self.workers = workers
        self._calcs: dict[int, HomologyCalculator] = {}
        self._by_size: dict[int, list[int]] = {}
        if skip_cones:
            # a W that is not a union of non-faces inside it has a cone point,
            # so Δ_W is acyclic and contributes nothing
            for W in support_lattice(cx.nonface_masks):
                self._by_size.setdefault(W.bit_count(), []).append(W)
        self.skip_cones = skip_cones

    def subsets(self, j: int):
        if self.skip_cones:
            return self._by_size.get(j, [])
        return _all_subsets(self.cx.ground, j)

    def _calc(self, W: int) -> HomologyCalculator:
        calc = self._calcs.get(W)
        if calc is None:
            calc = HomologyCalculator(induced_subcomplex(self.cx, W), self.field)
            self._calcs[W] = calc
        return calc

    def row(self, i: int, degrees: list[int]) -> dict[int, int]:
        if self.workers > 1:
            return self._row_parallel(i, degrees)
        return {j: sum(self._calc(W).dim(j - i - 2) for W in self.subsets(j)) for j in degrees}

    def _row_parallel(self, i: int, degrees: list[int]) -> dict[int, int]:
        cx = self.cx
        jobs = [(W, j) for j in degrees for W in self.subsets(j)]
        out = {j: 0 for j in degrees}
        if not jobs:
            return out
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            futures = [pool.submit(_dims_task, cx.labels, cx.ground, cx.nonface_masks, W,
                                   (j - i - 2,), self.field.characteristic) for W, j in jobs]
            for (W, j), fut in zip(jobs, futures):
                _, dims = fut.result()
                out[j] += dims[j - i - 2]
        return out


def hochster_betti(ideal: MonomialIdeal, field: FieldSpec = QQ, *, prune: bool = True,
                   parallel: int | bool = 1, skip_cones: bool = True) -> BettiTable:
    """Graded Betti table of ``ideal`` over ``field``.

    ``prune`` turns on the zero-propagation rule; the value map is the same
    either way.  ``parallel`` is a worker count for the subset homology sums
    (rows stay sequential).  With ``skip_cones`` only subsets W that are
    unions of generator supports are visited; every other W has a cone point
    and a zero term.
    """
    if ideal.is_zero:
        raise ZeroIdealError("zero ideal: Betti numbers need I != 0")
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no Betti table here")
    J, ctx2, _ = polarize(ideal)
    n2 = ctx2.n
    if n2 > MAX_GROUND:
        raise ResourceCapError(f"polarization needs {n2} variables, cap is {MAX_GROUND}")
    c, d = degree_stats(J)
    cx = complex_from_squarefree_ideal(J)
    workers = int(parallel) if parallel is not True else 2
    engine = _Engine(cx, field, skip_cones, max(1, workers))

    table = BettiTable(field=field, n_ambient=n2, subject=ideal.format(), indeg=c, maxdeg=d)
    for i in range(0, n2 - c + 1):
        lo, hi = table.window(i)
        todo = []
        for j in range(lo, hi + 1):
            if prune and prune_admissible(table, i, j, d):
                table.set(i, j, 0, Provenance.PRUNED)
            else:
                todo.append(j)
        for j, value in engine.row(i, todo).items():
            table.set(i, j, value, Provenance.COMPUTED)
    table.complete = True
    return table
