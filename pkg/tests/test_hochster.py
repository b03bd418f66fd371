import math

import pytest

from monobetti import (GF2, BettiTable, IncompleteTableError, PolynomialContext, Provenance, QQ,
                       ResourceCapError, UnitIdealError, ZeroIdealError, betti_of_quotient,
                       hochster_betti, invariants, minimalize, ndp_property, parse_monomial,
                       prune_admissible, Monomial, MonomialIdeal)
from monobetti.betti import green_lazarsfeld_index
from monobetti.corpus import random_corpus
from monobetti.hochster import support_lattice

from oracles import brute_hochster


def ideal(texts, n=4):
    ctx = PolynomialContext.standard(n)
    return minimalize([parse_monomial(t, ctx) for t in texts], ctx)


C4BAR = ideal(["x1*x3", "x2*x4"])
C5 = ideal(["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"], 5)


@pytest.mark.parametrize("field", [QQ, GF2])
def test_four_cycle_example(field):
    T = hochster_betti(C4BAR, field)
    assert T.values() == {(0, 2): 2, (1, 4): 1}
    inv = invariants(T, C4BAR)
    assert (inv.reg, inv.projdim, inv.linear, inv.index) == (3, 1, False, 1)
    assert inv.t == {0: 2, 1: 4}


def test_single_variable():
    I = ideal(["x1"], 1)
    T = hochster_betti(I)
    assert T.values() == {(0, 1): 1}
    inv = invariants(T, I)
    assert (inv.reg, inv.projdim, inv.linear, inv.index) == (1, 0, True, math.inf)


def test_five_cycle():
    # values from the brute-force sympy oracle
    assert brute_hochster(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]) == \
        {(0, 2): 5, (1, 3): 5, (2, 5): 1}
    T = hochster_betti(C5)
    assert T.values() == {(0, 2): 5, (1, 3): 5, (2, 5): 1}
    inv = invariants(T, C5)
    assert (inv.reg, inv.projdim, inv.index) == (3, 2, 2)


def test_non_squarefree_example():
    ctx = PolynomialContext(("x", "y"))
    I = minimalize([parse_monomial(t, ctx) for t in ("x^2", "x*y", "y^3")], ctx)
    T = hochster_betti(I)
    assert T.values() == {(0, 2): 2, (0, 3): 1, (1, 3): 1, (1, 4): 1}
    assert T.n_ambient == 5
    # generators in two degrees: row 0 already violates 2-linearity
    assert invariants(T, I).index == 0


def test_provenance_and_window():
    T = hochster_betti(C4BAR)
    assert T.window(0) == (2, 2) and T.window(1) == (3, 4)
    assert T.provenance(0, 3) is Provenance.BOUND_EXCLUDED
    assert T.provenance(1, 4) is Provenance.COMPUTED
    assert T.provenance(2, 9) is Provenance.BOUND_EXCLUDED
    assert T.complete


def test_pruning_fires_and_keeps_values():
    I = ideal(["x1*x2", "x3*x4", "x5*x6"], 6)
    on, off = hochster_betti(I), hochster_betti(I, prune=False)
    assert on == off
    assert off.pruned_cells == 0
    # rows of the complete intersection leave zero runs, so at least one cell is skipped
    assert on.pruned_cells > 0
    assert all(on[k] == 0 for k, (_, p) in on.entries.items() if p is Provenance.PRUNED)


def partial(values, c=2, d=2, n=6, rows=()):
    T = BettiTable(n_ambient=n, indeg=c, maxdeg=d)
    for i in rows:
        lo, hi = T.window(i)
        for j in range(lo, hi + 1):
            T.set(i, j, values.get((i, j), 0))
    return T


def test_prune_admissible_examples():
    T = partial({(0, 2): 1}, rows=[0], n=8)
    # beta_{0,3} = beta_{0,4} = 0 (outside row 0's window) and 5 - 2 >= 0 + 2
    assert prune_admissible(T, 1, 5, 2)
    assert not prune_admissible(T, 1, 4, 2)  # beta_{0,2} = 1
    assert not prune_admissible(T, 1, 3, 2)  # j - d < (i-1) + d
    T3 = partial({(0, 2): 1}, rows=[0], n=8, c=2, d=3)
    assert not prune_admissible(T3, 1, 5, 3)


def test_prune_admissible_row_zero_never():
    T = partial({}, rows=[0])
    for j in range(10):
        assert not prune_admissible(T, 0, j, 2)


def test_prune_admissible_nonzero_predecessor():
    T = partial({(1, 4): 1}, rows=[0, 1], n=8)
    assert not prune_admissible(T, 2, 5, 2)
    assert not prune_admissible(T, 2, 6, 2)
    assert prune_admissible(T, 2, 7, 2)


def test_prune_admissible_trusts_pruned_zeros():
    T = partial({}, rows=[0], n=8)
    T.set(1, 3, 0, Provenance.PRUNED)
    T.set(1, 4, 0, Provenance.PRUNED)
    assert prune_admissible(T, 2, 6, 2)


def test_prune_admissible_undecided_raises():
    T = BettiTable(n_ambient=8, indeg=2, maxdeg=2)
    with pytest.raises(IncompleteTableError):
        prune_admissible(T, 1, 4, 2)  # beta_{0,2} not yet decided


def test_ndp_examples():
    T = hochster_betti(C4BAR)
    assert ndp_property(T, 2, 1)
    assert not ndp_property(T, 2, 2)
    lin = hochster_betti(ideal(["x1*x2", "x2*x3"], 3))
    assert all(ndp_property(lin, 2, p) for p in range(1, 6))
    assert invariants(T, C4BAR, ndp=[(2, 1), (2, 2)]).ndp == {(2, 1): True, (2, 2): False}
    with pytest.raises(ValueError):
        ndp_property(T, 2, 0)


def test_betti_of_quotient():
    T = hochster_betti(C4BAR)
    Q = betti_of_quotient(T)
    assert Q.values() == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    from monobetti import regularity
    assert (regularity(Q), regularity(T)) == (2, 3)
    assert betti_of_quotient(BettiTable()).values() == {(0, 0): 1}


def test_index_helper():
    T = BettiTable(complete=True)
    T.set(0, 2, 3)
    T.set(1, 3, 2)
    assert green_lazarsfeld_index(T, 2) == math.inf
    T.set(2, 5, 1)
    assert green_lazarsfeld_index(T, 2) == 2


def test_invariants_need_complete_table():
    with pytest.raises(IncompleteTableError):
        invariants(BettiTable(), C4BAR)


def test_errors():
    with pytest.raises(ZeroIdealError, match="zero ideal"):
        hochster_betti(minimalize([], PolynomialContext.standard(2)))
    ctx = PolynomialContext.standard(2)
    with pytest.raises(UnitIdealError):
        hochster_betti(MonomialIdeal(ctx, (Monomial((0, 0)),)))
    big = PolynomialContext.standard(2)
    I = minimalize([Monomial((40, 30))], big)
    with pytest.raises(ResourceCapError):
        hochster_betti(I)


def test_support_lattice():
    assert support_lattice([0b011, 0b110]) == [0b011, 0b110, 0b111]
    assert support_lattice([]) == []


CORPUS = random_corpus(40, seed=3)


@pytest.mark.parametrize("I", CORPUS, ids=lambda I: I.format())
def test_cone_skip_matches_full_enumeration(I):
    for field in (QQ, GF2):
        assert hochster_betti(I, field) == hochster_betti(I, field, skip_cones=False, prune=False)


SQUAREFREE = random_corpus(30, seed=4, squarefree=True)


@pytest.mark.parametrize("I", SQUAREFREE, ids=lambda I: I.format())
def test_matches_brute_force_oracle(I):
    n = I.context.n
    nonfaces = [[k + 1 for k in range(n) if g.exponents[k]] for g in I.generators]
    for field in (QQ, GF2):
        assert hochster_betti(I, field).values() == brute_hochster(range(1, n + 1), nonfaces,
                                                                 field.characteristic)


def test_parallel_rows_match_sequential():
    for I in (C4BAR, C5):
        assert hochster_betti(I, parallel=2) == hochster_betti(I)
