from collections import Counter

import pytest

from monobetti import (GF2, Monomial, PolynomialContext, QQ, ResourceCapError, ZeroIdealError,
                       minimalize, parse_monomial, taylor_betti)
from monobetti.corpus import random_corpus
from monobetti.taylor import strand_differential, strand_homology, taylor_strands


def ideal(texts, n=4):
    ctx = PolynomialContext.standard(n)
    return minimalize([parse_monomial(t, ctx) for t in texts], ctx)


C4BAR = ideal(["x1*x3", "x2*x4"])


@pytest.mark.parametrize("field", [QQ, GF2])
def test_four_cycle_example(field):
    assert taylor_betti(C4BAR, field).values() == {(0, 2): 2, (1, 4): 1}


def test_strands_of_example():
    strands = taylor_strands(C4BAR)
    assert [s.multidegree for s in strands] == [(0, 1, 0, 1), (1, 0, 1, 0), (1, 1, 1, 1)]
    assert strands[2].basis_by_rank == {2: [0b11]}
    assert strands[2].degree == 4


def test_non_minimal_strand_cancels():
    # the triangle: three 2-subsets share the top lcm, so that strand is not minimal
    I = ideal(["x1*x2", "x2*x3", "x1*x3"], 3)
    assert taylor_betti(I).values() == {(0, 2): 3, (1, 3): 2}
    top = taylor_strands(I)[-1]
    assert top.multidegree == (1, 1, 1)
    assert {k: len(v) for k, v in top.basis_by_rank.items()} == {2: 3, 3: 1}
    assert strand_homology(top) == {2: 2}


def test_single_generator():
    assert taylor_betti(ideal(["x1^3"], 1)).values() == {(0, 3): 1}


@pytest.mark.parametrize("I", random_corpus(40, seed=21), ids=lambda I: I.format())
def test_strand_differentials_compose_to_zero(I):
    for strand in taylor_strands(I):
        top = max(strand.basis_by_rank)
        for s in range(2, top + 1):
            assert (strand_differential(strand, s - 1) @ strand_differential(strand, s)).is_zero()


@pytest.mark.parametrize("I", random_corpus(40, seed=22), ids=lambda I: I.format())
def test_strand_euler_characteristic(I):
    # per strand, sum (-1)^s rank C_s = sum (-1)^s dim H_s
    for strand in taylor_strands(I):
        for field in (QQ, GF2):
            chain = sum((-1) ** s * len(b) for s, b in strand.basis_by_rank.items())
            homology = sum((-1) ** s * h for s, h in strand_homology(strand, field).items())
            assert chain == homology


@pytest.mark.parametrize("I", random_corpus(40, seed=23), ids=lambda I: I.format())
def test_row_zero_counts_generators(I):
    T = taylor_betti(I)
    by_degree = Counter(g.degree for g in I.generators)
    assert {j: v for (i, j), v in T.values().items() if i == 0} == dict(by_degree)


def test_errors():
    ctx = PolynomialContext.standard(2)
    with pytest.raises(ZeroIdealError):
        taylor_betti(minimalize([], ctx))
    ctx = PolynomialContext.standard(21)
    many = minimalize([Monomial(tuple(int(k == v) for k in range(21))) for v in range(21)], ctx)
    with pytest.raises(ResourceCapError):
        taylor_betti(many)
