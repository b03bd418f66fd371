import random

import pytest
from hypothesis import given, settings, strategies as st

from monobetti import (FieldSpec, GF2, Matrix, QQ, SimplicialComplex, bareiss_rank,
                       boundary_matrix, rank, reduced_homology_dim)
from monobetti.homology import reduced_euler_characteristic

from oracles import RP2_FACETS, closure, reduced_homology

GF3 = FieldSpec(3)
BIG = FieldSpec(2147483629)
FIELDS = [QQ, GF2, GF3]

TWO_POINTS = SimplicialComplex.from_facets([(1,), (2,)])
HOLLOW = SimplicialComplex.from_facets([(1, 2), (1, 3), (2, 3)])
EDGE = SimplicialComplex.from_facets([(1, 2)])
RP2 = SimplicialComplex.from_facets(RP2_FACETS)


def test_field_spec_validation():
    assert str(QQ) == "QQ" and str(GF2) == "GF(2)"
    for bad in (1, 4, 2**31 + 11, -3):
        with pytest.raises(ValueError):
            FieldSpec(bad)
    assert BIG.characteristic == 2147483629


def test_boundary_matrix_examples():
    assert boundary_matrix(TWO_POINTS, 0).to_dense() == [[1, 1]]
    m = boundary_matrix(HOLLOW, 2)
    assert (m.rows, m.cols) == (3, 0)
    assert boundary_matrix(EDGE, 1).to_dense() == [[-1], [1]]


def test_boundary_matrix_void_rejected():
    with pytest.raises(ValueError):
        boundary_matrix(SimplicialComplex.from_facets([], ground=[1]), 0)


def test_rank_examples():
    assert rank(Matrix.from_dense([[1, 1]]), GF2) == 1
    for f in FIELDS:
        assert rank(Matrix.from_dense([[1, 0], [0, 1]]), f) == 2
    assert rank(Matrix.from_dense([[2]]), GF2) == 0
    assert rank(Matrix.from_dense([[2]]), QQ) == 1
    assert rank(Matrix.from_dense([[3, 6], [1, 2]]), GF3) == 1
    assert rank(Matrix.from_dense([[2, 4], [3, 5]]), QQ) == 2


def test_homology_examples():
    assert reduced_homology_dim(HOLLOW, 1, QQ) == 1
    for f in FIELDS:
        assert reduced_homology_dim(TWO_POINTS, 0, f) == 1
    # 6-vertex real projective plane, values from the sympy oracle
    assert reduced_homology_dim(RP2, 1, QQ) == 0
    assert reduced_homology_dim(RP2, 1, GF2) == 1
    assert reduced_homology_dim(RP2, 2, QQ) == 0
    assert reduced_homology_dim(RP2, 2, GF2) == 1


def test_special_complex_conventions():
    void = SimplicialComplex.from_facets([], ground=[1, 2])
    irrelevant = SimplicialComplex.from_facets([()], ground=[1, 2])
    for k in range(-1, 3):
        assert reduced_homology_dim(void, k) == 0
        assert reduced_homology_dim(irrelevant, k) == (1 if k == -1 else 0)
    assert reduced_homology_dim(EDGE, -1) == 0


def random_complex(rng, n):
    facets = [tuple(v for v in range(1, n + 1) if rng.random() < 0.5) for _ in range(rng.randint(1, 5))]
    return SimplicialComplex.from_facets(facets, ground=range(1, n + 1), labels=range(1, n + 1))


CORPUS = [random_complex(random.Random(s), 6) for s in range(30)] + [RP2, HOLLOW, TWO_POINTS, EDGE]


@pytest.mark.parametrize("cx", CORPUS, ids=repr)
def test_homology_matches_oracle_and_euler(cx):
    faces = closure(cx.facets)
    for f in (QQ, GF2):
        dims = [reduced_homology_dim(cx, k, f) for k in range(-1, 6)]
        assert dims == [reduced_homology(faces, k, f.characteristic) for k in range(-1, 6)]
        assert sum((-1) ** k * h for k, h in zip(range(-1, 6), dims)) == reduced_euler_characteristic(cx)


@pytest.mark.parametrize("cx", CORPUS, ids=repr)
def test_boundary_squares_to_zero(cx):
    for k in range(0, 6):
        assert (boundary_matrix(cx, k) @ boundary_matrix(cx, k + 1)).is_zero()


@pytest.mark.parametrize("m", range(1, 7))
def test_full_simplex_is_acyclic(m):
    cx = SimplicialComplex.from_facets([tuple(range(1, m + 1))])
    for f in (QQ, GF2):
        assert all(reduced_homology_dim(cx, k, f) == 0 for k in range(-1, m + 1))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7), st.randoms(use_true_random=False))
def test_rational_rank_agrees_with_large_prime_and_bareiss(rows, cols, rnd):
    dense = [[rnd.choice((-1, 0, 1)) for _ in range(cols)] for _ in range(rows)]
    M = Matrix.from_dense(dense)
    r = rank(M, QQ)
    assert r == bareiss_rank(dense)
    # a +-1 matrix of size <= 7 has minors below 7! * ... << p, so ranks agree
    assert r == rank(M, BIG)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_rank_against_sympy(rows, cols, rnd):
    import sympy
    from sympy import GF
    from sympy.polys.matrices import DomainMatrix
    dense = [[rnd.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
    M = Matrix.from_dense(dense)
    S = sympy.Matrix(dense)
    assert rank(M, QQ) == S.rank()
    for p in (2, 3, 5):
        assert rank(M, FieldSpec(p)) == DomainMatrix.from_Matrix(S).convert_to(GF(p)).rank()
