"""Exact reduced simplicial homology over GF(p) or the rationals.

No floating point anywhere: GF(p) ranks use modular elimination (bitset XOR
for p = 2), rational ranks use fraction-free integer elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .complexes import SimplicialComplex, bits


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means Q, a prime p means GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and (c >= 2**31 or not _is_prime(c)):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {c}")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


@dataclass
class Matrix:
    """Sparse integer matrix: ``columns[c]`` maps row index to a non-zero entry."""

    rows: int
    cols: int
    columns: list[dict[int, int]]

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], cols: int | None = None) -> "Matrix":
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if rows else 0
        columns = [{r: dense[r][c] for r in range(rows) if dense[r][c]} for c in range(cols)]
        return cls(rows, cols, columns)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        columns = []
        for col in other.columns:
            acc: dict[int, int] = {}
            for k, v in col.items():
                for r, u in self.columns[k].items():
                    acc[r] = acc.get(r, 0) + u * v
            columns.append({r: v for r, v in acc.items() if v})
        return Matrix(self.rows, other.cols, columns)

    def is_zero(self) -> bool:
        return not any(self.columns)


def _rank_gf2(vectors: list[dict[int, int]]) -> int:
    basis: dict[int, int] = {}
    for vec in vectors:
        x = 0
        for r, v in vec.items():
            if v & 1:
                x |= 1 << r
        while x:
            top = x.bit_length() - 1
            piv = basis.get(top)
            if piv is None:
                basis[top] = x
                break
            x ^= piv
    return len(basis)


def _rank_mod_p(vectors: list[dict[int, int]], p: int) -> int:
    basis: dict[int, dict[int, int]] = {}
    for vec in vectors:
        x = {r: v % p for r, v in vec.items() if v % p}
        while x:
            lead = min(x)
            piv = basis.get(lead)
            if piv is None:
                inv = pow(x[lead], -1, p)
                basis[lead] = {r: v * inv % p for r, v in x.items()}
                break
            f = x[lead]
            for r, v in piv.items():
                w = (x.get(r, 0) - f * v) % p
                if w:
                    x[r] = w
                else:
                    x.pop(r, None)
    return len(basis)


def _rank_integer(vectors: list[dict[int, int]]) -> int:
    """Fraction-free elimination over Z (equivalently Q).

    A new vector ``x`` with leading coordinate ``a`` is reduced against a
    stored pivot ``b`` by ``x <- b*x - a*pivot``; contents are divided out to
    keep entries small.
    """
    basis: dict[int, dict[int, int]] = {}
    for vec in vectors:
        x = {r: v for r, v in vec.items() if v}
        while x:
            lead = min(x)
            piv = basis.get(lead)
            if piv is None:
                g = 0
                for v in x.values():
                    g = gcd(g, v)
                if g > 1:
                    x = {r: v // g for r, v in x.items()}
                basis[lead] = x
                break
            a, b = x[lead], piv[lead]
            if b in (1, -1):
                f = a * b
                for r, v in piv.items():
                    w = x.get(r, 0) - f * v
                    if w:
                        x[r] = w
                    else:
                        x.pop(r, None)
            else:
                g = gcd(a, b)
                sa, sb = a // g, b // g
                new = {r: sb * v for r, v in x.items()}
                for r, v in piv.items():
                    w = new.get(r, 0) - sa * v
                    if w:
                        new[r] = w
                    else:
                        new.pop(r, None)
                x = new
    return len(basis)


def bareiss_rank(dense: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by Bareiss fraction-free elimination."""
    m = [list(row) for row in dense]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, nrows):
            f = m[r][c]
            row, prow = m[r], m[rank]
            for k in range(c + 1, ncols):
                row[k] = (p * row[k] - f * prow[k]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(M: Matrix, field: FieldSpec = QQ) -> int:
    """Exact rank of ``M`` over ``field``."""
    if M.rows == 0 or M.cols == 0:
        return 0
    p = field.characteristic
    if p == 2:
        return _rank_gf2(M.columns)
    if p:
        return _rank_mod_p(M.columns, p)
    return _rank_integer(M.columns)


def boundary_columns(rows: Sequence[int], cols: Sequence[int]) -> list[dict[int, int]]:
    """Sparse columns of the boundary map between two face lists (as masks)."""
    index = {f: k for k, f in enumerate(rows)}
    out = []
    for face in cols:
        col = {}
        for pos, v in enumerate(bits(face)):
            r = index.get(face ^ (1 << v))
            if r is not None:
                col[r] = -1 if pos & 1 else 1
        out.append(col)
    return out


def boundary_matrix(cx: SimplicialComplex, k: int) -> Matrix:
    """Matrix of the reduced boundary map from k-faces to (k-1)-faces.

    ``k = 0`` gives the augmentation row onto the empty face.
    """
    if cx.is_void:
        raise ValueError("the void complex has no chain complex")
    if k < 0:
        raise ValueError("k must be >= 0")
    rows = cx.faces_by_size(k)
    cols = cx.faces_by_size(k + 1)
    return Matrix(len(rows), len(cols), boundary_columns(rows, cols))


class HomologyCalculator:
    """Reduced homology of one complex with boundary ranks memoized per degree."""

    def __init__(self, cx: SimplicialComplex, field: FieldSpec = QQ):
        self.cx = cx
        self.field = field
        self._ranks: dict[int, int] = {}

    def boundary_rank(self, k: int) -> int:
        """Rank of the boundary from k-faces; zero for k < 0."""
        if k < 0:
            return 0
        r = self._ranks.get(k)
        if r is None:
            rows = self.cx.faces_by_size(k)
            cols = self.cx.faces_by_size(k + 1)
            if not rows or not cols:
                r = 0
            else:
                r = rank(Matrix(len(rows), len(cols), boundary_columns(rows, cols)), self.field)
            self._ranks[k] = r
        return r

    def dim(self, k: int) -> int:
        if k < -1 or self.cx.is_void:
            return 0
        self.cx.prepare(k + 2)
        n_faces = len(self.cx.faces_by_size(k + 1))
        if n_faces == 0:
            return 0
        return n_faces - self.boundary_rank(k) - self.boundary_rank(k + 1)


def reduced_homology_dim(cx: SimplicialComplex, k: int, field: FieldSpec = QQ) -> int:
    """dim of the k-th reduced homology of ``cx`` over ``field``.

    The void complex has no homology; the irrelevant complex ``{∅}`` has a
    one-dimensional H_{-1}.
    """
    return HomologyCalculator(cx, field).dim(k)


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """Alternating face count, starting with -1 for the empty face."""
    if cx.is_void:
        return 0
    total, size = 0, 0
    while True:
        faces = cx.faces_by_size(size)
        if not faces:
            return total
        total += (-1) ** (size - 1) * len(faces)
        size += 1
