"""Simplicial complexes on a labelled ground set and Stanley-Reisner translation.

Subsets of the ground set are int bitmasks over a fixed ambient label order,
so ``induced_subcomplex`` and ``union_of_subcomplexes`` keep bit positions
stable.  A complex is known either through its facets or through its minimal
non-faces; whichever is missing is derived on first use.

Ground vertices are allowed to be non-faces (a degree-one generator ``x_v``
excludes ``{v}``), which is what lets ideals with linear generators go
through the same code path.
"""
from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .errors import ResourceCapError, UnitIdealError
from .ideal import Monomial, MonomialIdeal, PolynomialContext

MAX_GROUND = 63


def bits(mask: int) -> list[int]:
    """Positions of the set bits of ``mask`` in increasing order."""
    return [k for k in range(mask.bit_length()) if mask >> k & 1]


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members, in lexicographic order of their bit lists."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=bits))


def _minimal(masks: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=int.bit_count)
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=bits))


class SimplicialComplex:
    """A downward-closed family of subsets of ``ground``.

    ``labels`` is the ambient, ordered label tuple; ``ground`` is a bitmask
    over it.  Two special values matter for reduced homology: the void
    complex (no faces) and the irrelevant complex ``{∅}``.
    """

    __slots__ = ("labels", "ground", "_facets", "_nonfaces", "_faces", "_by_vertex", "_pos")

    def __init__(self, labels: Sequence[Hashable], ground: int, *,
                 facets: Iterable[int] | None = None, nonfaces: Iterable[int] | None = None):
        labels = tuple(labels)
        if len(labels) > MAX_GROUND:
            raise ResourceCapError(f"ground set of {len(labels)} vertices exceeds {MAX_GROUND}")
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be unique")
        if facets is None and nonfaces is None:
            raise ValueError("give facets or nonfaces")
        self.labels = labels
        self.ground = ground
        self._facets = None if facets is None else _maximal(facets)
        self._nonfaces = None if nonfaces is None else _minimal(nonfaces)
        if self._facets is not None and any(f & ~ground for f in self._facets):
            raise ValueError("facet not contained in the ground set")
        if self._nonfaces is not None and any(f & ~ground for f in self._nonfaces):
            raise ValueError("non-face not contained in the ground set")
        self._faces: dict[int, tuple[int, ...]] = {}
        self._by_vertex = None
        self._pos = {lab: k for k, lab in enumerate(labels)}

    # construction helpers
    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Hashable]],
                    ground: Iterable[Hashable] | None = None,
                    labels: Sequence[Hashable] | None = None) -> "SimplicialComplex":
        """Complex generated by ``facets`` (label collections).

        ``ground`` defaults to the union of the facets; ``labels`` (the ambient
        order) defaults to the sorted ground.
        """
        facets = [tuple(f) for f in facets]
        if ground is None:
            ground = sorted({v for f in facets for v in f})
        ground = list(ground)
        if labels is None:
            labels = sorted(ground)
        pos = {lab: k for k, lab in enumerate(labels)}
        gmask = 0
        for v in ground:
            gmask |= 1 << pos[v]
        masks = []
        for f in facets:
            m = 0
            for v in f:
                m |= 1 << pos[v]
            masks.append(m)
        return cls(labels, gmask, facets=masks)

    def mask_of(self, vertices: Iterable[Hashable]) -> int:
        m = 0
        for v in vertices:
            try:
                m |= 1 << self._pos[v]
            except KeyError:
                raise ValueError(f"unknown vertex {v!r}") from None
        return m

    def labels_of(self, mask: int) -> tuple:
        return tuple(self.labels[k] for k in bits(mask))

    # the two presentations
    @property
    def facet_masks(self) -> tuple[int, ...]:
        if self._facets is None:
            self._facets = self._facets_from_nonfaces()
        return self._facets

    @property
    def nonface_masks(self) -> tuple[int, ...]:
        if self._nonfaces is None:
            self._nonfaces = self._nonfaces_from_facets()
        return self._nonfaces

    @property
    def facets(self) -> tuple[tuple, ...]:
        return tuple(self.labels_of(f) for f in self.facet_masks)

    @property
    def vertices(self) -> tuple:
        return self.labels_of(self.ground)

    @property
    def is_void(self) -> bool:
        if self._nonfaces is not None:
            return 0 in self._nonfaces
        return not self._facets

    @property
    def is_irrelevant(self) -> bool:
        return not self.is_void and not self.faces_by_size(1)

    def is_face(self, mask: int) -> bool:
        if mask & ~self.ground:
            return False
        if self._nonfaces is not None:
            return not any(n & mask == n for n in self._nonfaces)
        return any(mask & f == mask for f in self._facets)

    def __contains__(self, face: Iterable[Hashable]) -> bool:
        try:
            return self.is_face(self.mask_of(face))
        except ValueError:
            return False

    # face enumeration
    def faces_by_size(self, size: int) -> tuple[int, ...]:
        """Faces with ``size`` vertices as masks, in lexicographic order."""
        if size < 0:
            return ()
        cached = self._faces.get(size)
        if cached is None:
            self._enumerate(size)
            cached = self._faces[size]
        return cached

    def prepare(self, top: int) -> None:
        """Enumerate every face size up to ``top`` in one pass."""
        if top >= 0 and top not in self._faces:
            self._enumerate(top)

    def _enumerate(self, top: int) -> None:
        if self.is_void:
            for s in range(top + 1):
                self._faces[s] = ()
            return
        buckets: list[list[int]] = [[] for _ in range(top + 1)]
        verts = bits(self.ground)
        if self._nonfaces is not None:
            by_vertex = self._vertex_nonfaces()

            def extend(face: int, start: int, size: int):
                buckets[size].append(face)
                if size == top:
                    return
                for idx in range(start, len(verts)):
                    v = verts[idx]
                    new = face | (1 << v)
                    if any(n & new == n for n in by_vertex[v]):
                        continue
                    extend(new, idx + 1, size + 1)

            extend(0, 0, 0)
        else:
            facets = self._facets

            def extend(face: int, start: int, size: int, live):
                buckets[size].append(face)
                if size == top:
                    return
                for idx in range(start, len(verts)):
                    bit = 1 << verts[idx]
                    sub = [f for f in live if f & bit]
                    if sub:
                        extend(face | bit, idx + 1, size + 1, sub)

            extend(0, 0, 0, facets)
        for s in range(top + 1):
            self._faces.setdefault(s, tuple(buckets[s]))

    def _vertex_nonfaces(self):
        if self._by_vertex is None:
            table: dict[int, list[int]] = {v: [] for v in bits(self.ground)}
            for n in self._nonfaces:
                for v in bits(n):
                    table[v].append(n)
            self._by_vertex = table
        return self._by_vertex

    def _facets_from_nonfaces(self) -> tuple[int, ...]:
        if 0 in self._nonfaces:
            return ()
        verts = bits(self.ground)
        by_vertex = self._vertex_nonfaces()
        found: list[int] = []

        def extend(face: int, start: int):
            grew = False
            for idx in range(start, len(verts)):
                v = verts[idx]
                new = face | (1 << v)
                if any(n & new == n for n in by_vertex[v]):
                    continue
                grew = True
                extend(new, idx + 1)
            if not grew:
                # maximal unless a lower vertex can still be added
                for v in verts:
                    if face >> v & 1:
                        continue
                    new = face | (1 << v)
                    if not any(n & new == n for n in by_vertex[v]):
                        return
                found.append(face)

        extend(0, 0)
        return _maximal(found)

    def _nonfaces_from_facets(self) -> tuple[int, ...]:
        if not self._facets:
            return (0,)
        verts = bits(self.ground)
        found = [1 << v for v in verts if not any(f >> v & 1 for f in self._facets)]
        top = max(f.bit_count() for f in self._facets)
        for size in range(1, top + 1):
            faces = self.faces_by_size(size)
            face_set = set(faces)
            for face in faces:
                high = face.bit_length()
                for v in verts:
                    if v < high:
                        continue
                    cand = face | (1 << v)
                    if self.is_face(cand):
                        continue
                    if all((cand ^ (1 << u)) in face_set for u in bits(face)):
                        found.append(cand)
        return _minimal(found)

    # value semantics
    def _key(self):
        return (frozenset(self.vertices),
                frozenset(frozenset(self.labels_of(f)) for f in self.facet_masks))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(void, ground={list(self.vertices)})"
        facets = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"SimplicialComplex(<{facets}>, ground={list(self.vertices)})"


def _labels_to_context(labels: Sequence[Hashable]) -> PolynomialContext:
    if all(isinstance(v, str) for v in labels):
        return PolynomialContext(tuple(labels))
    return PolynomialContext(tuple(f"x{v}" for v in labels))


def complex_from_squarefree_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex: faces are the sets containing no generator support."""
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no Stanley-Reisner complex")
    if not ideal.is_squarefree:
        raise ValueError("non-square-free generator; polarize first")
    ctx = ideal.context
    ground = (1 << ctx.n) - 1
    return SimplicialComplex(ctx.variable_names, ground,
                             nonfaces=[g.support for g in ideal.generators])


def minimal_nonfaces(cx: SimplicialComplex) -> tuple[tuple, ...]:
    return tuple(cx.labels_of(n) for n in cx.nonface_masks)


def ideal_from_complex(cx: SimplicialComplex, ctx: PolynomialContext | None = None) -> MonomialIdeal:
    """Stanley-Reisner ideal generated by x_F over the minimal non-faces F."""
    if cx.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ideal")
    if ctx is None:
        ctx = _labels_to_context(cx.labels)
    elif ctx.n != len(cx.labels):
        raise ValueError("context size does not match the ambient labels")
    gens = [Monomial.from_support(bits(n), ctx.n) for n in cx.nonface_masks]
    return MonomialIdeal(ctx, tuple(gens))


def induced_subcomplex(cx: SimplicialComplex, W: Iterable[Hashable] | int) -> SimplicialComplex:
    """Faces of ``cx`` contained in ``W``; ``W`` may be labels or a mask."""
    wmask = W if isinstance(W, int) else cx.mask_of(W)
    if wmask & ~cx.ground:
        raise ValueError("W is not contained in the ground set")
    if cx._nonfaces is not None:
        return SimplicialComplex(cx.labels, wmask,
                                 nonfaces=[n for n in cx._nonfaces if n & wmask == n])
    return SimplicialComplex(cx.labels, wmask, facets=[f & wmask for f in cx._facets])


def union_of_subcomplexes(parts: Sequence[SimplicialComplex]) -> SimplicialComplex:
    if not parts:
        raise ValueError("empty union")
    labels = parts[0].labels
    if any(p.labels != labels for p in parts):
        raise ValueError("parts do not share one ambient ground set")
    ground = 0
    facets: list[int] = []
    for p in parts:
        ground |= p.ground
        facets.extend(p.facet_masks)
    return SimplicialComplex(labels, ground, facets=facets)


def faces_of_dim(cx: SimplicialComplex, k: int) -> list[tuple]:
    """Faces of dimension ``k`` (``k + 1`` vertices) in lexicographic order."""
    if k < -1:
        raise ValueError("k must be >= -1")
    return [cx.labels_of(f) for f in cx.faces_by_size(k + 1)]
