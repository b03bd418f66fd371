# coding: utf-8

# # Betti numbers of a small square-free ideal
#
# Take the ideal generated by x1*x3 and x2*x4.  It is the edge ideal of the
# complement of the 4-cycle 1-2-3-4, and also the Stanley-Reisner ideal of
# the 4-cycle seen as a simplicial complex.

from monobetti import (PolynomialContext, complex_from_squarefree_ideal, hochster_betti,
                       induced_subcomplex, invariants, minimalize, parse_monomial,
                       reduced_homology_dim, taylor_betti)
from monobetti.report import format_diagram

ctx = PolynomialContext.standard(4)
I = minimalize([parse_monomial(t, ctx) for t in ("x1*x3", "x2*x4")], ctx)
print(I.format())

# The complex has the four edges of the square as facets.

cx = complex_from_squarefree_ideal(I)
print(cx.facets)

# Hochster's formula sums reduced homology of induced subcomplexes.  The
# two-vertex subset {x1, x3} is two isolated points, so it has one class in
# degree 0, which becomes one of the two quadratic generators.

W = induced_subcomplex(cx, ["x1", "x3"])
print(W.facets, reduced_homology_dim(W, 0))

# The whole square is a circle: one class in degree 1.  That gives the
# single syzygy of degree 4.

print(reduced_homology_dim(cx, 1))

table = hochster_betti(I)
print(format_diagram(table))

# The Taylor complex gives the same answer by a completely different route.

print(taylor_betti(I) == table)

# Regularity 3, projective dimension 1.  The resolution is not linear, and
# the first row where linearity fails is row 1, so the index is 1.

inv = invariants(table, I)
print(f"reg={inv.reg} projdim={inv.projdim} linear={inv.linear} index={inv.index}")
