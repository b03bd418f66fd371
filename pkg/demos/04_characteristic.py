# coding: utf-8

# # The coefficient field matters
#
# The 6-vertex triangulation of the real projective plane has no rational
# homology but one class in degrees 1 and 2 over GF(2).  Through Hochster's
# formula this changes the Betti table of its Stanley-Reisner ideal.

from monobetti import (GF2, QQ, SimplicialComplex, hochster_betti, ideal_from_complex,
                       invariants, reduced_homology_dim, taylor_betti)
from monobetti.report import format_diagram

facets = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
          (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
rp2 = SimplicialComplex.from_facets(facets)

for field in (QQ, GF2):
    print(field, [reduced_homology_dim(rp2, k, field) for k in range(-1, 3)])

I = ideal_from_complex(rp2)
print(I.format())

for field in (QQ, GF2):
    table = hochster_betti(I, field)
    print(f"\nover {field}  (Taylor agrees: {table == taylor_betti(I, field)})")
    print(format_diagram(table))
    print("reg =", invariants(table, I).reg)
