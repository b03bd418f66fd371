# coding: utf-8

# # Edge ideals, chordal graphs and the index
#
# For a graph G, the clique complex of G has the edge ideal of the
# complement as its Stanley-Reisner ideal.  That ideal has a linear
# resolution exactly when G is chordal, and otherwise its index is the
# length of the shortest induced cycle of G (longer than 3) minus 3.

import math

from monobetti import (Graph, all_graphs, froberg_check, homological_index, index_via_cycles,
                       induced_cycles, is_chordal)
from monobetti.graphs import complement_edge_ideal

for name, G in [("C4", Graph.cycle(4)), ("C5", Graph.cycle(5)), ("C6", Graph.cycle(6)),
                ("P4", Graph.path(4))]:
    print(name, complement_edge_ideal(G).format())
    print("   chordal:", is_chordal(G), " induced cycles:", induced_cycles(G, 4))
    print("   index from cycles:", index_via_cycles(G),
          " index from the Betti table:", homological_index(G))

# The same comparison over every labelled graph on 5 vertices.

counts = {}
for G in all_graphs(5):
    if G.is_complete():
        continue
    k = index_via_cycles(G)
    assert k == homological_index(G)
    assert froberg_check(G).agree
    counts[k] = counts.get(k, 0) + 1

for k in sorted(counts, key=lambda v: (v == math.inf, v)):
    print(f"index {k}: {counts[k]} graphs")
