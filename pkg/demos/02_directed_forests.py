"""
Directed-forest complexes of the double string
==============================================

"""

from chainmail.graphs import delta_complex, double_directed_string, string_edge_labels
from chainmail.homology import homology_report

# L_t: a path on t+1 vertices with both orientations of every edge.
# Edges are numbered along the string: (i+1 -> i) is 2i-1, (i -> i+1) is 2i.
for t in range(0, 8):
    K = delta_complex(double_directed_string(t), string_edge_labels(t))
    print(f"t={t}: {len(K.facets):3d} facets, homology {homology_report(K)}")

# the labels map back to edges, which is how faces read as forests
K = delta_complex(double_directed_string(2), string_edge_labels(2))
for F in sorted(map(sorted, K.facets)):
    print("forest:", [K.labels[i] for i in F])
