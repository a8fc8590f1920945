"""
The tail map from directed forests to the doubly disconnecting complex
======================================================================

For a string the map is simplicial with cone fibres. As soon as the tree
branches, a forest can send a tail into every window of a leaf path and
the map stops being simplicial; this script shows both.
"""

from chainmail.graphs import string_tree
from chainmail.homology import homology_report
from chainmail.maps import is_simplicial, phi_map, quillen_report, rational_homology_iso
from chainmail.trees import star_tree

for name, T in [("string of 4", string_tree(4)), ("3-leaf star", star_tree(3))]:
    f = phi_map(T)
    print(name)
    print("  simplicial:", is_simplicial(f))
    print("  all fibres cones:", quillen_report(T).all_cones)
    print("  source:", homology_report(f.source), " target:", homology_report(f.target))
    if is_simplicial(f):
        print("  rational iso:", rational_homology_iso(f))

# the offending forest on the star
f = phi_map(star_tree(3))
label = {e: l for l, e in f.source.labels.items()}
sigma = {label[e] for e in [(1, 2), (4, 1), (6, 3), (7, 4)]}
print("tails", sorted(f.image(sigma)), "form a face of D_2:", f.image(sigma) in f.target)
