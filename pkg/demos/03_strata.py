"""
Compositions, refinement and the complexes delta_lambda
=======================================================

"""

from chainmail.strata import (
    Partition,
    compositions,
    cutset,
    delta_lambda,
    disconnecting_complex,
    hook,
    refines,
)
from chainmail.graphs import string_tree
from chainmail.complex import are_isomorphic
from chainmail.homology import homology_report

# compositions of 4 and their cut sets; refinement is containment
for x in compositions(4):
    print(x.parts, sorted(cutset(x)))
print("(2,2) <= (1,1,2):", refines((2, 2), (1, 1, 2)))

# hook shapes (k, 1^t) give spheres or points
for k in (2, 3, 4):
    row = [homology_report(delta_lambda(hook(k, t))) for t in range(6)]
    print(f"k={k}:", row)

print(delta_lambda(Partition.parse("2,2,1")).facets)

# the disconnecting complex of a string is again a hook complex
D = disconnecting_complex(string_tree(4), 2)
print("D_2(string_4) ~ delta_(3,1^4):", are_isomorphic(D, delta_lambda(hook(3, 4)), match_unused=True))
