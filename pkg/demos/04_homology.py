"""
Integral homology through Smith normal form
===========================================

"""

import numpy as np

from chainmail.complex import from_facets
from chainmail.homology import boundary_matrix, homology_report, smith_decomposition, smith_normal_form

# the 6-vertex projective plane has a Z/2 in degree 1
rp2 = from_facets(
    range(1, 7),
    [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
     (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)],
)
print(homology_report(rp2))

# boundary maps compose to zero
d1, d2 = boundary_matrix(rp2, 1), boundary_matrix(rp2, 2)
print("d1 d2 == 0:", not np.any(d1.dot(d2)))

M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
print("invariant factors, rank:", smith_normal_form(M))
D, U, V = smith_decomposition(M)
print(D)
print("U M V == D:", (U.dot(np.array(M, dtype=object)).dot(V) == D).all())
