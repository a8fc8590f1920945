"""
Order complexes and the poset P_t
=================================

"""

from chainmail.complex import from_facets
from chainmail.posets import dumps_poset, exists_realizing_poset, order_complex, p_poset
from chainmail.graphs import delta_complex, double_directed_string, string_edge_labels

# in P_t, y < x when x - y >= 2; its chains are the directed forests of L_t
for t in range(1, 5):
    same = order_complex(p_poset(t)) == delta_complex(double_directed_string(t), string_edge_labels(t))
    print(f"t={t}: order complex of P_t equals Delta(L_t): {same}")

print(dumps_poset(p_poset(2)))

# a circle on three vertices is not the order complex of anything
print(exists_realizing_poset(from_facets({1, 2, 3}, [{1, 2}, {2, 3}, {1, 3}])))
