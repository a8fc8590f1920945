"""
Simplicial complexes from facets and from minimal non-faces
===========================================================

"""

from chainmail.complex import dumps, from_facets, from_minimal_nonfaces, is_cone

# a hollow triangle, given by its three edges
circle = from_facets({1, 2, 3}, [{1, 2}, {2, 3}, {1, 3}])
print("faces:", circle.faces())
print("f-vector:", circle.f_vector(), "euler:", circle.euler_characteristic())

# the same vertex set, described by what is forbidden instead
path = from_minimal_nonfaces({1, 2, 3, 4}, [{1, 2}, {2, 3}, {3, 4}])
print("facets of the forbidden-pairs complex:", sorted(map(sorted, path.facets)))

# no facets at all is not the same thing as only the empty face
void = from_facets({1}, [])
empty = from_facets({1}, [], empty=True)
print("void faces:", void.faces(), " empty-complex faces:", empty.faces())

# cones have a vertex in every facet
print("apex of a filled triangle:", is_cone(from_facets({1, 2, 3}, [{1, 2, 3}])))
print("apex of the circle:", is_cone(circle))

print(dumps(circle, ["a circle"]))
