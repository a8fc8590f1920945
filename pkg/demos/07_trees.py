"""
Unlabeled trees and random labeled trees
========================================

"""

from chainmail.graphs import dumps_graph
from chainmail.trees import canonical_form, enumerate_trees, random_tree

print([len(enumerate_trees(n)) for n in range(1, 11)])

for T in enumerate_trees(5):
    print(canonical_form(T))

# Prüfer sequences make random trees reproducible from a seed
T = random_tree(8, seed=2024)
print(dumps_graph(T))
print(canonical_form(T) == canonical_form(random_tree(8, seed=2024)))
