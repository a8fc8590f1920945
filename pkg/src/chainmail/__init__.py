"""Complexes of directed forests, composition strata and disconnecting complexes of trees.

Everything is exact: faces are enumerated combinatorially and homology is
computed over the integers.
"""

from .complex import (
    CapacityError,
    ComplexError,
    SimplicialComplex,
    are_isomorphic,
    euler_characteristic,
    f_vector,
    faces,
    from_facets,
    from_minimal_nonfaces,
    is_cone,
)
from .graphs import (
    DirectedGraph,
    Graph,
    Tree,
    augment,
    delta_complex,
    direct_augmented,
    double_directed_string,
    independence_complex,
    is_directed_forest,
    leaf_paths,
)
from .homology import homology_report, matches_point, matches_sphere, reduced_homology, smith_normal_form
from .maps import (
    SimplicialMap,
    fiber_subcomplex,
    is_simplicial,
    phi_map,
    rational_homology_iso,
    verify_quillen_fibers,
)
from .posets import Poset, exists_realizing_poset, order_complex, p_poset
from .strata import (
    Composition,
    Partition,
    can_refine_to_type,
    delta_lambda,
    disconnecting_complex,
    maximal_elements_count,
    refines,
)
from .trees import enumerate_trees, random_tree

__version__ = "0.1.0"
