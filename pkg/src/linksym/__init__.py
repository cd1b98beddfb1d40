"""Symmetry calculus for oriented, labeled links.

Group algebra of the Whitten groups, their action on diagrams and linking
matrices, exact polynomial invariants, and the invariant filter bounding
each link's intrinsic symmetry group from above.
"""

from .whitten import (
    Permutation,
    Subgroup,
    WhittenElement,
    compose,
    conjugate_subgroup,
    coset_index,
    enumerate_gamma,
    gamma_order,
    generate,
    identity,
    inverse,
)
from .linkmatrix import (
    LinkingMatrix,
    Quad4,
    Triple,
    act_matrix,
    classify_triple,
    f3,
    f3_preimage,
    f4,
    f4_preimage,
    stabilizer_bruteforce,
    stabilizer_structured_3,
    stabilizer_structured_4,
)
from .diagram import LinkDiagram, apply_whitten, parse_pd, serialize_pd, simplify, sublink
from .poly import LaurentPoly, LaurentPoly2
from .bracket import jones, kauffman_bracket
from .homfly import conway, homflypt
from .cable import cable2
from .symfilter import candidate_stage, compare_to_truth, count_link_types, profile, sigma_prime
from .census import LinkRecord, census_by_name, ground_truth_sigma, load_census
from .identify import identify_group, match_named_subgroup_2
from .lattice import all_subgroups, conjugacy_classes_of_subgroups, subgroup_counts

__version__ = "0.1.0"
