"""Multiplicative Zagreb indices and domination numbers of trees, with
exhaustive verification of their extremal bounds."""

from .bounds import (
    BoundValue,
    adjudicate_pi2_lower_exponent,
    check_monotonicity_props,
    pi1_lower,
    pi1_upper,
    pi2_lower,
    pi2_upper,
)
from .domination import (
    DominatingSet,
    DominationResult,
    EdgePartitionCounts,
    all_minimum_dominating_sets,
    check_pendant_lemma,
    domination_number,
    edge_partition,
    gamma_bruteforce,
)
from .enumeration import TreeStream, count_trees, enumerate_trees, enumerate_trees_with_gamma
from .families import (
    build_D_members,
    build_L_members,
    build_T,
    is_member_D,
    is_member_L,
)
from .harness import RunConfig, compute, extremal_table, verify
from .indices import m1, m2, pi1, pi2, pi2_vertex_form
from .tree import (
    DegreeMultiset,
    Tree,
    canonical_code,
    degree_multiset,
    from_edge_list,
    is_isomorphic,
)

__version__ = "0.1.0"
