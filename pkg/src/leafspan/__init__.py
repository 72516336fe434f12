"""Leaf-maximizing spanning arborescences on rooted DAGs.

Public surface: validated rooted DAGs, branchings with exact counters,
general-graph maximum matching, weighted 2/3-set packing, the certified
approximation pipelines, an exact oracle, instance generators, the
independent-set reduction, and JSON/DOT serialization.
"""

from .branching import Branching, BranchingStats, empty_branching
from .errors import (
    CycleDetected,
    IllegalExpansion,
    LeafspanError,
    MalformedInput,
    NotReducedInstance,
    NotRooted,
    NotTBranching,
    ParseError,
    PreconditionViolated,
    TooLarge,
)
from .graph import Digraph, build_digraph, topological_order
from .instances import (
    UndirectedGraphInstance,
    brute_force_max_independent_set,
    gen_adversarial_family,
    gen_random_rooted_dag,
    leaves_to_independent_set,
    read_instance,
    reduce_independent_set,
    write_dot,
    write_instance,
)
from .matching import brute_force_matching, max_matching
from .packing import (
    EXACT_PACKER,
    GREEDY_PACKER,
    Packer,
    PackSet,
    pack_exact,
    pack_greedy,
)
from .solvers import (
    SolveReport,
    attach,
    exact_max_leaves,
    expansion_baseline,
    greedy_expand,
    max_expand,
    max_leaves,
    max_leaves_packing,
)

__all__ = [
    "Branching",
    "BranchingStats",
    "Digraph",
    "EXACT_PACKER",
    "GREEDY_PACKER",
    "PackSet",
    "Packer",
    "SolveReport",
    "UndirectedGraphInstance",
    "attach",
    "brute_force_matching",
    "brute_force_max_independent_set",
    "build_digraph",
    "empty_branching",
    "exact_max_leaves",
    "expansion_baseline",
    "gen_adversarial_family",
    "gen_random_rooted_dag",
    "greedy_expand",
    "leaves_to_independent_set",
    "max_expand",
    "max_leaves",
    "max_leaves_packing",
    "max_matching",
    "pack_exact",
    "pack_greedy",
    "read_instance",
    "reduce_independent_set",
    "topological_order",
    "write_dot",
    "write_instance",
    "CycleDetected",
    "IllegalExpansion",
    "LeafspanError",
    "MalformedInput",
    "NotReducedInstance",
    "NotRooted",
    "NotTBranching",
    "ParseError",
    "PreconditionViolated",
    "TooLarge",
]
