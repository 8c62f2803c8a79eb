"""Word-representable split graphs: recognition, representation number and
3-uniform word-representants."""

from .classify import (
    Classification,
    InconsistencyError,
    Witness,
    comparability_rep3,
    detect_induced,
    representation_number,
    split_comparability,
    split_permutation,
)
from .construct import ConstructionTrace, build_three_uniform_word, verify_construction
from .families import FamilySpec, c3_members, generate
from .graph import (
    Graph,
    GraphFormatError,
    SplitPartition,
    find_split_partition,
    induced_subgraph,
    is_isomorphic,
    normalize_partition,
    parse_graph,
)
from .labelling import (
    ab_partition,
    check_comparability_conditions,
    check_wr_conditions,
    find_comparability_labelling,
    find_wr_labelling,
    shape_of,
)
from .oracle import apex_perm_extension, min_permutational_representation, min_uniform_representation
from .words import alternates, graph_of_word, is_k_uniform, represents, restrict, reverse

__version__ = "0.1.0"
