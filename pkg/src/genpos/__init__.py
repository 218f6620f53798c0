"""Exact general position, lower general position and terminal position
invariants of graphs and their Cartesian products."""

__version__ = "0.1.0"

from .construct import (
    ConstructionTrace,
    combine_clique_cutset,
    construct_diam2,
    construct_diam3,
    construct_structured,
    extend_terminal,
)
from .distance import UNREACHABLE, DistanceMatrix, all_pairs_distances
from .errors import (
    CapacityError,
    ContractError,
    GenPosError,
    ParameterError,
    ParseError,
    UnsupportedClassError,
)
from .families import FamilySpec, make_family, parse_family
from .graph import Graph, ProductIndex, VertexSet, cartesian_product, from_edge_list, induced_subgraph
from .position import (
    are_orthogonal_gp,
    find_collinear_triple,
    geodetic_number,
    gp_number,
    has_universal_line,
    is_general_position,
    is_maximal_gp,
    line_of,
    lower_gp_number,
)
from .search import Budget, SearchResult
from .terminal import INFINITE, bad_path, is_terminal_set, is_terminal_vertex, terminal_failure, terminal_numbers
