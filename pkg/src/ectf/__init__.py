"""Construction and certification toolkit for triangle-free graphs with
existential extension properties: family constructors, shattered matrices
and tournaments, definitional property checkers, multiplicities, and a
graph6-based command line."""

from .families import (
    albert_cycles,
    albert_matrix,
    circular,
    erdos_hypercube,
    hypercube_ckj,
    hypercube_layers,
    twist,
    twist_inv,
    twisted_four,
    twisted_tournament,
    twisted_tournament_hypercube,
)
from .graph6 import (
    Graph6ParseError,
    decode_graph6,
    encode_graph6,
    read_graph6_file,
    write_graph6_file,
)
from .graphs import (
    MAX_VERTICES,
    CapacityError,
    DistanceSetSpec,
    Graph,
    ParameterError,
    build_cayley,
    common_neighbors,
    degree_stats,
)
from .isomorphism import are_isomorphic
from .shattered import (
    RNG_ALGORITHM,
    BitMatrix,
    Tournament,
    canonical_tournaments,
    is_shattered_matrix,
    is_shattered_tournament,
    random_matrix,
    random_tournament,
    shattered_fraction,
)
from .table import run_table, table_to_json, table_to_text
from .verify import (
    MultiplicityResult,
    PropertyReport,
    certify,
    has_anti_triangle,
    is_3ectf,
    is_triangle_free,
    is_twin_free,
    mu2_hypercube_formula,
    multiplicity,
    recognize_circular,
    satisfies_adj_k,
    satisfies_e_k,
    satisfies_e_k_prime,
    triangle_center,
)

__all__ = [
    "MAX_VERTICES",
    "RNG_ALGORITHM",
    "BitMatrix",
    "CapacityError",
    "DistanceSetSpec",
    "Graph",
    "Graph6ParseError",
    "MultiplicityResult",
    "ParameterError",
    "PropertyReport",
    "Tournament",
    "albert_cycles",
    "albert_matrix",
    "are_isomorphic",
    "build_cayley",
    "canonical_tournaments",
    "certify",
    "circular",
    "common_neighbors",
    "decode_graph6",
    "degree_stats",
    "encode_graph6",
    "erdos_hypercube",
    "has_anti_triangle",
    "hypercube_ckj",
    "hypercube_layers",
    "is_3ectf",
    "is_shattered_matrix",
    "is_shattered_tournament",
    "is_triangle_free",
    "is_twin_free",
    "mu2_hypercube_formula",
    "multiplicity",
    "random_matrix",
    "random_tournament",
    "read_graph6_file",
    "recognize_circular",
    "run_table",
    "satisfies_adj_k",
    "satisfies_e_k",
    "satisfies_e_k_prime",
    "shattered_fraction",
    "table_to_json",
    "table_to_text",
    "triangle_center",
    "twist",
    "twist_inv",
    "twisted_four",
    "twisted_tournament",
    "twisted_tournament_hypercube",
    "write_graph6_file",
]

__version__ = "0.1.0"
