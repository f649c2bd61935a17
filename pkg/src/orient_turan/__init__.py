"""Exact counting, homomorphism and extremal-search tools for oriented graphs."""

from .count import (
    CopyProfile,
    common_in_degree,
    count_generic,
    count_kst,
    count_out_stars,
    count_pattern,
    count_profile,
    count_tt,
)
from .d6 import digraph6_decode, digraph6_encode, read_graphs, write_graphs
from .errors import (
    BudgetError,
    CapacityError,
    ConsistencyError,
    InvalidInputError,
    OrientTuranError,
    ParseError,
)
from .extremal import (
    Budget,
    ClassMinimum,
    DensitySequence,
    ExtremalCertificate,
    density_sequence,
    enumerate_oriented,
    exo_exact,
    min_copies_in_class,
)
from .graphs import (
    DEFAULT_SEED,
    MAX_PATTERN_ORDER,
    MAX_VERTICES,
    OrientedGraph,
    Pattern,
    antidirected_complete_bipartite,
    blow_up,
    directed_cycle,
    random_oriented_graph,
    split_seed,
    transitive_tournament,
    turan_edge_count,
    turan_part_sizes,
)
from .homomorphism import (
    CompressibilityResult,
    TournamentCatalog,
    canonical_form,
    compressibility,
    enumerate_tournaments,
    has_homomorphism,
)
from .verify import (
    SupersaturationCertificate,
    TheoremReport,
    build_supersaturation_certificate,
    check_ghs_tournament_identity,
    check_kst,
    check_omm,
    check_prop31a,
    check_supersaturation,
    check_t16,
    check_tt_density,
)

__version__ = "0.1.0"
