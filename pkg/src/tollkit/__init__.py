"""Toll convexity on graphs and their strong, Cartesian and lexicographic products."""

from .graph import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphError,
    VertexSet,
    diameter,
    diametral_pair,
    distances,
    eccentric_vertices,
    eccentricity,
    family,
    new_graph,
)
from .io import (
    Corpus,
    Graph6Error,
    emit_edge_list,
    emit_graph6,
    enumerate_connected,
    parse_edge_list,
    parse_graph6,
    read_corpus,
    write_corpus,
)
from .products import (
    ProductGraph,
    cartesian_product,
    lexicographic_product,
    strong_equals_lex_on_complete,
    strong_product,
)
from .search import (
    InvariantResult,
    SearchLimitError,
    geodetic_number,
    hull_number,
    t_hull_number,
    tn2_witness_predicate,
    toll_number,
)
from .toll import (
    HullTrace,
    TollCertificate,
    Walk,
    extreme_vertices,
    geodesic_interval,
    is_extreme_vertex,
    is_toll_convex,
    is_tolled_walk,
    monophonic_interval,
    toll_certificate,
    toll_closure,
    toll_hull,
    toll_interval,
    toll_interval_oracle,
)

__version__ = "0.1.0"
