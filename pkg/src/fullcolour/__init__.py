"""Full-homomorphisms, point-determining cores and minimal obstructions of small graphs."""
from .closed_form import (
    count_obs_cycles,
    count_obs_paths,
    obs_cycles_closed,
    obs_paths_closed,
    set_C,
    set_LF,
    set_O,
    solve_linear,
)
from .enumeration import EnumerationRequest, enumerate_graphs, enumerate_regular_connected
from .errors import (
    CapacityError,
    DomainError,
    Graph6ParseError,
    GraphError,
    NotALinearForest,
    PreconditionError,
    UnsupportedOrder,
)
from .fullhom import (
    FullHomWitness,
    full_hom_brute,
    full_hom_exists,
    full_hom_witness,
    is_blowup_by_forbidden,
    is_blowup_of_linear_forest,
)
from .graph_core import (
    Graph,
    automorphism_orbits,
    canonical_form,
    connected_components,
    contains_induced,
    delete_vertex,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_isomorphic,
    is_vertex_transitive,
    make_named,
    make_standard,
)
from .obstructions import (
    ObstructionSet,
    check_obs_transfer,
    construct_witness_host,
    is_minimal_obstruction,
    obs_oracle,
    obs_star_existence_regular,
    obs_star_oracle,
)
from .pd_core import (
    CollapseMap,
    LinearForestSpec,
    false_twins,
    full_core,
    is_point_determining,
    linear_forest_spec,
    mu,
    removable_vertices,
    true_twins,
)

__version__ = "0.1.0"
