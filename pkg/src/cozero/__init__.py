"""Cozero-divisor graphs of finite commutative rings: construction, exact
clique/chromatic numbers, perfection certification, and claim verification."""

from .rings import (
    AssociateClasses,
    CapExceededError,
    RingSpec,
    RingSpecError,
    associate_classes,
    crt_split,
    in_principal_ideal,
    is_unit,
    is_von_neumann_regular,
    min_prime_count,
    parse_spec,
    principal_ideal,
    vertices,
)
from .graphs import (
    CozeroGraph,
    QuotientGraph,
    adjacency_via_containment,
    build_cozero_graph,
    complement,
    induced_subgraph,
    nzc,
    nzc_partition,
    quotient_by_associates,
    to_dot,
    to_json,
)
from .solvers import (
    CliqueResult,
    ColoringResult,
    OddCycleCertificate,
    are_isomorphic,
    brute_force_chromatic,
    brute_force_clique,
    chromatic_number,
    find_odd_hole,
    is_perfect_desk_scale,
    max_clique,
)

__version__ = "0.1.0"
