"""Local fundamental groups of ADE plane-curve germs, their finite cover
germs as permutation monodromies, and the correspondence with Belyi
permutation triples (dessins d'enfants)."""

from .catalog import (
    DistinguishedWords,
    GraphVertex,
    ResolutionGraph,
    SingularityType,
    branch_count,
    catalog_types,
    distinguished_words,
    graphs_isomorphic,
    mumford_presentation,
    resolution_graph,
    simplified_presentation,
)
from .covers import (
    BetaDescriptor,
    CenterData,
    GermCover,
    PowerMapBeta,
    TheoremReport,
    TripleBeta,
    beta,
    center_subgroup,
    construct_d4_from_belyi,
    enumerate_covers,
    validate_cover,
    verify_theorem2,
)
from .dessins import (
    BelyiClass,
    BelyiTriple,
    DessinClass,
    classify,
    enumerate_belyi,
    equivalent,
    genus,
    power_map,
)
from .fpgroups import (
    AbelianInvariants,
    Presentation,
    Word,
    abelianization,
    check_homomorphism,
    commutator,
    enumerate_homs,
    evaluate_word,
    hom_count,
    smith_normal_diagonal,
)
from .perms import (
    BlockSystem,
    CycleType,
    Permutation,
    action_on_blocks,
    blocks_from_central,
    canonical_tuple,
    compose,
    cycle_type,
    group_elements,
    is_central,
    is_semiregular,
    is_transitive,
    orbits,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
