"""Rooted trees, their order-embedding categories, and Catalan words.

The four categories FT, FPT, T and PT have (planar) rooted trees as objects
and tree-order embeddings as morphisms, optionally preserving the root and
the depth-first order. Everything is finite and exact; hom-sets are
enumerated outright.
"""

from .catalan import CatalanDecodeError, CatalanToken, CatalanWord, Ordering, compare, decode, encode, parse_word
from .colimits import (
    Cospan,
    PropertyF,
    essential_surjectivity_witness,
    property_F_decomposition,
    pushout_universal_check,
    root_colimit_check,
    root_decomposition,
)
from .embeddings import (
    Category,
    OrderEmbedding,
    brute_force_morphisms,
    compose,
    enumerate_morphisms,
    identity,
    is_morphism,
    maps_from_Bn_tuples,
    parse_morphism,
    promote_root,
    tuple_to_morphism,
)
from .groebner import FormalElement, MonomialSet, chain_stabilization_demo, leading_term, member, minimize, monomial_stream
from .order import (
    AuditReport,
    PointedMorphismSet,
    antichain_check,
    divides,
    good_pair_search,
    higman_leq,
    quasi_order_audit,
)
from .trees import (
    POINT,
    BracketParseError,
    PlanarRootedTree,
    RootedTree,
    build_Bn,
    canonical_rooted,
    count_planar_representations,
    depth,
    enumerate_planar_trees,
    glue,
    parse_brackets,
    planar_representations,
    split,
    to_brackets,
    tree_leq,
)

__version__ = "0.1.0"
