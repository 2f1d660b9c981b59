"""Join-irreducible posets of Lehmer-code lattices and their order patterns."""

from mposet.perm_core import (
    InvalidInput,
    Permutation,
    all_permutations,
    avoids_all,
    c_between,
    contains_pattern,
    decode_lehmer,
    inversion_set,
    lehmer_code,
    parse_permutation,
    standardize,
)
from mposet.join_irr import MElement, MPoset, build_M, chain, leq_closed_form, m_vector
from mposet.poset_patterns import (
    FinitePoset,
    PatternWitness,
    contains_poset_pattern,
    find_B2,
    find_c4_parallelogram,
    find_parallelogram,
    hasse_edges,
    is_disjoint_union_of_chains,
)

__version__ = "0.1.0"

__all__ = [
    "InvalidInput",
    "Permutation",
    "all_permutations",
    "avoids_all",
    "c_between",
    "contains_pattern",
    "decode_lehmer",
    "inversion_set",
    "lehmer_code",
    "parse_permutation",
    "standardize",
    "MElement",
    "MPoset",
    "build_M",
    "chain",
    "leq_closed_form",
    "m_vector",
    "FinitePoset",
    "PatternWitness",
    "contains_poset_pattern",
    "find_B2",
    "find_c4_parallelogram",
    "find_parallelogram",
    "hasse_edges",
    "is_disjoint_union_of_chains",
]
