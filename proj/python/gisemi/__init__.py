"""Graph inverse semigroups: elements, closed inverse subsemigroups, cosets,
index and conjugacy."""

from ._gisemi import (
    Element,
    GisemiError,
    Graph,
    ParseError,
    Path,
    Subsemigroup,
    are_conjugate,
    conjugator,
    count_paths_from,
    coset_representatives,
    enumerate_elements,
    generated,
    index,
    inverse,
    membership,
    multiply,
    natural_leq,
    oracle_closure,
    oracle_index_profile,
    root,
    same_coset,
    up_set,
)

__all__ = [
    "Element",
    "GisemiError",
    "Graph",
    "ParseError",
    "Path",
    "Subsemigroup",
    "are_conjugate",
    "conjugator",
    "count_paths_from",
    "coset_representatives",
    "enumerate_elements",
    "generated",
    "index",
    "inverse",
    "membership",
    "multiply",
    "natural_leq",
    "oracle_closure",
    "oracle_index_profile",
    "root",
    "same_coset",
    "up_set",
]
