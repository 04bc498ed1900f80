"""Finite-model laboratory for implication zroupoids.

An implication zroupoid is an algebra <A, ->, 0> satisfying
(x -> y) -> z = ((z' -> x) -> (y -> z)')' and 0'' = 0, where x' := x -> 0.
This package enumerates and classifies the finite members, builds their
derived meet/join algebras, and runs the equational verification suites.
"""

from ._core import (
    FiniteAlgebra,
    canonical_form,
    classify,
    count_classes,
    derive_bimagma,
    enumerate_algebras,
    eval_term,
    find_witness,
    is_izroupoid,
    is_transfer_shape,
    isomorphism,
    parse_identity,
    parse_term,
    satisfies,
    search_birkhoff_not_bisemilattice,
    suite_names,
    variables_of,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "FiniteAlgebra",
    "canonical_form",
    "classify",
    "count_classes",
    "derive_bimagma",
    "enumerate_algebras",
    "eval_term",
    "find_witness",
    "is_izroupoid",
    "is_transfer_shape",
    "isomorphism",
    "parse_identity",
    "parse_term",
    "satisfies",
    "search_birkhoff_not_bisemilattice",
    "suite_names",
    "variables_of",
    "verify",
]
