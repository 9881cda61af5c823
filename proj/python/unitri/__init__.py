"""Exact computations in the Lie algebra u_n of unitriangular polynomial derivations."""

from ._core import (
    Automorphism,
    Derivation,
    Endomorphism,
    Error,
    Polynomial,
    apply,
    basis,
    bracket,
    construct_sigma,
    derived_length,
    dim_n,
    exp_ad,
    ideal_index,
    normalize,
    random_automorphism,
    verify,
)

__all__ = [
    "Automorphism",
    "Derivation",
    "Endomorphism",
    "Error",
    "Polynomial",
    "apply",
    "basis",
    "bracket",
    "construct_sigma",
    "derived_length",
    "dim_n",
    "exp_ad",
    "ideal_index",
    "normalize",
    "random_automorphism",
    "verify",
]
