"""Nested pairs of finite equivalence relations: shape invariants, decisions, witnesses."""

from ._simpair import (
    CapExceeded,
    Error,
    Pair,
    brute_embedding,
    brute_isomorphism,
    brute_reduction,
    build_shape_pair,
    canonical_shape,
    crs,
    cs,
    decide_embedding,
    decide_isomorphism,
    decide_reduction,
    enumerate_pairs,
    fs,
    gcs_leq,
    gfs,
    lcs,
    lfs,
    min_size,
    orbit_pair,
    parse_pair,
    quotient,
    random_pair,
    restrict,
    sc_member,
    serialize_pair,
    shape_leq,
    verify_witness,
)

__all__ = [
    "CapExceeded",
    "Error",
    "Pair",
    "brute_embedding",
    "brute_isomorphism",
    "brute_reduction",
    "build_shape_pair",
    "canonical_shape",
    "crs",
    "cs",
    "decide_embedding",
    "decide_isomorphism",
    "decide_reduction",
    "enumerate_pairs",
    "fs",
    "gcs_leq",
    "gfs",
    "lcs",
    "lfs",
    "min_size",
    "orbit_pair",
    "parse_pair",
    "quotient",
    "random_pair",
    "restrict",
    "sc_member",
    "serialize_pair",
    "shape_leq",
    "verify_witness",
]
