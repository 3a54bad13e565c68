"""Exact walk-matrix determinants of rooted products with paths.

Graphs are passed and returned as graph6 strings; big integers come back as
Python ints.
"""

from ._walkmat import (
    adjacency_det,
    build_family,
    charpoly,
    decode,
    det,
    encode,
    f_member,
    resultant,
    rooted_product,
    s_poly,
    search_f,
    verify_charpoly,
    verify_main,
    verify_res1,
    verify_res2,
    verify_simple_spectrum,
    walk_det,
    walk_matrix,
)

__all__ = [
    "adjacency_det",
    "build_family",
    "charpoly",
    "decode",
    "det",
    "encode",
    "f_member",
    "resultant",
    "rooted_product",
    "s_poly",
    "search_f",
    "verify_charpoly",
    "verify_main",
    "verify_res1",
    "verify_res2",
    "verify_simple_spectrum",
    "walk_det",
    "walk_matrix",
]
