"""Exact zonotope volumes, cocircuit lattices, and matrix tree theorem checks.

Matrices are nested lists whose entries are Python ints or "p/q" strings;
exact rational results come back as strings.
"""

from zonomtt._core import (
    bases,
    char_poly,
    check_barycenter_lattice,
    check_classical_mtt,
    check_cocircuit_lattice,
    check_matroid_mtt,
    check_thm4,
    cocircuits,
    contains,
    det,
    hnf,
    incidence_matrix,
    is_totally_unimodular,
    is_unimodular,
    laplacian,
    lattices_equal,
    product_nonzero_eigenvalues,
    rank,
    spanning_tree_count,
    volume,
    weighted_tree_sum,
)

__all__ = [
    "bases",
    "char_poly",
    "check_barycenter_lattice",
    "check_classical_mtt",
    "check_cocircuit_lattice",
    "check_matroid_mtt",
    "check_thm4",
    "cocircuits",
    "contains",
    "det",
    "hnf",
    "incidence_matrix",
    "is_totally_unimodular",
    "is_unimodular",
    "laplacian",
    "lattices_equal",
    "product_nonzero_eigenvalues",
    "rank",
    "spanning_tree_count",
    "volume",
    "weighted_tree_sum",
]
