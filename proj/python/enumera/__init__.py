"""Exact-arithmetic enumerative counts for quartic surfaces in 3-space."""

from enumera._core import (
    __version__,
    automorphism_group_order,
    check_triple_point_formula,
    count_offtrope_triples,
    dejonquieres,
    dual_surface_degree,
    grid_offtrope_orbit_count,
    kummer_fibre_json,
    kummer_ledger,
    pencil_nodal_count,
    plucker_bitangents,
    plucker_dual_degree,
    plucker_flexes,
    polar_tangency_correction,
    riemann_hurwitz_branch_count,
    run_acceptance_checks,
    severi_degree,
    tetra_ledger,
    tetra_monoid_ledger,
    triangle_ledger,
    verify_incidence,
)

__all__ = [
    "__version__",
    "automorphism_group_order",
    "check_triple_point_formula",
    "count_offtrope_triples",
    "dejonquieres",
    "dual_surface_degree",
    "grid_offtrope_orbit_count",
    "kummer_fibre_json",
    "kummer_ledger",
    "pencil_nodal_count",
    "plucker_bitangents",
    "plucker_dual_degree",
    "plucker_flexes",
    "polar_tangency_correction",
    "riemann_hurwitz_branch_count",
    "run_acceptance_checks",
    "severi_degree",
    "tetra_ledger",
    "tetra_monoid_ledger",
    "triangle_ledger",
    "verify_incidence",
]
