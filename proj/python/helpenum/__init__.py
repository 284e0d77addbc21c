"""Exact Luthar-Passi / HeLP constraint enumeration for torsion units of
integral group rings, with the M11 dataset bundled as fixtures."""

from helpenum._core import (
    BrauerTable,
    CharacterTable,
    admissible_classes,
    euler_phi,
    group_prime_graph,
    load_brauer,
    load_table,
    moebius,
    ramanujan_sum,
    solve_all,
    solve_order,
    verify_report_json,
)

__all__ = [
    "BrauerTable",
    "CharacterTable",
    "admissible_classes",
    "euler_phi",
    "group_prime_graph",
    "load_brauer",
    "load_table",
    "moebius",
    "ramanujan_sum",
    "solve_all",
    "solve_order",
    "verify_report_json",
]
