"""Density-matrix toolkit for entanglement dynamics under local damping.

Builds W/GHZ/cluster states, applies generalized-amplitude-damping and
filtering channels, evaluates Wootters and generalized bipartite
concurrences, and runs the sweep/threshold/retrieval experiments.
"""

from ._core import (
    GhzCheckResult,
    PriceEntry,
    SweepRecord,
    WScalingRow,
    apply_filter,
    apply_gad,
    bipartite_concurrence,
    cluster_price_report,
    density_from_pure,
    filter_operator,
    find_esd_threshold,
    gad_kraus,
    ghz_retrieval_check,
    i_concurrence_pure,
    make_pure,
    pairwise_concurrence,
    run_point,
    solve_equal_kappa,
    sweep_gamma,
    w_scaling_row,
    w_scaling_study,
    wootters_concurrence,
)

__all__ = [
    "GhzCheckResult",
    "PriceEntry",
    "SweepRecord",
    "WScalingRow",
    "apply_filter",
    "apply_gad",
    "bipartite_concurrence",
    "cluster_price_report",
    "density_from_pure",
    "filter_operator",
    "find_esd_threshold",
    "gad_kraus",
    "ghz_retrieval_check",
    "i_concurrence_pure",
    "make_pure",
    "pairwise_concurrence",
    "run_point",
    "solve_equal_kappa",
    "sweep_gamma",
    "w_scaling_row",
    "w_scaling_study",
    "wootters_concurrence",
]
