"""Combinatorics of nilpotent orbit closures in the orthogonal symmetric space."""

from .partitions import (
    DiffStats,
    Partition,
    degeneration_chain,
    diff_stats,
    dominance_covers,
    dominates,
    dual,
    enumerate_below,
    enumerate_partitions,
    format_partition,
    parse_partition,
    s_step,
)
from .abdiagrams import (
    Diagram,
    Indecomposable,
    a_partition,
    aug,
    aug_any,
    b_partition,
    decompose,
    delta_stat,
    enumerate_all_diagrams,
    enumerate_ortho,
    format_diagram,
    has_property_P,
    is_ortho_symmetric,
    o_stat,
    parse_diagram,
    substring_count,
)
from .strata import (
    StrataSpec,
    TauString,
    d_lists,
    dim_M,
    dim_N,
    dim_orbit,
    dim_stratum,
    enumerate_lambda,
    is_valid_tau_string,
    orbit_partition,
    sigma_zero,
    strata_report,
    strata_spec,
    tau_zero,
)
from .verify import (
    LemmaReport,
    NormalityVerdict,
    StrataCheck,
    check_ci_condition,
    check_normality_gap,
    is_normal,
    minimum_stratum_gap,
    run_all,
    run_suite,
)

__version__ = "0.1.0"
