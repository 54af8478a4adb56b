"""Exact solvers for the single-machine weighted-tardy-jobs problem.

Partition jobs by due date, solve each group as a knapsack, and merge the
per-group solution vectors with (max,+)-convolutions.  Several convolution
engines (naive, step-concave, range-guided, weight-indexed (min,+) mirror)
trade off against each other depending on the instance's size parameters;
the classic due-date-ordered dynamic program is included as the baseline,
and a brute-force oracle certifies everything at small sizes.
"""

from .bench import BenchDisagreement, rows_to_csv, run_bench
from .builders import (
    build_inverse_solution_vector,
    build_solution_vector_concave,
    build_solution_vector_dp,
    inverse_to_direct,
)
from .core import (
    NEG_INF,
    POS_INF,
    DueDateGrouping,
    Instance,
    Job,
    SolveResult,
    group_by_due_date,
    validate_solution_vector,
)
from .fractional import (
    FractionalSolutionVector,
    fractional_gap_check,
    fractional_solution_vector,
    wspt_sort,
)
from .generate import SplitMix64, generate_instance
from .instance_io import parse_instance, serialize_instance
from .maxplus import (
    ConvolutionEngine,
    EngineKind,
    convolve_naive,
    convolve_sstep_concave,
    convolve_with_ranges,
    is_bounded_monotone,
    is_sstep_concave,
    is_sstep_convex,
    minplus_convolve,
)
from .oracle import brute_force, brute_force_permutations, brute_force_vector, edd_feasible
from .prediction import (
    RangeIntervals,
    compute_range_intervals,
    delta,
    validate_range_intervals,
)
from .solvers import (
    DEFAULT_CALIBRATION,
    SolverPolicy,
    auto_select,
    forward_states,
    lawler_moore,
    prefix_vector_semantics_check,
    reconstruct_schedule,
    solve,
    solve_maxplus,
)

__version__ = "0.1.0"

__all__ = [
    "BenchDisagreement",
    "ConvolutionEngine",
    "DEFAULT_CALIBRATION",
    "DueDateGrouping",
    "EngineKind",
    "FractionalSolutionVector",
    "Instance",
    "Job",
    "NEG_INF",
    "POS_INF",
    "RangeIntervals",
    "SolveResult",
    "SolverPolicy",
    "SplitMix64",
    "auto_select",
    "brute_force",
    "brute_force_permutations",
    "brute_force_vector",
    "build_inverse_solution_vector",
    "build_solution_vector_concave",
    "build_solution_vector_dp",
    "compute_range_intervals",
    "convolve_naive",
    "convolve_sstep_concave",
    "convolve_with_ranges",
    "delta",
    "edd_feasible",
    "forward_states",
    "fractional_gap_check",
    "fractional_solution_vector",
    "generate_instance",
    "group_by_due_date",
    "inverse_to_direct",
    "is_bounded_monotone",
    "is_sstep_concave",
    "is_sstep_convex",
    "lawler_moore",
    "minplus_convolve",
    "parse_instance",
    "prefix_vector_semantics_check",
    "reconstruct_schedule",
    "rows_to_csv",
    "run_bench",
    "serialize_instance",
    "solve",
    "solve_maxplus",
    "validate_range_intervals",
    "validate_solution_vector",
    "wspt_sort",
]
