"""Exact tools for the split equation pair delta + ax + by = (a-1)(b-1)/2."""

from .core import (
    DomainError,
    InvariantViolation,
    ResourceLimitError,
    BruteForceReport,
    SplitInstance,
    SplitSolution,
    brute_force_split,
    egcd,
    gamma,
    gcd,
    mod_inverse,
    solve_split,
    theta,
)
from .sequences import (
    Arithmetic,
    Balancing,
    Explicit,
    FactorialPower,
    FibonacciLike,
    FibonacciPower,
    KthPower,
    LucasBalancing,
    Naturals,
    Odds,
    OddrResult,
    PowerRecurrence,
    SequenceSpec,
    ShiftedGeometric,
    closed_form_mod6_4,
    fib,
    fib_cube_solution,
    fib_identity_solution,
    fib_pair,
    fib_square_solution,
    fiblike_pair,
    format_spec,
    iter_terms,
    oddr,
    parse_spec,
    phi_psi,
    term,
    term_mod,
)
from .periodicity import (
    BitRow,
    InconclusiveError,
    PeriodReport,
    StatePeriod,
    detect_period,
    fibonacci_period_table,
    first_alternation_index,
    gamma_row,
    gamma_shift_check,
    halfperiod_reflection,
    pair_row,
    pisano,
    row_period,
    state_period_mod,
)
from .density import DensityTrace, build_density_sequence, trace_rows, trace_to_json, verify_growth_bounds
from .explorer import (
    NVarInstance,
    NVarReport,
    ScanRecord,
    beiter_density,
    density_curve,
    nvar_classify,
    rs_solve,
    run_scan,
    scan_shard,
)

__version__ = "0.1.0"
