"""Integer powers of the hypergeometric function 2F1(1, a; a+1; x).

The C++ core expands (2F1(1, a; a+1; x))^n into a single power series whose
weights come from a recursively built coefficient table, and numerically
verifies the finite-sum and digamma-series identities that expansion implies.
"""

from ._core import (
    BenchRecord,
    CoefficientTable,
    ConvergenceControl,
    ConvergenceError,
    DomainError,
    Error,
    IdentityReport,
    MinusOnePolicy,
    PoleError,
    SeriesResult,
    TableSizeError,
    __version__,
    build_table,
    cauchy_power_oracle,
    cot_pi,
    digamma,
    eval_base,
    eval_power,
    pfq,
    required_terms,
    run_bench,
    verify_eq1,
    verify_eq2,
    verify_eq5,
    verify_eq8,
    verify_eq9,
    verify_eq10,
    verify_eq11,
    verify_eq12,
)

__all__ = [
    "BenchRecord",
    "CoefficientTable",
    "ConvergenceControl",
    "ConvergenceError",
    "DomainError",
    "Error",
    "IdentityReport",
    "MinusOnePolicy",
    "PoleError",
    "SeriesResult",
    "TableSizeError",
    "__version__",
    "build_table",
    "cauchy_power_oracle",
    "cot_pi",
    "digamma",
    "eval_base",
    "eval_power",
    "pfq",
    "power",
    "required_terms",
    "run_bench",
    "verify_eq1",
    "verify_eq2",
    "verify_eq5",
    "verify_eq8",
    "verify_eq9",
    "verify_eq10",
    "verify_eq11",
    "verify_eq12",
]


def power(alpha, n, x, tolerance=1e-12, max_terms=100000):
    """Evaluate (2F1(1, alpha; alpha+1; x))**n, building a table to size.

    Convenience wrapper around build_table + eval_power; for repeated
    evaluations at the same alpha, build one table and call eval_power.
    """
    ctrl = ConvergenceControl(tolerance=tolerance, max_terms=max_terms)
    m_max = required_terms(x, tolerance) + 64 * max(1, n)
    table = build_table(alpha, max(n - 1, 0), m_max)
    return eval_power(alpha, n, x, table, ctrl)
