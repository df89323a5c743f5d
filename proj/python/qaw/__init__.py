"""Askey-Wilson scheme numerics."""

from ._qaw import (
    ConvergenceFailure,
    Error,
    InvalidArgument,
    connection,
    density,
    eval_h,
    eval_p,
    eval_scheme,
    q_binomial,
    qpochhammer,
    qpochhammer_inf,
    run_suite,
    sample_chain,
    suite_names,
)

__all__ = [
    "ConvergenceFailure",
    "Error",
    "InvalidArgument",
    "connection",
    "density",
    "eval_h",
    "eval_p",
    "eval_scheme",
    "q_binomial",
    "qpochhammer",
    "qpochhammer_inf",
    "run_suite",
    "sample_chain",
    "suite_names",
]
