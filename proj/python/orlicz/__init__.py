"""Orlicz norms of random variables and sub-gaussian tail bounds."""

from ._core import (
    BoundCurve,
    CenteringRequired,
    OrliczError,
    RandomVariable,
    conjugate_exponent,
    hoeffding_classic,
    hoeffding_complementary,
    hoeffding_sum_params,
    legendre_phi,
    lemma1_tail_curve,
    linear_grid,
    luxemburg_norm,
    luxemburg_upper_const,
    moment_norm,
    phi,
    psi,
    run_battery,
    sum_of_independent,
    tail_from_tau,
    tail_norm,
    tau_norm,
    tau_upper_const,
    verify_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
