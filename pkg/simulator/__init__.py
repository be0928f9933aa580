"""simulator package init"""

from simulator.statevector import (
    MeasuredDistribution,
    Statevector,
    apply_gate,
    dump_state,
    init_zero,
    marginal_distribution,
    marked_mask,
    nonzero_amplitudes,
    run,
    sample_register,
)

__all__ = [
    "MeasuredDistribution",
    "Statevector",
    "apply_gate",
    "dump_state",
    "init_zero",
    "marginal_distribution",
    "marked_mask",
    "nonzero_amplitudes",
    "run",
    "sample_register",
]
