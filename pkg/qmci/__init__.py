"""qmci package init"""

from qmci.amplification import grover_power_probabilities, grover_power_probability
from qmci.convergence import ConvergenceRow, ConvergenceStudy, convergence_study
from qmci.estimators import (
    EstimationRecord,
    classical_mc_estimate,
    mlae_estimate,
    mlae_schedule_for_budget,
)
from qmci.predicates import OutcomePredicate, exact_amplitude, validate_predicate

__all__ = [
    "ConvergenceRow",
    "ConvergenceStudy",
    "EstimationRecord",
    "OutcomePredicate",
    "classical_mc_estimate",
    "convergence_study",
    "exact_amplitude",
    "grover_power_probabilities",
    "grover_power_probability",
    "mlae_estimate",
    "mlae_schedule_for_budget",
    "validate_predicate",
]
