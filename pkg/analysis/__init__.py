"""analysis package init"""

from analysis.verification import (
    DistributionDistance,
    VerificationReport,
    distribution_distance,
    operation_audit,
    qmarginal_grouping,
    verify_qmarginal,
)

__all__ = [
    "DistributionDistance",
    "VerificationReport",
    "distribution_distance",
    "operation_audit",
    "qmarginal_grouping",
    "verify_qmarginal",
]
