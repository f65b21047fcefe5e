from .golden_section import EvaluationBudget, bracket_maximum, golden_maximize
from .ansatz_optimizer import (
    AnsatzOptimizer,
    arc_fidelity,
    arc_point,
    arc_radius,
    arc_second_difference,
    constraint_residual,
    fidelity_objective,
    optimize,
    verify_overlaps,
)

__all__ = [
    "EvaluationBudget",
    "bracket_maximum",
    "golden_maximize",
    "AnsatzOptimizer",
    "arc_fidelity",
    "arc_point",
    "arc_radius",
    "arc_second_difference",
    "constraint_residual",
    "fidelity_objective",
    "optimize",
    "verify_overlaps",
]
