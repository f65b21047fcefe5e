from .bound_calculator import bound_eta, bound_fidelity, bound_row, bound_table, universal_fidelity
from .optimal_cloner import (
    OPTIMAL_A,
    OPTIMAL_B,
    OPTIMAL_C,
    ansatz_channel,
    ansatz_isometry,
    clone,
    equator_fidelity_closed,
    optimal_12_channel,
    optimal_12_clones_channel,
    universal_12_channel,
)
from .concatenation import concatenation_check
from .bb84_attack import bb84_attack_report, bb84_report, binary_entropy

__all__ = [
    "bound_eta",
    "bound_fidelity",
    "bound_row",
    "bound_table",
    "universal_fidelity",
    "OPTIMAL_A",
    "OPTIMAL_B",
    "OPTIMAL_C",
    "ansatz_channel",
    "ansatz_isometry",
    "clone",
    "equator_fidelity_closed",
    "optimal_12_channel",
    "optimal_12_clones_channel",
    "universal_12_channel",
    "concatenation_check",
    "bb84_attack_report",
    "bb84_report",
    "binary_entropy",
]
