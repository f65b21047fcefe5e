from .channel_algebra import (
    apply,
    apply_pure,
    choi_matrix,
    compose,
    conjugate_channel,
    effective_transfer,
    identity_channel,
    kraus_from_transfer,
    make_channel,
    pauli_channel,
    reduced_single_qubit_map,
    restrict_outputs,
    to_xy_convention,
    unitary_channel,
)
from .appendix_analyzer import (
    SIGMA_BASIS,
    covariance_constraint_residual,
    equatorial_family_gamma,
    extract_shrink,
    fidelity_with_offset,
    gamma_from_channel,
    gamma_from_kraus,
    gamma_from_transfer,
    kraus_coefficients,
    predicted_output,
    shrink_from_gamma,
    symmetrize_channel,
)
from .covariance_checker import check_phase_covariance, phase_shift, reference_inputs

__all__ = [
    "apply",
    "apply_pure",
    "choi_matrix",
    "compose",
    "conjugate_channel",
    "effective_transfer",
    "identity_channel",
    "kraus_from_transfer",
    "make_channel",
    "pauli_channel",
    "reduced_single_qubit_map",
    "restrict_outputs",
    "to_xy_convention",
    "unitary_channel",
    "SIGMA_BASIS",
    "covariance_constraint_residual",
    "equatorial_family_gamma",
    "extract_shrink",
    "fidelity_with_offset",
    "gamma_from_channel",
    "gamma_from_kraus",
    "gamma_from_transfer",
    "kraus_coefficients",
    "predicted_output",
    "shrink_from_gamma",
    "symmetrize_channel",
    "check_phase_covariance",
    "phase_shift",
    "reference_inputs",
]
