from .qlinalg import (
    IDENTITY,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    bloch_from_density,
    dagger,
    density_from_bloch,
    fidelity_pure,
    kron,
    kron_all,
    n_qubits_of,
    operator_norm,
    partial_trace_keep,
    partial_trace_keep_one,
    trace_norm,
    validate_density,
)

__all__ = [
    "IDENTITY",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "bloch_from_density",
    "dagger",
    "density_from_bloch",
    "fidelity_pure",
    "kron",
    "kron_all",
    "n_qubits_of",
    "operator_norm",
    "partial_trace_keep",
    "partial_trace_keep_one",
    "trace_norm",
    "validate_density",
]
