from .state_factory import (
    XZ_TO_XY,
    basis_state,
    bb84_states,
    dicke_basis,
    dicke_matrix,
    equatorial_state,
    product_copies,
    symmetric_projector,
    symmetric_support_residual,
)

__all__ = [
    "XZ_TO_XY",
    "basis_state",
    "bb84_states",
    "dicke_basis",
    "dicke_matrix",
    "equatorial_state",
    "product_copies",
    "symmetric_projector",
    "symmetric_support_residual",
]
