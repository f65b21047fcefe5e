from .phase_estimator import (
    binomial_root_sum,
    canonical_povm,
    log_binomial_root_sum,
    measure_prepare_channel,
    min_nodes,
    outcome_vectors,
    pe_fidelity_closed,
    pe_fidelity_numeric,
    pe_shrink_closed,
    povm_completeness_residual,
    se_shrink,
)

__all__ = [
    "binomial_root_sum",
    "canonical_povm",
    "log_binomial_root_sum",
    "measure_prepare_channel",
    "min_nodes",
    "outcome_vectors",
    "pe_fidelity_closed",
    "pe_fidelity_numeric",
    "pe_shrink_closed",
    "povm_completeness_residual",
    "se_shrink",
]
