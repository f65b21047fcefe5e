from .numerics_config import EstimationConfig, OptimizerConfig, ToleranceConfig

__all__ = ["EstimationConfig", "OptimizerConfig", "ToleranceConfig"]
