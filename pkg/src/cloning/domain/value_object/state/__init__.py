from .pure_state import EquatorConvention, PureState

__all__ = ["EquatorConvention", "PureState"]
