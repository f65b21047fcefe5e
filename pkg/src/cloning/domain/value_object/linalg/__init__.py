from .matrix import ComplexMatrix, BlochVector, frozen_array

__all__ = ["ComplexMatrix", "BlochVector", "frozen_array"]
