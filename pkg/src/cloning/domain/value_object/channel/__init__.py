from .kraus_channel import KrausChannel
from .gamma import GammaMatrix, ShrinkFactors
from .reports import ConcatenationReport, CovarianceReport

__all__ = [
    "KrausChannel",
    "GammaMatrix",
    "ShrinkFactors",
    "ConcatenationReport",
    "CovarianceReport",
]
