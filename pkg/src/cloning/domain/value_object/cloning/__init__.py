from .cloning import (
    INFINITY,
    Bb84Report,
    Bb84StateRecord,
    BoundRow,
    CloneResult,
    OutputCount,
)

__all__ = [
    "INFINITY",
    "Bb84Report",
    "Bb84StateRecord",
    "BoundRow",
    "CloneResult",
    "OutputCount",
]
