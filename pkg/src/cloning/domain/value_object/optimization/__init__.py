from .ansatz import AncillaOverlaps, AnsatzCoefficients, LineSearchResult, Optimum, OverlapReport

__all__ = ["AncillaOverlaps", "AnsatzCoefficients", "LineSearchResult", "Optimum", "OverlapReport"]
