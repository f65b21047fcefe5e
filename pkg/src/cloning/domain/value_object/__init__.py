"""
Value Object Module

领域层值对象定义。

子模块分类:
- linalg/: 复矩阵与 Bloch 矢量
- state/: 纯态与赤道约定
- channel/: Kraus 信道、Γ 矩阵、收缩因子、检验报告
- estimation/: 协变 POVM 与相位估计结果
- cloning/: 界限表行、克隆结果、BB84 报告
- optimization/: 对称拟设系数与优化结果
- config/: 数值配置
"""

from .linalg import BlochVector, ComplexMatrix
from .state import EquatorConvention, PureState
from .channel import ConcatenationReport, CovarianceReport, GammaMatrix, KrausChannel, ShrinkFactors
from .estimation import CovariantPovm, EstimationReport
from .cloning import INFINITY, Bb84Report, Bb84StateRecord, BoundRow, CloneResult
from .optimization import AncillaOverlaps, AnsatzCoefficients, LineSearchResult, Optimum, OverlapReport
from .config import EstimationConfig, OptimizerConfig, ToleranceConfig

__all__ = [
    "BlochVector",
    "ComplexMatrix",
    "EquatorConvention",
    "PureState",
    "ConcatenationReport",
    "CovarianceReport",
    "GammaMatrix",
    "KrausChannel",
    "ShrinkFactors",
    "CovariantPovm",
    "EstimationReport",
    "INFINITY",
    "Bb84Report",
    "Bb84StateRecord",
    "BoundRow",
    "CloneResult",
    "AncillaOverlaps",
    "AnsatzCoefficients",
    "LineSearchResult",
    "Optimum",
    "OverlapReport",
    "EstimationConfig",
    "OptimizerConfig",
    "ToleranceConfig",
]
