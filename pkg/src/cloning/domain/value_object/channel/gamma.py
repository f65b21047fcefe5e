"""
附录 Γ 矩阵与收缩因子值对象

σ 基：σ₀=|0⟩⟨1|, σ₁=|1⟩⟨0|, σ₂=|0⟩⟨0|, σ₃=|1⟩⟨1|，
Γ^{αβ} = Σ_k c_k^α c_k^{β*}。
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ...exceptions import DimensionMismatchError
from ..linalg.matrix import ComplexMatrix, frozen_array

HERMITIAN_TOLERANCE = 1e-12
TRACE_RELATION_TOLERANCE = 1e-10

# 协变条件要求为零的十个元素 (α, β)
COVARIANCE_CONSTRAINED_ENTRIES: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 2), (0, 3),
    (1, 0), (1, 2), (1, 3),
    (2, 0), (2, 1),
    (3, 0), (3, 1),
)


@dataclass(frozen=True, eq=False)
class GammaMatrix:
    """
    σ 基下的 4×4 Γ 矩阵

    Attributes:
        gamma: Γ^{αβ}，α, β ∈ {0,1,2,3}（只读）
    """
    gamma: ComplexMatrix = field(repr=False)

    def __post_init__(self) -> None:
        gamma = frozen_array(self.gamma)
        if gamma.shape != (4, 4):
            raise DimensionMismatchError((4, 4), gamma.shape, "GammaMatrix")
        object.__setattr__(self, "gamma", gamma)

    def __getitem__(self, index: tuple[int, int]) -> complex:
        return complex(self.gamma[index])

    def hermiticity_residual(self) -> float:
        return float(np.max(np.abs(self.gamma - self.gamma.conj().T)))

    def trace_relation_residual(self) -> float:
        """|Γ^{11} − (1 − Γ^{22})| 与 |Γ^{00} − (1 − Γ^{33})| 的较大者"""
        g = self.gamma
        return float(max(abs(g[1, 1] - (1.0 - g[2, 2])), abs(g[0, 0] - (1.0 - g[3, 3]))))

    def is_valid(self) -> bool:
        diagonal = np.diag(self.gamma)
        return (
            self.hermiticity_residual() <= HERMITIAN_TOLERANCE
            and bool(np.all(np.abs(diagonal.imag) <= HERMITIAN_TOLERANCE))
            and bool(np.all(diagonal.real >= -HERMITIAN_TOLERANCE))
            and bool(np.all(diagonal.real <= 1.0 + HERMITIAN_TOLERANCE))
            and self.trace_relation_residual() <= TRACE_RELATION_TOLERANCE
        )


@dataclass(frozen=True)
class ShrinkFactors:
    """
    相位协变单比特映射的收缩因子

    Attributes:
        eta_xy: 赤道面收缩 |Γ^{32}|
        eta_z: 轴向收缩 Γ^{33}+Γ^{22}−1
        phi_rot: 旋转偏移 arg Γ^{32}
        z_offset: Γ^{22}−Γ^{33}
    """
    eta_xy: float
    eta_z: float
    phi_rot: float = 0.0
    z_offset: float = 0.0

    @property
    def equatorial_fidelity(self) -> float:
        """赤道输入的保真度 ½(1 + η_xy cos φ_rot)"""
        return 0.5 * (1.0 + self.eta_xy * float(np.cos(self.phi_rot)))
