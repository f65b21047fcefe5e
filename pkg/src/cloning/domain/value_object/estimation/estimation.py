"""
相位估计相关值对象

定义协变 POVM（均匀节点离散化）与估计结果。
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..linalg.matrix import ComplexMatrix, frozen_array


@dataclass(frozen=True, eq=False)
class CovariantPovm:
    """
    对称子空间上的协变相位 POVM

    结果算符为 weight·|e(φ*)⟩⟨e(φ*)|，|e(φ*)⟩ = Σ_l e^{ilφ*}|D_l⟩。

    Attributes:
        n_copies: 输入拷贝数 N
        seed: 种子矢量 Σ_l |D_l⟩（未归一化，2^N 维）
        nodes: (φ*, weight) 序列
    """
    n_copies: int
    seed: ComplexMatrix = field(repr=False)
    nodes: tuple[tuple[float, float], ...] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "seed", frozen_array(self.seed))
        object.__setattr__(self, "nodes", tuple((float(p), float(w)) for p, w in self.nodes))

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True, eq=False)
class EstimationReport:
    """
    相位估计结果

    Attributes:
        mean_fidelity: 平均保真度 F̄_pe(N)
        shrink: 收缩因子 2F̄ − 1
        reconstructed_state: 重建密度矩阵 ϱ̄_φ（2×2，只读）
        phi: 计算所用的输入相位
    """
    mean_fidelity: float
    shrink: float
    reconstructed_state: ComplexMatrix = field(repr=False)
    phi: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "reconstructed_state", frozen_array(self.reconstructed_state))

    @classmethod
    def from_fidelity(cls, mean_fidelity: float, reconstructed_state: np.ndarray, phi: float = 0.0) -> "EstimationReport":
        return cls(
            mean_fidelity=mean_fidelity,
            shrink=2.0 * mean_fidelity - 1.0,
            reconstructed_state=reconstructed_state,
            phi=phi,
        )
