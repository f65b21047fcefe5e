"""
克隆相关值对象

定义界限表行、1→2 克隆结果与 BB84 扰动报告。
"""
from __future__ import annotations

from dataclasses import dataclass, field
import math
from typing import Union

from ..linalg.matrix import ComplexMatrix, frozen_array

# M → ∞ 标记
INFINITY = math.inf

OutputCount = Union[int, float]


@dataclass(frozen=True)
class BoundRow:
    """
    相位协变克隆界限表的一行

    Attributes:
        n_in: 输入拷贝数 N
        m_out: 输出拷贝数 M（可为 INFINITY）
        eta_bound: 收缩因子上界 η̃_pcc(N,M)
        f_pcc_bound: 保真度上界 (1+η̃)/2
        f_universal: 通用克隆最优保真度
    """
    n_in: int
    m_out: OutputCount
    eta_bound: float
    f_pcc_bound: float
    f_universal: float

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.m_out)


@dataclass(frozen=True, eq=False)
class CloneResult:
    """
    1→2 克隆输出

    Attributes:
        input_phi: 输入相位
        clone_a: 第一个克隆的约化密度矩阵
        clone_b: 第二个克隆的约化密度矩阵
        ancilla: 辅助比特的约化密度矩阵
        fidelity: ⟨ψ|clone_a|ψ⟩
    """
    input_phi: float
    clone_a: ComplexMatrix = field(repr=False)
    clone_b: ComplexMatrix = field(repr=False)
    ancilla: ComplexMatrix = field(repr=False)
    fidelity: float = 0.0

    def __post_init__(self) -> None:
        for name in ("clone_a", "clone_b", "ancilla"):
            object.__setattr__(self, name, frozen_array(getattr(self, name)))


@dataclass(frozen=True)
class Bb84StateRecord:
    """单个 BB84 态在对称克隆攻击下的结果"""
    label: str
    bob_fidelity: float
    eve_fidelity: float
    error_rate: float


@dataclass(frozen=True)
class Bb84Report:
    """
    BB84 扰动报告

    Attributes:
        fidelity: 最优 1→2 克隆保真度
        disturbance: D = 1 − F
        mutual_info_ab: Alice–Bob 互信息 1 − h₂(D)（比特）
        states: 四个 BB84 态的模拟结果
    """
    fidelity: float
    disturbance: float
    mutual_info_ab: float
    states: tuple[Bb84StateRecord, ...] = ()
