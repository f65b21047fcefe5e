"""
对称拟设相关值对象

U|0⟩|0⟩|X⟩ = a|00⟩|A⟩ + b(|01⟩+|10⟩)|B⟩ + c|11⟩|C⟩
U|1⟩|0⟩|X⟩ = a|11⟩|Ã⟩ + b(|10⟩+|01⟩)|B̃⟩ + c|00⟩|C̃⟩
辅助态只通过内积进入保真度与幺正条件。
"""
from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np
import numpy.typing as npt

from ...exceptions import InfeasiblePointError, NormalizationViolatedError

NORMALIZATION_TOLERANCE = 1e-8
OVERLAP_TOLERANCE = 1e-12
UNITARITY_TOLERANCE = 1e-10


def _inner(bra: npt.ArrayLike, ket: npt.ArrayLike) -> complex:
    return complex(np.vdot(np.asarray(bra, dtype=np.complex128), np.asarray(ket, dtype=np.complex128)))


@dataclass(frozen=True)
class AncillaOverlaps:
    """
    辅助态内积

    字段名 x_y 表示 ⟨x|y⟩，带 t 后缀的为波浪号态（如 at_b = ⟨Ã|B⟩）。
    """
    at_b: complex
    bt_a: complex
    bt_c: complex
    ct_b: complex
    at_bt: complex
    b_a: complex
    bt_ct: complex
    c_b: complex
    ct_a: complex
    bt_b: complex
    at_c: complex

    def __post_init__(self) -> None:
        for item in fields(self):
            value = complex(getattr(self, item.name))
            if abs(value.real) > 1.0 + OVERLAP_TOLERANCE:
                raise InfeasiblePointError((value.real, value.imag), f"Re {item.name} outside [-1, 1]")

    @classmethod
    def from_ancillas(
        cls,
        a: npt.ArrayLike,
        b: npt.ArrayLike,
        c: npt.ArrayLike,
        a_tilde: npt.ArrayLike,
        b_tilde: npt.ArrayLike,
        c_tilde: npt.ArrayLike,
    ) -> "AncillaOverlaps":
        """由六个辅助态矢量计算全部内积"""
        return cls(
            at_b=_inner(a_tilde, b),
            bt_a=_inner(b_tilde, a),
            bt_c=_inner(b_tilde, c),
            ct_b=_inner(c_tilde, b),
            at_bt=_inner(a_tilde, b_tilde),
            b_a=_inner(b, a),
            bt_ct=_inner(b_tilde, c_tilde),
            c_b=_inner(c, b),
            ct_a=_inner(c_tilde, a),
            bt_b=_inner(b_tilde, b),
            at_c=_inner(a_tilde, c),
        )

    @classmethod
    def two_level(cls) -> "AncillaOverlaps":
        """二维辅助比特的实现：|A⟩=|C⟩=|B̃⟩=|0⟩，|B⟩=|Ã⟩=|C̃⟩=|1⟩"""
        zero, one = (1.0, 0.0), (0.0, 1.0)
        return cls.from_ancillas(zero, one, zero, one, zero, one)

    def fidelity_overlap_sums(self) -> tuple[float, float]:
        """Re[⟨Ã|B⟩+⟨B̃|A⟩] 与 Re[⟨B̃|C⟩+⟨C̃|B⟩]"""
        return (self.at_b + self.bt_a).real, (self.bt_c + self.ct_b).real

    def zero_condition_sums(self) -> tuple[float, float]:
        """Re[⟨Ã|B̃⟩+⟨B|A⟩] 与 Re[⟨B̃|C̃⟩+⟨C|B⟩]"""
        return (self.at_bt + self.b_a).real, (self.bt_ct + self.c_b).real


@dataclass(frozen=True)
class AnsatzCoefficients:
    """
    对称拟设系数

    Attributes:
        a, b, c: 非负实振幅
        overlaps: 辅助态内积
    """
    a: float
    b: float
    c: float
    overlaps: AncillaOverlaps

    def __post_init__(self) -> None:
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) < -NORMALIZATION_TOLERANCE:
            raise InfeasiblePointError((a, b, c), "negative amplitude")
        if abs(self.normalization_residual) > NORMALIZATION_TOLERANCE:
            raise NormalizationViolatedError(self.normalization_residual)
        cross = abs(self.unitarity_cross_term)
        if cross > UNITARITY_TOLERANCE:
            raise InfeasiblePointError((a, b, c), f"unitarity cross term {cross:.3e} != 0")

    @property
    def normalization_residual(self) -> float:
        return self.a ** 2 + 2.0 * self.b ** 2 + self.c ** 2 - 1.0

    @property
    def unitarity_cross_term(self) -> complex:
        """ac⟨C̃|A⟩ + 2b²⟨B̃|B⟩ + ac⟨Ã|C⟩，幺正要求为零"""
        ov = self.overlaps
        return self.a * self.c * ov.ct_a + 2.0 * self.b ** 2 * ov.bt_b + self.a * self.c * ov.at_c

    def as_tuple(self) -> tuple[float, float, float]:
        return self.a, self.b, self.c


@dataclass(frozen=True)
class Optimum:
    """
    数值优化结果

    Attributes:
        coeffs: 最优系数
        fidelity: 最优保真度
        theta: 可行弧上的最优角
        iterations: 目标函数调用次数
        converged: 是否收敛
    """
    coeffs: AnsatzCoefficients
    fidelity: float
    theta: float
    iterations: int
    converged: bool


@dataclass(frozen=True)
class OverlapReport:
    """
    辅助态实现下的约束检验

    Attributes:
        eq23_residual: 归一化与幺正交叉项残差的较大者
        eq25_value: 由内积给出的保真度
        eq25_residual: |eq25_value − ½(1+2b(a+c))|
        eq26_residual: 零条件残差
        fidelity_gap: |eq25_value − (a²+b²)|
    """
    eq23_residual: float
    eq25_value: float
    eq25_residual: float
    eq26_residual: float
    fidelity_gap: float


@dataclass(frozen=True)
class LineSearchResult:
    """
    一维极大化结果

    Attributes:
        argmax: 极大点
        maximum: 极大值
        evaluations: 本次搜索的目标函数调用次数
        converged: 区间是否收缩到容差以内
    """
    argmax: float
    maximum: float
    evaluations: int
    converged: bool
