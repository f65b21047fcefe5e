"""
最优 1→2 相位协变克隆机

对称拟设（二维辅助比特）：
U|0⟩|0⟩|X⟩ = a|00⟩|0⟩ + b(|01⟩+|10⟩)|1⟩ + c|11⟩|0⟩
U|1⟩|0⟩|X⟩ = a|11⟩|1⟩ + b(|10⟩+|01⟩)|0⟩ + c|00⟩|1⟩
输出比特顺序：克隆 1、克隆 2、辅助比特。赤道取在 xz 平面。
"""
from __future__ import annotations

import math

import numpy as np

from ...exceptions import InfeasiblePointError, NormalizationViolatedError
from ...value_object.channel.kraus_channel import KrausChannel
from ...value_object.cloning.cloning import CloneResult
from ...value_object.linalg.matrix import ComplexMatrix
from ...value_object.state.pure_state import EquatorConvention, PureState
from ..channel.channel_algebra import apply_pure, restrict_outputs, to_xy_convention, unitary_channel
from ..linalg.qlinalg import dagger, fidelity_pure, partial_trace_keep_one
from ..state.state_factory import XZ_TO_XY, equatorial_state

NORMALIZATION_TOLERANCE = 1e-10

OPTIMAL_A = 0.5 + math.sqrt(0.125)
OPTIMAL_B = math.sqrt(0.125)
OPTIMAL_C = 0.5 - math.sqrt(0.125)

UNIVERSAL_A = math.sqrt(2.0 / 3.0)
UNIVERSAL_B = math.sqrt(1.0 / 6.0)
UNIVERSAL_C = 0.0

# 基矢下标 = 4·克隆1 + 2·克隆2 + 辅助
_ZERO_COLUMN = {"a": 0b000, "b": (0b011, 0b101), "c": 0b110}
_ONE_COLUMN = {"a": 0b111, "b": (0b100, 0b010), "c": 0b001}


def _check_normalization(a: float, b: float, c: float) -> None:
    residual = a * a + 2.0 * b * b + c * c - 1.0
    if abs(residual) > NORMALIZATION_TOLERANCE:
        raise NormalizationViolatedError(residual)


def ansatz_isometry(a: float, b: float, c: float) -> ComplexMatrix:
    """对称拟设的 8×2 等距矩阵 V，列为 U|0⟩ 与 U|1⟩"""
    _check_normalization(a, b, c)
    isometry = np.zeros((8, 2), dtype=np.complex128)
    for column, layout in enumerate((_ZERO_COLUMN, _ONE_COLUMN)):
        isometry[layout["a"], column] = a
        for index in layout["b"]:
            isometry[index, column] = b
        isometry[layout["c"], column] = c
    return isometry


def ansatz_channel(a: float, b: float, c: float) -> KrausChannel:
    return unitary_channel(ansatz_isometry(a, b, c))


def optimal_12_channel() -> KrausChannel:
    """1 → 3（两克隆 + 辅助比特），xz 坐标系"""
    return ansatz_channel(OPTIMAL_A, OPTIMAL_B, OPTIMAL_C)


def optimal_12_clones_channel(convention: EquatorConvention = EquatorConvention.XZ) -> KrausChannel:
    """迹掉辅助比特的 1 → 2 克隆信道，可选换到 xy 坐标系"""
    clones = restrict_outputs(optimal_12_channel(), [0, 1])
    if EquatorConvention(convention) == EquatorConvention.XY:
        return to_xy_convention(clones)
    return clones


def universal_12_channel() -> KrausChannel:
    """同一拟设下的通用 1→2 克隆机，各向同性收缩 2/3"""
    return ansatz_channel(UNIVERSAL_A, UNIVERSAL_B, UNIVERSAL_C)


def clone(phi: float, convention: EquatorConvention = EquatorConvention.XZ) -> CloneResult:
    """
    对赤道态 ψ_φ 执行最优 1→2 克隆

    XY 约定的输入先旋转到 xz 坐标系，克隆后两份克隆再旋转回来。
    """
    convention = EquatorConvention(convention)
    psi = equatorial_state(phi, convention)
    to_xz = dagger(XZ_TO_XY) if convention == EquatorConvention.XY else np.eye(2, dtype=np.complex128)

    output = apply_pure(optimal_12_channel(), PureState(1, to_xz @ psi.amplitudes))
    clone_a, clone_b, ancilla = (partial_trace_keep_one(output, 3, q) for q in range(3))
    if convention == EquatorConvention.XY:
        clone_a = XZ_TO_XY @ clone_a @ dagger(XZ_TO_XY)
        clone_b = XZ_TO_XY @ clone_b @ dagger(XZ_TO_XY)

    return CloneResult(
        input_phi=phi,
        clone_a=clone_a,
        clone_b=clone_b,
        ancilla=ancilla,
        fidelity=fidelity_pure(psi, clone_a),
    )


def equator_fidelity_closed(alpha: float, a: float, b: float, c: float) -> float:
    """
    xz 赤道输入 α|0⟩+β|1⟩ 的单克隆保真度

    F(α) = (α⁴+β⁴)a² + b² + 2α²β²c² + 4α²β²b(a+c)
    """
    if alpha * alpha > 1.0 + NORMALIZATION_TOLERANCE:
        raise InfeasiblePointError((alpha,), "alpha^2 exceeds 1")
    _check_normalization(a, b, c)
    alpha_sq = min(alpha * alpha, 1.0)
    beta_sq = 1.0 - alpha_sq
    cross = alpha_sq * beta_sq
    return (alpha_sq ** 2 + beta_sq ** 2) * a * a + b * b + 2.0 * cross * c * c + 4.0 * cross * b * (a + c)
