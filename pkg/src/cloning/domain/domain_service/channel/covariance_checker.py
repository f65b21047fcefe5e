"""
相位协变检验

比较 U_χ ρ_q U_χ† 与旋转输入后第 q 个输出比特的约化态，
χ 与输入态都取确定性网格。
"""
from __future__ import annotations

import logging
import math

import numpy as np

from ...value_object.channel.kraus_channel import KrausChannel
from ...value_object.channel.reports import CovarianceReport
from ...value_object.linalg.matrix import ComplexMatrix
from ...value_object.state.pure_state import EquatorConvention, PureState
from ..linalg.qlinalg import dagger, operator_norm, partial_trace_keep_one
from ..state.state_factory import XZ_TO_XY, product_copies
from .channel_algebra import apply_pure

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 64
DEFAULT_TOLERANCE = 1e-10

# 输入网格：赤道上 8 个相位，加上两极与两个非赤道纬度
_EQUATOR_PHASES = tuple(2.0 * math.pi * k / 8 for k in range(8))
_POLAR_ANGLES = (0.0, math.pi / 3.0, 2.0 * math.pi / 3.0, math.pi)
_OFF_EQUATOR_PHASES = (0.0, 1.0, 2.5, 4.0)


def phase_shift(chi: float, convention: EquatorConvention = EquatorConvention.XY) -> ComplexMatrix:
    """
    绕赤道轴的相移 U_χ

    XY 约定为 diag(1, e^{iχ})；XZ 约定为其在 xz 坐标系下的对应 W† U_χ W。
    """
    u_chi = np.diag([1.0, np.exp(1j * chi)]).astype(np.complex128)
    if EquatorConvention(convention) == EquatorConvention.XY:
        return u_chi
    return dagger(XZ_TO_XY) @ u_chi @ XZ_TO_XY


def reference_inputs(convention: EquatorConvention = EquatorConvention.XY) -> tuple[PureState, ...]:
    """检验所用的单比特输入态（在 XY 坐标系构造后按约定旋转）"""
    states = []
    for phi in _EQUATOR_PHASES:
        states.append(np.array([1.0, np.exp(1j * phi)]) / math.sqrt(2.0))
    for theta in _POLAR_ANGLES:
        for phi in _OFF_EQUATOR_PHASES:
            states.append(np.array([math.cos(theta / 2.0), np.exp(1j * phi) * math.sin(theta / 2.0)]))
            if theta in (0.0, math.pi):
                break
    to_frame = np.eye(2) if EquatorConvention(convention) == EquatorConvention.XY else dagger(XZ_TO_XY)
    return tuple(PureState.from_amplitudes(to_frame @ amplitudes, normalize=True) for amplitudes in states)


def check_phase_covariance(
    ch: KrausChannel,
    n_samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOLERANCE,
    convention: EquatorConvention = EquatorConvention.XY,
) -> CovarianceReport:
    """
    对全部输出比特检验 U_χ ρ_q U_χ† = R_q[T(U_χ^{⊗N} ρ U_χ^{†⊗N})]

    残差为算符范数差在所有 χ、输入态与输出比特上的最大值。
    """
    n_in, n_out = ch.in_qubits, ch.out_qubits
    inputs = reference_inputs(convention)
    reference = [
        [partial_trace_keep_one(apply_pure(ch, product_copies(psi, n_in)), n_out, q) for q in range(n_out)]
        for psi in inputs
    ]

    max_residual = 0.0
    for k in range(n_samples):
        u_chi = phase_shift(2.0 * math.pi * k / n_samples, convention)
        for psi, reduced in zip(inputs, reference):
            rotated = PureState(1, u_chi @ psi.amplitudes)
            output = apply_pure(ch, product_copies(rotated, n_in))
            for q in range(n_out):
                expected = u_chi @ reduced[q] @ dagger(u_chi)
                residual = operator_norm(expected - partial_trace_keep_one(output, n_out, q))
                max_residual = max(max_residual, residual)

    passed = max_residual <= tol
    logger.debug(
        "covariance check %d->%d: max_residual=%.3e, samples=%d, passed=%s",
        n_in, n_out, max_residual, n_samples, passed,
    )
    return CovarianceReport(max_residual=max_residual, passed=passed, tolerance=tol, n_samples=n_samples)
