"""
附录 Γ 矩阵分析

Kraus 算符在 σ 基下展开，A_k = Σ_α c_k^α σ_α，
Γ^{αβ} = Σ_k c_k^α c_k^{β*}；相位协变要求十个非对角元为零，
此时约化输出完全由 Γ^{22}, Γ^{33}, Γ^{32} 决定。
"""
from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt

from ...exceptions import DimensionMismatchError, NotPhaseCovariantError
from ...value_object.channel.gamma import COVARIANCE_CONSTRAINED_ENTRIES, GammaMatrix, ShrinkFactors
from ...value_object.channel.kraus_channel import KrausChannel
from ...value_object.linalg.matrix import ComplexMatrix, frozen_array
from ...value_object.state.pure_state import PureState
from ..linalg.qlinalg import PAULI_X, partial_trace_keep_one
from ..state.state_factory import basis_state, equatorial_state, product_copies
from .channel_algebra import apply_pure, make_channel, restrict_outputs
from .covariance_checker import check_phase_covariance

SHRINK_TOLERANCE = 1e-8
# N>1 时读取 Γ^{23} 的赤道相位数与协变检验的 χ 采样数
EQUATOR_SAMPLES = 8
COVARIANCE_SAMPLES = 16

# σ_α = |i_α⟩⟨j_α|
SIGMA_INDICES: tuple[tuple[int, int], ...] = ((0, 1), (1, 0), (0, 0), (1, 1))


def _build_sigma_basis() -> np.ndarray:
    basis = np.zeros((4, 2, 2), dtype=np.complex128)
    for alpha, (i, j) in enumerate(SIGMA_INDICES):
        basis[alpha, i, j] = 1.0
    return frozen_array(basis)


SIGMA_BASIS = _build_sigma_basis()
# Hilbert–Schmidt Gram 矩阵 G_{αβ} = Tr(σ_α† σ_β)
SIGMA_GRAM = frozen_array(np.einsum("aij,bij->ab", SIGMA_BASIS.conj(), SIGMA_BASIS))


def kraus_coefficients(ch: KrausChannel) -> ComplexMatrix:
    """
    展开系数 c_k^α，返回 (k, 4) 数组。

    由 t_k^β = Tr(σ_β† A_k) 解 G c_k = t_k 得到。
    """
    if ch.in_qubits != 1 or ch.out_qubits != 1:
        raise DimensionMismatchError("1 -> 1", f"{ch.in_qubits} -> {ch.out_qubits}", "kraus_coefficients")
    projections = np.einsum("bij,kij->kb", SIGMA_BASIS.conj(), ch.stacked)
    return np.linalg.solve(SIGMA_GRAM, projections.T).T


def gamma_from_kraus(ch: KrausChannel) -> GammaMatrix:
    coefficients = kraus_coefficients(ch)
    return GammaMatrix(np.einsum("ka,kb->ab", coefficients, coefficients.conj()))


def gamma_from_transfer(transfer: npt.ArrayLike) -> GammaMatrix:
    """
    由线性映射直接读出 Γ

    transfer[j, j'] = Φ(|j⟩⟨j'|)，Γ^{αβ} = ⟨i_α|Φ(|j_α⟩⟨j_β|)|i_β⟩。
    不需要 Kraus 分解，适用于 N>1 的线性延拓。
    """
    transfer = np.asarray(transfer, dtype=np.complex128)
    if transfer.shape != (2, 2, 2, 2):
        raise DimensionMismatchError((2, 2, 2, 2), transfer.shape, "gamma_from_transfer")
    gamma = np.zeros((4, 4), dtype=np.complex128)
    for alpha, (i_a, j_a) in enumerate(SIGMA_INDICES):
        for beta, (i_b, j_b) in enumerate(SIGMA_INDICES):
            gamma[alpha, beta] = transfer[j_a, j_b][i_a, i_b]
    return GammaMatrix(gamma)


def _copies_output(ch: KrausChannel, keep: int, psi: PureState) -> ComplexMatrix:
    return partial_trace_keep_one(apply_pure(ch, product_copies(psi, ch.in_qubits)), ch.out_qubits, keep)


def equatorial_family_gamma(ch: KrausChannel, keep: int = 0) -> GammaMatrix:
    """
    N>1 信道在两极与赤道族上的 Γ

    对角元取自 |0⟩^{⊗N}、|1⟩^{⊗N} 的输出，Γ^{23} 为赤道输出
    2·ρ₀₁(φ)·e^{iφ} 的相位平均；十个受约束元素置零，赤道输出的对角元不参与。
    """
    out_0 = _copies_output(ch, keep, basis_state("0"))
    out_1 = _copies_output(ch, keep, basis_state("1"))
    phases = 2.0 * math.pi * np.arange(EQUATOR_SAMPLES) / EQUATOR_SAMPLES
    g23 = np.mean([2.0 * _copies_output(ch, keep, equatorial_state(phi))[0, 1] * np.exp(1j * phi) for phi in phases])

    gamma = np.zeros((4, 4), dtype=np.complex128)
    gamma[2, 2], gamma[1, 1] = out_0[0, 0].real, out_0[1, 1].real
    gamma[0, 0], gamma[3, 3] = out_1[0, 0].real, out_1[1, 1].real
    gamma[2, 3], gamma[3, 2] = g23, np.conj(g23)
    return GammaMatrix(gamma)


def gamma_from_channel(ch: KrausChannel, keep: int = 0) -> GammaMatrix:
    """任意 N→M 信道第 keep 个输出比特的 Γ 矩阵（N>1 见 equatorial_family_gamma）"""
    if ch.in_qubits == 1:
        return gamma_from_kraus(restrict_outputs(ch, [keep]))
    return equatorial_family_gamma(ch, keep)


def covariance_constraint_residual(g: GammaMatrix) -> float:
    return max(abs(g[entry]) for entry in COVARIANCE_CONSTRAINED_ENTRIES)


def shrink_from_gamma(g: GammaMatrix, tol: float = SHRINK_TOLERANCE) -> ShrinkFactors:
    residual = covariance_constraint_residual(g)
    if residual > tol:
        raise NotPhaseCovariantError(residual, tol)
    g22, g33, g32 = g[2, 2].real, g[3, 3].real, g[3, 2]
    return ShrinkFactors(
        eta_xy=abs(g32),
        eta_z=g33 + g22 - 1.0,
        phi_rot=math.atan2(g32.imag, g32.real),
        z_offset=g22 - g33,
    )


def extract_shrink(ch: KrausChannel, keep: int = 0, tol: float = SHRINK_TOLERANCE) -> ShrinkFactors:
    """
    N→M 信道第 keep 个输出比特的收缩因子（xy 赤道坐标系）

    N=1 由 Γ 的十个约束元素判定协变；N>1 由该输出比特的 check_phase_covariance 判定。

    Raises:
        NotPhaseCovariantError
    """
    if ch.in_qubits > 1:
        report = check_phase_covariance(restrict_outputs(ch, [keep]), n_samples=COVARIANCE_SAMPLES, tol=tol)
        if not report.passed:
            raise NotPhaseCovariantError(report.max_residual, tol)
    return shrink_from_gamma(gamma_from_channel(ch, keep), tol)


def predicted_output(g: GammaMatrix, rho: npt.ArrayLike) -> ComplexMatrix:
    """
    协变映射的约化输出矩阵形式

    ρ = [[δ, γ], [γ*, 1−δ]] ↦
    [[Γ^{22}δ + Γ^{00}(1−δ), Γ^{23}γ], [Γ^{32}γ*, Γ^{11}δ + Γ^{33}(1−δ)]]
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (2, 2):
        raise DimensionMismatchError((2, 2), rho.shape, "predicted_output")
    delta, gamma_01 = rho[0, 0], rho[0, 1]
    out = np.empty((2, 2), dtype=np.complex128)
    out[0, 0] = g[2, 2] * delta + g[0, 0] * rho[1, 1]
    out[1, 1] = g[1, 1] * delta + g[3, 3] * rho[1, 1]
    out[0, 1] = g[2, 3] * gamma_01
    out[1, 0] = g[3, 2] * rho[1, 0]
    return out


def fidelity_with_offset(shrink: ShrinkFactors) -> float:
    """赤道输入保真度 ½(1 + η_xy cos φ_rot)"""
    return shrink.equatorial_fidelity


def symmetrize_channel(ch: KrausChannel) -> KrausChannel:
    """
    T_s = ½(T + T̂)，T̂ 为输入输出都经 σ_x 共轭的映射。

    T̂ 的 Γ 由 σ₂↔σ₃、σ₀↔σ₁ 互换得到，故 T_s 满足 Γ^{22}=Γ^{33}；
    η_xy 变为 η_xy·cos φ_rot，φ_rot = 0 时不变。
    """
    if ch.in_qubits != 1 or ch.out_qubits != 1:
        raise DimensionMismatchError("1 -> 1", f"{ch.in_qubits} -> {ch.out_qubits}", "symmetrize_channel")
    half = math.sqrt(0.5)
    ops = [half * op for op in ch.kraus_ops] + [half * (PAULI_X @ op @ PAULI_X) for op in ch.kraus_ops]
    return make_channel(1, 1, ops)
