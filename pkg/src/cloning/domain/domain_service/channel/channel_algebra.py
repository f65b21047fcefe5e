"""
Kraus 信道代数

构造、作用、复合、输出约化、单比特有效映射与坐标系旋转。纯函数。
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np
import numpy.typing as npt

from ...exceptions import DimensionMismatchError, IndexOutOfRangeError, NotCompletelyPositiveError
from ...value_object.channel.kraus_channel import KrausChannel
from ...value_object.linalg.matrix import ComplexMatrix
from ...value_object.state.pure_state import PureState
from ..linalg.qlinalg import IDENTITY, PAULI_X, PAULI_Y, PAULI_Z, dagger, kron_all, n_qubits_of, partial_trace_keep_one
from ..state.state_factory import XZ_TO_XY, product_copies

# 线性延拓所用的输入态：|0⟩, |1⟩, |+⟩, |+i⟩
_SQRT_HALF = math.sqrt(0.5)
_BASIS_INPUTS: tuple[PureState, ...] = (
    PureState(1, np.array([1.0, 0.0], dtype=np.complex128)),
    PureState(1, np.array([0.0, 1.0], dtype=np.complex128)),
    PureState(1, np.array([_SQRT_HALF, _SQRT_HALF], dtype=np.complex128)),
    PureState(1, np.array([_SQRT_HALF, 1j * _SQRT_HALF], dtype=np.complex128)),
)
CP_TOLERANCE = 1e-10


def make_channel(in_qubits: int, out_qubits: int, kraus_ops: Sequence[npt.ArrayLike]) -> KrausChannel:
    """构造并校验 Kraus 信道"""
    return KrausChannel(in_qubits=in_qubits, out_qubits=out_qubits, kraus_ops=tuple(kraus_ops))


def identity_channel(n_qubits: int = 1) -> KrausChannel:
    return make_channel(n_qubits, n_qubits, [np.eye(2 ** n_qubits, dtype=np.complex128)])


def unitary_channel(unitary: npt.ArrayLike) -> KrausChannel:
    """单个幺正（或等距）算符构成的信道"""
    matrix = np.asarray(unitary, dtype=np.complex128)
    return make_channel(n_qubits_of(matrix.shape[1]), n_qubits_of(matrix.shape[0]), [matrix])


def _check_input(ch: KrausChannel, rho: np.ndarray) -> None:
    if rho.shape != (ch.in_dim, ch.in_dim):
        raise DimensionMismatchError((ch.in_dim, ch.in_dim), rho.shape, "channel input")


def apply(ch: KrausChannel, rho: npt.ArrayLike) -> ComplexMatrix:
    """Σ_k A_k ρ A_k†（对任意算符线性作用）"""
    matrix = np.asarray(rho, dtype=np.complex128)
    _check_input(ch, matrix)
    kraus = ch.stacked
    left = np.einsum("kij,jl->kil", kraus, matrix)
    return np.einsum("kil,kml->im", left, kraus.conj())


def apply_pure(ch: KrausChannel, psi: PureState) -> ComplexMatrix:
    """纯态输入的快速作用 Σ_k |A_kψ⟩⟨A_kψ|"""
    if psi.dim != ch.in_dim:
        raise DimensionMismatchError(ch.in_dim, psi.dim, "channel input")
    images = ch.stacked @ psi.amplitudes
    return np.einsum("ki,kj->ij", images, images.conj())


def compose(first: KrausChannel, second: KrausChannel) -> KrausChannel:
    """先 first 后 second，Kraus 集合 {B_j A_k}"""
    if first.out_qubits != second.in_qubits:
        raise DimensionMismatchError(second.in_qubits, first.out_qubits, "compose")
    products = [b @ a for b in second.kraus_ops for a in first.kraus_ops]
    return make_channel(first.in_qubits, second.out_qubits, products)


def restrict_outputs(ch: KrausChannel, keep: Sequence[int]) -> KrausChannel:
    """
    信道后接偏迹，只保留 keep 中的输出比特。

    Kraus 算符为 (I_keep ⊗ ⟨e|_rest) A_k，e 遍历被迹掉比特的计算基。
    """
    keep = list(keep)
    n_out = ch.out_qubits
    for index in keep:
        if not 0 <= index < n_out:
            raise IndexOutOfRangeError(index, n_out)
    traced = [q for q in range(n_out) if q not in keep]
    k_dim, t_dim = 2 ** len(keep), 2 ** len(traced)

    kraus = ch.stacked.reshape([len(ch)] + [2] * n_out + [ch.in_dim])
    axes = [0] + [1 + q for q in keep] + [1 + q for q in traced] + [1 + n_out]
    kraus = kraus.transpose(axes).reshape(len(ch), k_dim, t_dim, ch.in_dim)
    ops = [kraus[k, :, t, :] for k in range(len(ch)) for t in range(t_dim)]
    ops = [op for op in ops if np.any(np.abs(op) > 0.0)]
    return make_channel(ch.in_qubits, len(keep), ops)


def effective_transfer(ch: KrausChannel, keep: int = 0) -> np.ndarray:
    """
    单比特有效映射 ρ₁ ↦ R[T(ρ₁^{⊗N})] 的线性延拓。

    由输入态 |0⟩,|1⟩,|+⟩,|+i⟩ 的 N 拷贝输出确定，
    返回 (2, 2, 2, 2) 数组，transfer[j, j'] = Φ(|j⟩⟨j'|)。
    """
    outputs = [
        partial_trace_keep_one(apply_pure(ch, product_copies(psi, ch.in_qubits)), ch.out_qubits, keep)
        for psi in _BASIS_INPUTS
    ]
    out_0, out_1, out_plus, out_plus_i = outputs
    real_part = 2.0 * out_plus - out_0 - out_1  # Φ(E01 + E10)
    imag_part = 2.0 * out_plus_i - out_0 - out_1  # Φ(−iE01 + iE10)
    transfer = np.zeros((2, 2, 2, 2), dtype=np.complex128)
    transfer[0, 0] = out_0
    transfer[1, 1] = out_1
    transfer[0, 1] = 0.5 * (real_part + 1j * imag_part)
    transfer[1, 0] = 0.5 * (real_part - 1j * imag_part)
    return transfer


def choi_matrix(transfer: np.ndarray) -> ComplexMatrix:
    """Σ_{jj'} |j⟩⟨j'| ⊗ Φ(|j⟩⟨j'|)"""
    choi = np.zeros((4, 4), dtype=np.complex128)
    for j in range(2):
        for jp in range(2):
            choi[2 * j:2 * j + 2, 2 * jp:2 * jp + 2] = transfer[j, jp]
    return choi


def kraus_from_transfer(transfer: np.ndarray, tol: float = CP_TOLERANCE) -> KrausChannel:
    """Choi 矩阵谱分解得到 Kraus 算符，A_k[i, j] = √λ_k v_k[2j + i]"""
    choi = choi_matrix(transfer)
    eigenvalues, eigenvectors = np.linalg.eigh(0.5 * (choi + choi.conj().T))
    if eigenvalues[0] < -tol:
        raise NotCompletelyPositiveError(float(eigenvalues[0]))
    ops = [
        math.sqrt(value) * eigenvectors[:, k].reshape(2, 2).T
        for k, value in enumerate(eigenvalues)
        if value > tol
    ]
    return make_channel(1, 1, ops)


def reduced_single_qubit_map(ch: KrausChannel, n_in: int, keep: int = 0) -> KrausChannel:
    """
    单输出比特的有效映射 ρ₁ ↦ R[T(ρ₁ 的 N 拷贝)]。

    N=1 时精确给出 Kraus 算符；N>1 时取上述输入态上的线性延拓，
    仅当延拓为完全正映射时才能表示为 Kraus 信道。
    """
    if n_in != ch.in_qubits:
        raise DimensionMismatchError(ch.in_qubits, n_in, "reduced_single_qubit_map")
    if n_in == 1:
        return restrict_outputs(ch, [keep])
    return kraus_from_transfer(effective_transfer(ch, keep))


def conjugate_channel(ch: KrausChannel, single_qubit_unitary: npt.ArrayLike) -> KrausChannel:
    """A ↦ W^{⊗M} A W^{†⊗N}"""
    w = np.asarray(single_qubit_unitary, dtype=np.complex128)
    w_out = kron_all([w] * ch.out_qubits)
    w_in_dag = dagger(kron_all([w] * ch.in_qubits))
    return make_channel(ch.in_qubits, ch.out_qubits, [w_out @ op @ w_in_dag for op in ch.kraus_ops])


def to_xy_convention(ch: KrausChannel) -> KrausChannel:
    """把 xz 赤道上协变的信道变换到 xy 赤道坐标系"""
    return conjugate_channel(ch, XZ_TO_XY)


def pauli_channel(weights: Sequence[float]) -> KrausChannel:
    """Σ p_i σ_i ρ σ_i，weights 依次对应 I, X, Y, Z"""
    paulis = (IDENTITY, PAULI_X, PAULI_Y, PAULI_Z)
    ops = [math.sqrt(p) * sigma for p, sigma in zip(weights, paulis) if p > 0.0]
    return make_channel(1, 1, ops)
