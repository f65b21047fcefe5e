"""
少比特稠密复线性代数

张量积、偏迹、共轭转置与 Bloch 矢量转换。纯函数，无副作用。

比特顺序：最左侧张量因子是行下标的最高位（qubit 0 = 最高位）。
Bloch 符号约定：sx = 2·Re ρ₀₁，sy = −2·Im ρ₀₁，sz = 2ρ₀₀ − 1。
"""
from __future__ import annotations

from functools import reduce
import math
from typing import Iterable, Sequence

import numpy as np
import numpy.typing as npt

from ...exceptions import (
    BlochVectorTooLongError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotDensityMatrixError,
)
from ...value_object.linalg.matrix import BlochVector, ComplexMatrix
from ...value_object.state.pure_state import PureState

DEFAULT_TOLERANCE = 1e-12

IDENTITY = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
for _matrix in (IDENTITY, PAULI_X, PAULI_Y, PAULI_Z):
    _matrix.flags.writeable = False


def kron(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    """张量积 a ⊗ b，a 为高位因子"""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def kron_all(factors: Iterable[npt.ArrayLike]) -> ComplexMatrix:
    """从左到右依次张量积"""
    return reduce(kron, factors)


def dagger(matrix: npt.ArrayLike) -> ComplexMatrix:
    """共轭转置"""
    return np.asarray(matrix, dtype=np.complex128).conj().T


def n_qubits_of(dim: int) -> int:
    """维度 → 比特数"""
    n_qubits = int(round(math.log2(dim))) if dim > 0 else -1
    if n_qubits < 0 or 2 ** n_qubits != dim:
        raise DimensionMismatchError("power of two", dim)
    return n_qubits


def validate_density(rho: npt.ArrayLike, tol: float = DEFAULT_TOLERANCE) -> ComplexMatrix:
    """
    校验密度矩阵：厄米、半正定、单位迹。

    Returns:
        complex128 数组
    Raises:
        NotDensityMatrixError
    """
    matrix = np.asarray(rho, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NotDensityMatrixError(f"shape {matrix.shape} is not square")
    hermitian_gap = float(np.max(np.abs(matrix - matrix.conj().T)))
    if hermitian_gap > tol:
        raise NotDensityMatrixError(f"hermiticity residual {hermitian_gap:.3e}")
    trace_gap = abs(complex(np.trace(matrix)) - 1.0)
    if trace_gap > tol:
        raise NotDensityMatrixError(f"trace residual {trace_gap:.3e}")
    min_eigenvalue = float(np.linalg.eigvalsh(0.5 * (matrix + matrix.conj().T))[0])
    if min_eigenvalue < -tol:
        raise NotDensityMatrixError(f"negative eigenvalue {min_eigenvalue:.3e}")
    return matrix


def partial_trace_keep(rho: npt.ArrayLike, n_qubits: int, keep: Sequence[int]) -> ComplexMatrix:
    """
    保留 keep 中的比特（按给定顺序），迹掉其余比特。

    Raises:
        DimensionMismatchError: rho 维度不是 2^n_qubits
        IndexOutOfRangeError: 下标越界
    """
    matrix = np.asarray(rho, dtype=np.complex128)
    dim = 2 ** n_qubits
    if matrix.shape != (dim, dim):
        raise DimensionMismatchError((dim, dim), matrix.shape, "partial trace")
    for index in keep:
        if not 0 <= index < n_qubits:
            raise IndexOutOfRangeError(index, n_qubits)

    keep = list(keep)
    traced = [q for q in range(n_qubits) if q not in keep]
    tensor = matrix.reshape([2] * (2 * n_qubits))
    # 行下标轴 0..n-1，列下标轴 n..2n-1
    row_axes = keep + traced
    col_axes = [n_qubits + q for q in keep] + [n_qubits + q for q in traced]
    tensor = tensor.transpose(row_axes + col_axes)
    k_dim = 2 ** len(keep)
    t_dim = 2 ** len(traced)
    tensor = tensor.reshape(k_dim, t_dim, k_dim, t_dim)
    return np.trace(tensor, axis1=1, axis2=3)


def partial_trace_keep_one(rho: npt.ArrayLike, n_qubits: int, keep: int) -> ComplexMatrix:
    """保留单个比特的 2×2 约化密度矩阵"""
    return partial_trace_keep(rho, n_qubits, [keep])


def bloch_from_density(rho: npt.ArrayLike, tol: float = DEFAULT_TOLERANCE) -> BlochVector:
    """2×2 密度矩阵 → Bloch 矢量"""
    matrix = validate_density(rho, tol)
    if matrix.shape != (2, 2):
        raise NotDensityMatrixError(f"expected 2x2, got {matrix.shape}")
    return BlochVector(
        sx=float(2.0 * matrix[0, 1].real),
        sy=float(-2.0 * matrix[0, 1].imag),
        sz=float(2.0 * matrix[0, 0].real - 1.0),
    )


def density_from_bloch(s: BlochVector, tol: float = DEFAULT_TOLERANCE) -> ComplexMatrix:
    """Bloch 矢量 → ½(I + s·σ)"""
    if s.length > 1.0 + tol:
        raise BlochVectorTooLongError(s.length)
    return 0.5 * (IDENTITY + s.sx * PAULI_X + s.sy * PAULI_Y + s.sz * PAULI_Z)


def fidelity_pure(psi: PureState, rho: npt.ArrayLike) -> float:
    """F = ⟨ψ|ρ|ψ⟩"""
    matrix = np.asarray(rho, dtype=np.complex128)
    if matrix.shape != (psi.dim, psi.dim):
        raise DimensionMismatchError((psi.dim, psi.dim), matrix.shape, "fidelity")
    value = np.vdot(psi.amplitudes, matrix @ psi.amplitudes)
    return float(value.real)


def trace_norm(matrix: npt.ArrayLike) -> float:
    """迹范数 Σ 奇异值"""
    return float(np.sum(np.linalg.svd(np.asarray(matrix, dtype=np.complex128), compute_uv=False)))


def operator_norm(matrix: npt.ArrayLike) -> float:
    """谱范数"""
    return float(np.linalg.norm(np.asarray(matrix, dtype=np.complex128), ord=2))
