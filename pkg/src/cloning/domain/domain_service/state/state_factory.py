"""
量子态构造

赤道态、BB84 态、N 拷贝直积态与对称（Dicke）子空间基。
"""
from __future__ import annotations

from functools import lru_cache
import math

import numpy as np
import numpy.typing as npt

from ...exceptions import DimensionMismatchError, InvalidCopiesError
from ...value_object.linalg.matrix import ComplexMatrix, frozen_array
from ...value_object.state.pure_state import EquatorConvention, PureState
from ..linalg.qlinalg import IDENTITY, PAULI_X, PAULI_Y, PAULI_Z, kron_all, trace_norm

_SQRT_HALF = math.sqrt(0.5)

# 绕 (1,1,1)/√3 旋转 2π/3：x→y→z→x，把 xz 赤道上角度 φ 的态映为 xy 赤道上同一 φ 的态
XZ_TO_XY: ComplexMatrix = frozen_array(0.5 * IDENTITY - 0.5j * (PAULI_X + PAULI_Y + PAULI_Z))


def basis_state(bits: str) -> PureState:
    """计算基态，如 basis_state("01") = |01⟩"""
    amplitudes = np.zeros(2 ** len(bits), dtype=np.complex128)
    amplitudes[int(bits, 2)] = 1.0
    return PureState(n_qubits=len(bits), amplitudes=amplitudes)


def equatorial_state(phi: float, convention: EquatorConvention = EquatorConvention.XY) -> PureState:
    """
    赤道态

    XY: (|0⟩ + e^{iφ}|1⟩)/√2，Bloch 矢量 (cos φ, sin φ, 0)
    XZ: cos(φ/2)|0⟩ + sin(φ/2)|1⟩，φ 为自 +z 向 +x 的 Bloch 角
    """
    phi = math.fmod(phi, 2.0 * math.pi)
    if phi < 0:
        phi += 2.0 * math.pi
    if EquatorConvention(convention) == EquatorConvention.XY:
        amplitudes = [_SQRT_HALF, _SQRT_HALF * np.exp(1j * phi)]
    else:
        amplitudes = [math.cos(phi / 2.0), math.sin(phi / 2.0)]
    return PureState(n_qubits=1, amplitudes=np.array(amplitudes, dtype=np.complex128))


def bb84_states() -> tuple[PureState, PureState, PureState, PureState]:
    """|0⟩, |1⟩, |0̄⟩ = (|0⟩+|1⟩)/√2, |1̄⟩ = (|0⟩−|1⟩)/√2"""
    return (
        basis_state("0"),
        basis_state("1"),
        PureState(1, np.array([_SQRT_HALF, _SQRT_HALF], dtype=np.complex128)),
        PureState(1, np.array([_SQRT_HALF, -_SQRT_HALF], dtype=np.complex128)),
    )


def product_copies(psi: PureState, n: int) -> PureState:
    """|ψ⟩^{⊗n}"""
    if psi.n_qubits != 1:
        raise DimensionMismatchError(1, psi.n_qubits, "product_copies expects a single qubit")
    if n < 1:
        raise InvalidCopiesError("n", n)
    return PureState(n_qubits=n, amplitudes=kron_all([psi.amplitudes] * n))


@lru_cache(maxsize=None)
def dicke_matrix(n: int) -> ComplexMatrix:
    """2^n × (n+1) 矩阵，第 l 列为 |D_l⟩"""
    if n < 1:
        raise InvalidCopiesError("n", n)
    weights = np.bitwise_count(np.arange(2 ** n, dtype=np.uint64)).astype(np.int64)
    columns = np.zeros((2 ** n, n + 1), dtype=np.complex128)
    for excitations in range(n + 1):
        mask = weights == excitations
        columns[mask, excitations] = 1.0 / math.sqrt(math.comb(n, excitations))
    return frozen_array(columns)


def dicke_basis(n: int) -> tuple[PureState, ...]:
    """对称子空间的正交归一基 |D_0⟩ … |D_n⟩"""
    columns = dicke_matrix(n)
    return tuple(PureState(n_qubits=n, amplitudes=columns[:, l]) for l in range(n + 1))


def symmetric_projector(n: int) -> ComplexMatrix:
    """对称子空间投影 P_sym"""
    columns = dicke_matrix(n)
    return columns @ columns.conj().T


def symmetric_support_residual(rho: npt.ArrayLike, n: int) -> float:
    """‖(I − P_sym) ρ (I − P_sym)‖₁，支撑于对称子空间时为 0"""
    matrix = np.asarray(rho, dtype=np.complex128)
    dim = 2 ** n
    if matrix.shape != (dim, dim):
        raise DimensionMismatchError((dim, dim), matrix.shape, "symmetric_support_residual")
    complement = np.eye(dim) - symmetric_projector(n)
    return trace_norm(complement @ matrix @ complement)
