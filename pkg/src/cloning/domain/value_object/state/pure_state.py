"""
量子态相关值对象

定义赤道约定枚举与 n 比特纯态。
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import numpy.typing as npt

from ...exceptions import DimensionMismatchError, NotDensityMatrixError
from ..linalg.matrix import ComplexMatrix, frozen_array

_NORM_TOLERANCE = 1e-12


class EquatorConvention(str, Enum):
    """赤道所在平面：XY 为相位态 (|0⟩+e^{iφ}|1⟩)/√2，XZ 为实系数态"""
    XY = "xy"
    XZ = "xz"


@dataclass(frozen=True, eq=False)
class PureState:
    """
    n 比特纯态

    最左侧张量因子对应下标的最高位。

    Attributes:
        n_qubits: 比特数
        amplitudes: 长度 2^n_qubits 的复振幅（只读）
    """
    n_qubits: int
    amplitudes: ComplexMatrix = field(repr=False)

    def __post_init__(self) -> None:
        amplitudes = frozen_array(np.ravel(self.amplitudes))
        if self.n_qubits < 0 or amplitudes.shape[0] != 2 ** self.n_qubits:
            raise DimensionMismatchError(2 ** max(self.n_qubits, 0), amplitudes.shape[0], "PureState")
        norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm - 1.0) > _NORM_TOLERANCE:
            raise NotDensityMatrixError(f"state norm^2 = {norm:.15g}")
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def from_amplitudes(cls, amplitudes: npt.ArrayLike, *, normalize: bool = False) -> "PureState":
        """由振幅构造，可选归一化"""
        vector = np.array(amplitudes, dtype=np.complex128).ravel()
        if normalize:
            vector = vector / np.linalg.norm(vector)
        n_qubits = int(round(np.log2(vector.shape[0])))
        return cls(n_qubits=n_qubits, amplitudes=vector)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def density(self) -> ComplexMatrix:
        """|ψ⟩⟨ψ|"""
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def overlap(self, other: "PureState") -> complex:
        """⟨self|other⟩"""
        if other.dim != self.dim:
            raise DimensionMismatchError(self.dim, other.dim, "overlap")
        return complex(np.vdot(self.amplitudes, other.amplitudes))
