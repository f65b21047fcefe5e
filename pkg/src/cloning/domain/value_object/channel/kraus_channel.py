"""
KrausChannel 值对象

有限 Kraus 算符集合表示的完全正、保迹映射，构造时校验维度与完备性。
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from ...exceptions import DimensionMismatchError, NotTracePreservingError
from ..linalg.matrix import ComplexMatrix, frozen_array

COMPLETENESS_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """
    Kraus 表示的量子信道

    Attributes:
        in_qubits: 输入比特数
        out_qubits: 输出比特数
        kraus_ops: Kraus 算符，每个为 2^out × 2^in 矩阵（只读）
    """
    in_qubits: int
    out_qubits: int
    kraus_ops: tuple[ComplexMatrix, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.in_qubits < 1 or self.out_qubits < 1:
            raise DimensionMismatchError(">= 1 qubit", (self.in_qubits, self.out_qubits), "KrausChannel")
        if len(self.kraus_ops) == 0:
            raise NotTracePreservingError(1.0)

        shape = (2 ** self.out_qubits, 2 ** self.in_qubits)
        ops = tuple(frozen_array(op) for op in self.kraus_ops)
        for op in ops:
            if op.shape != shape:
                raise DimensionMismatchError(shape, op.shape, "Kraus operator")

        residual = completeness_residual(ops)
        if residual > COMPLETENESS_TOLERANCE:
            raise NotTracePreservingError(residual)
        object.__setattr__(self, "kraus_ops", ops)

    @property
    def in_dim(self) -> int:
        return 2 ** self.in_qubits

    @property
    def out_dim(self) -> int:
        return 2 ** self.out_qubits

    @cached_property
    def stacked(self) -> np.ndarray:
        """Kraus 算符堆叠为 (k, out, in) 数组"""
        stacked = np.stack(self.kraus_ops)
        stacked.flags.writeable = False
        return stacked

    def __iter__(self) -> Iterator[ComplexMatrix]:
        return iter(self.kraus_ops)

    def __len__(self) -> int:
        return len(self.kraus_ops)


def completeness_residual(kraus_ops: Sequence[ComplexMatrix]) -> float:
    """‖Σ A†A − I‖（谱范数）"""
    dim = kraus_ops[0].shape[1]
    accum = np.zeros((dim, dim), dtype=np.complex128)
    for op in kraus_ops:
        accum += op.conj().T @ op
    return float(np.linalg.norm(accum - np.eye(dim), ord=2))
