"""
线性代数相关值对象

ComplexMatrix 直接使用 numpy complex128 数组承载；写入值对象前通过
frozen_array 复制并置为只读，保证值对象构造后不可变。
"""
from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np
import numpy.typing as npt

ComplexMatrix = npt.NDArray[np.complex128]


def frozen_array(values: npt.ArrayLike) -> ComplexMatrix:
    """复制为只读 complex128 数组"""
    array = np.array(values, dtype=np.complex128, copy=True)
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class BlochVector:
    """
    单比特 Bloch 矢量

    Attributes:
        sx: x 分量
        sy: y 分量
        sz: z 分量
    """
    sx: float
    sy: float
    sz: float

    @property
    def length(self) -> float:
        return math.sqrt(self.sx ** 2 + self.sy ** 2 + self.sz ** 2)

    def as_array(self) -> npt.NDArray[np.float64]:
        return np.array([self.sx, self.sy, self.sz], dtype=np.float64)

    def scaled(self, eta_xy: float, eta_z: float = 1.0) -> "BlochVector":
        """赤道面分量乘 eta_xy，z 分量乘 eta_z"""
        return BlochVector(self.sx * eta_xy, self.sy * eta_xy, self.sz * eta_z)
