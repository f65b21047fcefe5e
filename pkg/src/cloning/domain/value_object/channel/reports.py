"""信道检验报告值对象"""
from dataclasses import dataclass


@dataclass(frozen=True)
class CovarianceReport:
    """
    相位协变检验结果

    Attributes:
        max_residual: 两侧算符范数差的最大值
        passed: max_residual ≤ tolerance
        tolerance: 判定阈值
        n_samples: χ 采样数
    """
    max_residual: float
    passed: bool
    tolerance: float
    n_samples: int


@dataclass(frozen=True)
class ConcatenationReport:
    """
    级联性质检验结果

    Attributes:
        eta_first: 第一个信道的 η_xy
        eta_second: 第二个信道的 η_xy
        eta_product: 两者乘积
        eta_measured: 复合信道实测 η_xy
        residual: |eta_product − eta_measured|
        eta_z_first: 第一个信道的 η_z
        eta_z_second: 第二个信道的 η_z
        eta_z_product: 两者乘积
        eta_z_measured: 复合信道实测 η_z
        z_residual: |eta_z_product − eta_z_measured|，仅当中间为单比特时应为零
    """
    eta_first: float
    eta_second: float
    eta_product: float
    eta_measured: float
    residual: float
    eta_z_first: float
    eta_z_second: float
    eta_z_product: float
    eta_z_measured: float
    z_residual: float
