"""数值配置值对象"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ToleranceConfig:
    """容差层级"""

    construction: float = 1e-10  # 构造不变量（完备性、迹保持）
    arithmetic: float = 1e-12  # 纯算术恒等式
    quadrature: float = 1e-8  # 求积相关结果


@dataclass(frozen=True)
class EstimationConfig:
    """相位估计求积配置，默认节点数 nodes_per_copy·N + extra_nodes"""

    nodes_per_copy: int = 4
    extra_nodes: int = 8

    def default_nodes(self, n_copies: int) -> int:
        return self.nodes_per_copy * n_copies + self.extra_nodes


@dataclass(frozen=True)
class OptimizerConfig:
    """可行弧优化配置"""

    seeds: int = 50  # 确定性多起点数
    theta_tolerance: float = 1e-10  # 黄金分割终止区间
    radius_tolerance: float = 1e-15  # 二分求半径的容差
    max_evaluations: int = 100_000  # 目标函数调用上限
    bracket_step: float = 0.05  # 初始括号步长
