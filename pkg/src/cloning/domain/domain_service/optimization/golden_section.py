"""
一维黄金分割极大化

先自起点向上坡方向扩展括号区间，再以黄金分割收缩。
目标函数调用次数由 EvaluationBudget 统一计数，超限抛出 NotConvergedError。
"""
from __future__ import annotations

import math
from typing import Callable

from ...exceptions import NotConvergedError
from ...value_object.optimization.ansatz import LineSearchResult

PHI_RATIO = 2.0 / (1.0 + math.sqrt(5.0))


class EvaluationBudget:
    """带调用上限的目标函数包装"""

    def __init__(self, objective: Callable[[float], float], max_evaluations: int) -> None:
        self._objective = objective
        self.max_evaluations = max_evaluations
        self.evaluations = 0

    def __call__(self, x: float) -> float:
        if self.evaluations >= self.max_evaluations:
            raise NotConvergedError(self.evaluations, self.max_evaluations)
        self.evaluations += 1
        return self._objective(x)


def bracket_maximum(
    f: Callable[[float], float],
    x0: float,
    lower: float,
    upper: float,
    step: float,
) -> tuple[float, float]:
    """
    自 x0 沿上坡方向步长加倍，直到函数值下降或到达边界

    Returns:
        (lo, hi)，单峰函数的极大点位于其中
    """
    f0 = f(x0)
    right = min(x0 + step, upper)
    left = max(x0 - step, lower)
    f_right, f_left = f(right), f(left)

    if f_right >= f0 and f_right >= f_left:
        direction, prev, x, fx = 1.0, x0, right, f_right
    elif f_left > f0:
        direction, prev, x, fx = -1.0, x0, left, f_left
    else:
        return left, right

    while lower < x < upper:
        step *= 2.0
        nxt = min(max(x + direction * step, lower), upper)
        f_next = f(nxt)
        if f_next < fx:
            return (prev, nxt) if direction > 0 else (nxt, prev)
        prev, x, fx = x, nxt, f_next
    return (prev, x) if direction > 0 else (x, prev)


def golden_maximize(
    f: Callable[[float], float],
    lower: float,
    upper: float,
    tol: float,
) -> LineSearchResult:
    """
    在 [lower, upper] 上对单峰函数做黄金分割极大化，端点值更大时返回端点

    converged 要求收缩后区间宽度不超过 tol 且两内点函数值有限。
    """
    evaluations = 0

    def evaluate(x: float) -> float:
        nonlocal evaluations
        evaluations += 1
        return f(x)

    x_lo, x_hi = lower, upper
    x1 = x_hi - PHI_RATIO * (x_hi - x_lo)
    x2 = x_lo + PHI_RATIO * (x_hi - x_lo)
    f1, f2 = evaluate(x1), evaluate(x2)
    while abs(x_hi - x_lo) > tol:
        if f2 < f1:
            x_hi, x2, f2 = x2, x1, f1
            x1 = x_hi - PHI_RATIO * (x_hi - x_lo)
            f1 = evaluate(x1)
        else:
            x_lo, x1, f1 = x1, x2, f2
            x2 = x_lo + PHI_RATIO * (x_hi - x_lo)
            f2 = evaluate(x2)

    argmax, maximum = (x1, f1) if f1 >= f2 else (x2, f2)
    for endpoint in (lower, upper):
        value = evaluate(endpoint)
        if value > maximum:
            argmax, maximum = endpoint, value

    width = abs(x_hi - x_lo)
    converged = width <= tol and math.isfinite(f1) and math.isfinite(f2)
    return LineSearchResult(argmax=argmax, maximum=maximum, evaluations=evaluations, converged=converged)
