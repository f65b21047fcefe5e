"""
对称拟设的约束优化

在 a²+2b²+c²=1 下极大化 F = ½(1+a²−c²)，约束 F = ½ + b(a+c)。
可行集是一条弧：a = r cos θ, c = r sin θ, θ ∈ [0, π/4]，
r(θ) 由二分法解约束得到，再对 θ 做多起点黄金分割搜索。
"""
from __future__ import annotations

import logging
import math
from typing import Optional

from scipy.optimize import bisect

from ...exceptions import InfeasiblePointError, NormalizationViolatedError
from ...value_object.config.numerics_config import OptimizerConfig
from ...value_object.optimization.ansatz import (
    AncillaOverlaps,
    AnsatzCoefficients,
    LineSearchResult,
    Optimum,
    OverlapReport,
)
from .golden_section import EvaluationBudget, bracket_maximum, golden_maximize

logger = logging.getLogger(__name__)

FEASIBILITY_TOLERANCE = 1e-10
NORMALIZATION_TOLERANCE = 1e-8
TIE_TOLERANCE = 1e-12
SEED_AGREEMENT = 1e-6
ARC_END = math.pi / 4.0


def _b_from(a: float, c: float) -> float:
    slack = 1.0 - a * a - c * c
    if slack < -FEASIBILITY_TOLERANCE:
        raise InfeasiblePointError((a, c), "a^2 + c^2 > 1")
    return math.sqrt(max(slack, 0.0) / 2.0)


def _check_point(a: float, b: float, c: float) -> float:
    if min(a, b, c) < -FEASIBILITY_TOLERANCE:
        raise InfeasiblePointError((a, b, c), "negative amplitude")
    implied_b = _b_from(a, c)
    residual = a * a + 2.0 * b * b + c * c - 1.0
    if abs(residual) > NORMALIZATION_TOLERANCE:
        raise NormalizationViolatedError(residual)
    return implied_b


def fidelity_objective(a: float, b: float, c: float) -> float:
    """F = ½(1 + a² − c²)"""
    _check_point(a, b, c)
    return 0.5 * (1.0 + a * a - c * c)


def constraint_residual(a: float, b: float, c: float) -> float:
    """|½(1+a²−c²) − ½ − b(a+c)|，b 取 √((1−a²−c²)/2)"""
    implied_b = _check_point(a, b, c)
    return abs(0.5 * (a * a - c * c) - implied_b * (a + c))


# ----------------------------------------------------------------------
# 可行弧
# ----------------------------------------------------------------------

def arc_radius(theta: float, tol: float = 1e-15) -> float:
    """
    解 ½ r (cos θ − sin θ) = √((1−r²)/2)

    θ = π/4 时方程无正根，退化为 a = c = 1/√2, b = 0。
    浮点下 cos(π/4) − sin(π/4) ≈ 1e-16 而非 0，故按 θ 判断端点。
    """
    if not 0.0 <= theta <= ARC_END + FEASIBILITY_TOLERANCE:
        raise InfeasiblePointError((theta,), "theta outside [0, pi/4]")
    d = math.cos(theta) - math.sin(theta)
    if theta >= ARC_END - FEASIBILITY_TOLERANCE or d <= FEASIBILITY_TOLERANCE:
        return 1.0

    def h(r: float) -> float:
        return 0.5 * r * d - math.sqrt((1.0 - r * r) / 2.0)

    return bisect(h, 0.0, 1.0, xtol=tol, maxiter=200)


def arc_point(theta: float, tol: float = 1e-15, overlaps: Optional[AncillaOverlaps] = None) -> AnsatzCoefficients:
    r = arc_radius(theta, tol)
    a, c = r * math.cos(theta), r * math.sin(theta)
    return AnsatzCoefficients(
        a=a,
        b=_b_from(a, c),
        c=c,
        overlaps=overlaps if overlaps is not None else AncillaOverlaps.two_level(),
    )


def arc_fidelity(theta: float, tol: float = 1e-15) -> float:
    point = arc_point(theta, tol)
    return fidelity_objective(point.a, point.b, point.c)


def arc_second_difference(theta: float, step: float = 1e-4, tol: float = 1e-15) -> float:
    """F(θ+h) − 2F(θ) + F(θ−h)，严格极大处为负"""
    return arc_fidelity(theta + step, tol) - 2.0 * arc_fidelity(theta, tol) + arc_fidelity(theta - step, tol)


# ----------------------------------------------------------------------
# 优化器
# ----------------------------------------------------------------------

class AnsatzOptimizer:
    """可行弧上的确定性多起点优化器"""

    def __init__(self, config: Optional[OptimizerConfig] = None) -> None:
        self.config = config or OptimizerConfig()

    def seeds(self) -> list[float]:
        """θ₀ 均匀分布于 (0, π/4)"""
        count = self.config.seeds
        return [ARC_END * (k + 0.5) / count for k in range(count)]

    def _search_from(self, theta0: float, budget: EvaluationBudget) -> LineSearchResult:
        lo, hi = bracket_maximum(budget, theta0, 0.0, ARC_END, self.config.bracket_step)
        return golden_maximize(budget, lo, hi, self.config.theta_tolerance)

    def optimize(self, symmetric: bool = False) -> Optimum:
        """
        Args:
            symmetric: 强制 c = a，此时只剩退化驻点 θ = π/4（F = ½）

        Raises:
            NotConvergedError: 目标函数调用次数超过 max_evaluations
        """
        tol = self.config.radius_tolerance
        budget = EvaluationBudget(lambda theta: arc_fidelity(theta, tol), self.config.max_evaluations)

        if symmetric:
            fidelity = budget(ARC_END)
            return Optimum(arc_point(ARC_END, tol), fidelity, ARC_END, budget.evaluations, True)

        results = [self._search_from(theta0, budget) for theta0 in self.seeds()]
        best = results[0]
        for result in results[1:]:
            if result.maximum > best.maximum + TIE_TOLERANCE:
                best = result
            elif abs(result.maximum - best.maximum) <= TIE_TOLERANCE and result.argmax < best.argmax:
                # a = r cos θ 在弧上随 θ 减小
                best = result

        spread = max(abs(result.argmax - best.argmax) for result in results)
        converged = all(result.converged for result in results) and spread <= SEED_AGREEMENT
        if not converged:
            logger.warning("multi-start seeds disagree: theta spread %.3e", spread)

        coeffs = arc_point(best.argmax, tol)
        logger.info(
            "ansatz optimum a=%.12f b=%.12f c=%.12f F=%.15f after %d evaluations",
            coeffs.a, coeffs.b, coeffs.c, best.maximum, budget.evaluations,
        )
        return Optimum(
            coeffs=coeffs,
            fidelity=best.maximum,
            theta=best.argmax,
            iterations=budget.evaluations,
            converged=converged,
        )


def optimize(config: Optional[OptimizerConfig] = None, symmetric: bool = False) -> Optimum:
    return AnsatzOptimizer(config).optimize(symmetric=symmetric)


def verify_overlaps(coeffs: AnsatzCoefficients) -> OverlapReport:
    """
    由辅助态内积检验幺正条件、保真度表达式与零条件

    eq23: max(|a²+2b²+c²−1|, |ac⟨C̃|A⟩ + 2b²⟨B̃|B⟩ + ac⟨Ã|C⟩|)
    eq25: ½(1 + ab·Re[⟨Ã|B⟩+⟨B̃|A⟩] + bc·Re[⟨B̃|C⟩+⟨C̃|B⟩])
    eq26: |ab·Re[⟨Ã|B̃⟩+⟨B|A⟩] + bc·Re[⟨B̃|C̃⟩+⟨C|B⟩]|
    """
    a, b, c = coeffs.as_tuple()
    ov = coeffs.overlaps
    eq23 = max(abs(coeffs.normalization_residual), abs(coeffs.unitarity_cross_term))

    fid_ab, fid_bc = ov.fidelity_overlap_sums()
    eq25 = 0.5 * (1.0 + a * b * fid_ab + b * c * fid_bc)
    zero_ab, zero_bc = ov.zero_condition_sums()
    eq26 = abs(a * b * zero_ab + b * c * zero_bc)

    return OverlapReport(
        eq23_residual=eq23,
        eq25_value=eq25,
        eq25_residual=abs(eq25 - 0.5 * (1.0 + 2.0 * b * (a + c))),
        eq26_residual=eq26,
        fidelity_gap=abs(eq25 - (a * a + b * b)),
    )
