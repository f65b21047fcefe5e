"""
验证工作流

按套件运行各模块的不变量检验，每项给出残差、阈值与是否通过。
--tol 覆盖所有阈值型检验的容差。
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional

import numpy as np

from src.cloning.domain.domain_service.channel import (
    check_phase_covariance,
    covariance_constraint_residual,
    extract_shrink,
    gamma_from_channel,
    identity_channel,
    restrict_outputs,
    unitary_channel,
)
from src.cloning.domain.domain_service.cloning import (
    OPTIMAL_A,
    OPTIMAL_B,
    OPTIMAL_C,
    bound_fidelity,
    clone,
    concatenation_check,
    equator_fidelity_closed,
    optimal_12_clones_channel,
    universal_12_channel,
)
from src.cloning.domain.domain_service.estimation import (
    canonical_povm,
    measure_prepare_channel,
    pe_fidelity_closed,
    pe_fidelity_numeric,
    povm_completeness_residual,
)
from src.cloning.domain.domain_service.linalg import PAULI_X
from src.cloning.domain.domain_service.optimization import AnsatzOptimizer, arc_second_difference, verify_overlaps
from src.cloning.domain.value_object import (
    EquatorConvention,
    EstimationConfig,
    KrausChannel,
    OptimizerConfig,
    ToleranceConfig,
)

from .payload import CommandPayload

logger = logging.getLogger(__name__)

ESTIMATION_COPIES = tuple(range(1, 9))
ESTIMATION_PHASES = (0.0, 1.0, 2.5)
CLONE_GRID = 128
ALPHA_GRID = 100
BIT_FLIP_MIN_RESIDUAL = 0.1


class VerificationSuite(str, Enum):
    COVARIANCE = "covariance"
    CONCATENATION = "concatenation"
    ESTIMATION = "estimation"
    OPTIMUM = "optimum"
    ALL = "all"


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    residual: float
    tolerance: float
    passed: bool

    def to_row(self) -> Dict[str, object]:
        return {
            "suite": self.suite,
            "check": self.check,
            "residual": float(self.residual),
            "tolerance": float(self.tolerance),
            "passed": self.passed,
        }


class VerificationWorkflow:
    """不变量检验套件"""

    def __init__(
        self,
        tolerances: Optional[ToleranceConfig] = None,
        estimation_config: Optional[EstimationConfig] = None,
        optimizer_config: Optional[OptimizerConfig] = None,
        tol_override: Optional[float] = None,
    ) -> None:
        self.tolerances = tolerances or ToleranceConfig()
        self.estimation_config = estimation_config or EstimationConfig()
        self.optimizer_config = optimizer_config or OptimizerConfig()
        self.tol_override = tol_override
        self._suites: Dict[VerificationSuite, Callable[[], List[CheckResult]]] = {
            VerificationSuite.COVARIANCE: self.covariance_suite,
            VerificationSuite.CONCATENATION: self.concatenation_suite,
            VerificationSuite.ESTIMATION: self.estimation_suite,
            VerificationSuite.OPTIMUM: self.optimum_suite,
        }

    # ------------------------------------------------------------------
    # 公开接口
    # ------------------------------------------------------------------

    def run(self, suite: VerificationSuite | str) -> List[CheckResult]:
        suite = VerificationSuite(suite)
        selected = list(self._suites) if suite == VerificationSuite.ALL else [suite]
        results: List[CheckResult] = []
        for name in selected:
            logger.info("running verification suite %s", name.value)
            results.extend(self._suites[name]())
        for result in results:
            if not result.passed:
                logger.warning(
                    "check failed: %s/%s residual=%.3e tolerance=%.1e",
                    result.suite, result.check, result.residual, result.tolerance,
                )
        return results

    def payload(self, suite: VerificationSuite | str) -> tuple[CommandPayload, bool]:
        results = self.run(suite)
        passed = all(result.passed for result in results)
        params = {"suite": VerificationSuite(suite).value, "tol": self.tol_override}
        return CommandPayload(command="verify", params=params, rows=[r.to_row() for r in results]), passed

    # ------------------------------------------------------------------
    # 内部工具
    # ------------------------------------------------------------------

    def _tol(self, default: float) -> float:
        return default if self.tol_override is None else self.tol_override

    def _within(self, suite: str, check: str, residual: float, default_tol: float) -> CheckResult:
        tol = self._tol(default_tol)
        return CheckResult(suite, check, residual, tol, bool(residual <= tol))

    def _measure_prepare(self, n_in: int, m_out: int) -> KrausChannel:
        return measure_prepare_channel(n_in, m_out, config=self.estimation_config)

    # ------------------------------------------------------------------
    # 套件
    # ------------------------------------------------------------------

    def covariance_suite(self) -> List[CheckResult]:
        suite = VerificationSuite.COVARIANCE.value
        construction = self.tolerances.construction
        quadrature = self.tolerances.quadrature
        cloner_xy = optimal_12_clones_channel(EquatorConvention.XY)

        channels = (
            ("identity", identity_channel(), construction),
            ("measure_prepare_1_1", self._measure_prepare(1, 1), quadrature),
            ("measure_prepare_2_3", self._measure_prepare(2, 3), quadrature),
            ("optimal_1_2_xy", cloner_xy, construction),
            ("universal_1_2", restrict_outputs(universal_12_channel(), [0, 1]), construction),
        )
        results = []
        for name, ch, tol in channels:
            report = check_phase_covariance(ch, tol=self._tol(tol))
            results.append(CheckResult(suite, f"phase_covariance:{name}", report.max_residual, report.tolerance, report.passed))

        # 比特翻转不是协变映射，残差必须显著
        bit_flip = check_phase_covariance(unitary_channel(PAULI_X), n_samples=16)
        results.append(
            CheckResult(
                suite,
                "phase_covariance:bit_flip_rejected",
                bit_flip.max_residual,
                BIT_FLIP_MIN_RESIDUAL,
                bool(bit_flip.max_residual > BIT_FLIP_MIN_RESIDUAL),
            )
        )

        gamma = gamma_from_channel(cloner_xy)
        results.append(self._within(suite, "gamma_constraints:optimal_1_2_xy", covariance_constraint_residual(gamma), construction))
        shrink = extract_shrink(cloner_xy)
        results.append(self._within(suite, "eta_xy:optimal_1_2_xy", abs(shrink.eta_xy - math.sqrt(0.5)), construction))
        results.append(self._within(suite, "eta_z:optimal_1_2_xy", abs(shrink.eta_z - 0.5), construction))
        identity = extract_shrink(identity_channel())
        results.append(
            self._within(suite, "shrink:identity", max(abs(identity.eta_xy - 1.0), abs(identity.eta_z - 1.0)), construction)
        )
        mp = extract_shrink(self._measure_prepare(1, 1))
        results.append(self._within(suite, "shrink:measure_prepare_1_1", max(abs(mp.eta_xy - 0.5), abs(mp.eta_z)), quadrature))
        return results

    def concatenation_suite(self) -> List[CheckResult]:
        suite = VerificationSuite.CONCATENATION.value
        quadrature = self.tolerances.quadrature
        cloner_xy = optimal_12_clones_channel(EquatorConvention.XY)
        pairs = (
            ("optimal_1_2>mp_2_1", cloner_xy, self._measure_prepare(2, 1)),
            ("optimal_1_2>mp_2_3", cloner_xy, self._measure_prepare(2, 3)),
            ("mp_1_2>mp_2_1", self._measure_prepare(1, 2), self._measure_prepare(2, 1)),
            ("mp_1_3>mp_3_2", self._measure_prepare(1, 3), self._measure_prepare(3, 2)),
            ("mp_2_3>mp_3_1", self._measure_prepare(2, 3), self._measure_prepare(3, 1)),
        )
        results = []
        for name, first, second in pairs:
            report = concatenation_check(first, second)
            results.append(self._within(suite, f"product:{name}", report.residual, quadrature))
            if name == "optimal_1_2>mp_2_1":
                saturation = abs(report.eta_measured - (2.0 * pe_fidelity_closed(1) - 1.0))
                results.append(self._within(suite, "phase_estimation_limit:optimal_1_2>mp_2_1", saturation, quadrature))
        return results

    def estimation_suite(self) -> List[CheckResult]:
        suite = VerificationSuite.ESTIMATION.value
        construction = self.tolerances.construction
        oracle, phase_spread, completeness = 0.0, 0.0, 0.0
        for n in ESTIMATION_COPIES:
            nodes = self.estimation_config.default_nodes(n)
            values = [pe_fidelity_numeric(n, nodes, phi).mean_fidelity for phi in ESTIMATION_PHASES]
            oracle = max(oracle, abs(values[0] - pe_fidelity_closed(n)))
            phase_spread = max(phase_spread, max(values) - min(values))
            completeness = max(completeness, povm_completeness_residual(canonical_povm(n, nodes)))

        closed = [pe_fidelity_closed(n) for n in range(1, 13)]
        monotone_gap = min(b - a for a, b in zip(closed, closed[1:]))
        return [
            self._within(suite, "closed_vs_numeric", oracle, construction),
            self._within(suite, "phase_independence", phase_spread, construction),
            self._within(suite, "povm_completeness", completeness, construction),
            CheckResult(suite, "monotone_in_n", monotone_gap, 0.0, bool(monotone_gap > 0.0)),
        ]

    def optimum_suite(self) -> List[CheckResult]:
        suite = VerificationSuite.OPTIMUM.value
        analytic = 0.5 + math.sqrt(0.125)
        optimum = AnsatzOptimizer(self.optimizer_config).optimize()
        coeffs = optimum.coeffs
        overlaps = verify_overlaps(coeffs)
        coefficient_error = max(
            abs(coeffs.a - OPTIMAL_A), abs(coeffs.b - OPTIMAL_B), abs(coeffs.c - OPTIMAL_C)
        )

        alphas = np.linspace(0.0, 1.0, ALPHA_GRID)
        constancy = [equator_fidelity_closed(alpha, *coeffs.as_tuple()) for alpha in alphas]
        clone_fidelities = [clone(2.0 * math.pi * k / CLONE_GRID).fidelity for k in range(CLONE_GRID)]
        saturation = max(abs(f - bound_fidelity(1, 2)) for f in clone_fidelities)
        curvature = arc_second_difference(optimum.theta)

        return [
            self._within(suite, "fidelity", abs(optimum.fidelity - analytic), 1e-9),
            self._within(suite, "coefficients", coefficient_error, 1e-6),
            CheckResult(suite, "converged", 0.0 if optimum.converged else 1.0, 0.0, optimum.converged),
            self._within(suite, "unitarity_eq23", overlaps.eq23_residual, self.tolerances.construction),
            self._within(suite, "fidelity_eq25", overlaps.eq25_residual, self.tolerances.construction),
            self._within(suite, "zero_condition_eq26", overlaps.eq26_residual, self.tolerances.construction),
            self._within(suite, "equator_constancy", max(constancy) - min(constancy), 1e-9),
            self._within(suite, "bound_saturation", saturation, self.tolerances.arithmetic),
            CheckResult(suite, "strict_maximum", curvature, 0.0, bool(curvature < 0.0)),
        ]
