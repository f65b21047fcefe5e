"""
命令工作流

把领域服务的结果组装成 CommandPayload，供 CLI 序列化输出。
数值一律转为 Python float / int，输出格式由基础设施层负责。
"""

from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np

from src.cloning.domain.domain_service.cloning import (
    bb84_attack_report,
    bound_fidelity,
    bound_table,
    clone,
    universal_fidelity,
)
from src.cloning.domain.domain_service.estimation import pe_fidelity_closed, pe_fidelity_numeric
from src.cloning.domain.domain_service.linalg import bloch_from_density
from src.cloning.domain.domain_service.optimization import AnsatzOptimizer, verify_overlaps
from src.cloning.domain.value_object import (
    INFINITY,
    EquatorConvention,
    EstimationConfig,
    OptimizerConfig,
)

from .payload import CommandPayload

logger = logging.getLogger(__name__)


def _number(value: float) -> float:
    return float(value)


def _matrix_fields(prefix: str, matrix: np.ndarray) -> dict:
    fields = {}
    for i in range(2):
        for j in range(2):
            fields[f"{prefix}_{i}{j}_re"] = _number(matrix[i, j].real)
            fields[f"{prefix}_{i}{j}_im"] = _number(matrix[i, j].imag)
    return fields


class CommandWorkflow:
    """bound / figure / clone / bb84 / estimate / optimize 命令"""

    def __init__(
        self,
        estimation_config: Optional[EstimationConfig] = None,
        optimizer_config: Optional[OptimizerConfig] = None,
    ) -> None:
        self.estimation_config = estimation_config or EstimationConfig()
        self.optimizer_config = optimizer_config or OptimizerConfig()

    # ------------------------------------------------------------------
    # 界限表
    # ------------------------------------------------------------------

    def bound(self, n: int, m_max: int) -> CommandPayload:
        rows = [
            {
                "N": row.n_in,
                "M": row.m_out if row.is_infinite else int(row.m_out),
                "F_pcc_bound": _number(row.f_pcc_bound),
                "F_universal": _number(row.f_universal),
            }
            for row in bound_table(n, m_max)
        ]
        return CommandPayload(command="bound", params={"n": n, "m_max": m_max}, rows=rows)

    def figure(self, m_max: int) -> CommandPayload:
        """N=1 的两条曲线，附 M→∞ 渐近值"""
        pcc_limit = bound_fidelity(1, INFINITY)
        universal_limit = universal_fidelity(1, INFINITY)
        rows = [
            {
                "N": 1,
                "M": row.m_out,
                "F_pcc_bound": _number(row.f_pcc_bound),
                "F_universal": _number(row.f_universal),
                "F_pcc_limit": pcc_limit,
                "F_universal_limit": universal_limit,
            }
            for row in bound_table(1, m_max, include_infinity=False)
        ]
        params = {"m_max": m_max, "F_pcc_limit": pcc_limit, "F_universal_limit": universal_limit}
        return CommandPayload(command="figure", params=params, rows=rows)

    # ------------------------------------------------------------------
    # 克隆与攻击
    # ------------------------------------------------------------------

    def clone(self, phi: float, convention: EquatorConvention) -> CommandPayload:
        result = clone(phi, convention)
        report = {"phi": _number(result.input_phi), "fidelity": _number(result.fidelity)}
        report.update(_matrix_fields("clone_a", result.clone_a))
        report.update(_matrix_fields("clone_b", result.clone_b))
        report.update(_matrix_fields("ancilla", result.ancilla))
        params = {"phi": phi, "convention": EquatorConvention(convention).value}
        return CommandPayload(command="clone", params=params, report=report)

    def bb84(self) -> CommandPayload:
        summary = bb84_attack_report()
        report = {
            "fidelity": _number(summary.fidelity),
            "disturbance": _number(summary.disturbance),
            "mutual_info_ab": _number(summary.mutual_info_ab),
        }
        for record in summary.states:
            report[f"error_rate_{record.label}"] = _number(record.error_rate)
        return CommandPayload(command="bb84", params={}, report=report)

    # ------------------------------------------------------------------
    # 相位估计与优化
    # ------------------------------------------------------------------

    def estimate(self, n: int, nodes: Optional[int] = None, phi: float = 0.0) -> CommandPayload:
        n_nodes = nodes if nodes is not None else self.estimation_config.default_nodes(n)
        estimate = pe_fidelity_numeric(n, n_nodes, phi, config=self.estimation_config)
        closed = pe_fidelity_closed(n)
        bloch = bloch_from_density(estimate.reconstructed_state, tol=1e-10)
        report = {
            "n": n,
            "nodes": n_nodes,
            "mean_fidelity": _number(estimate.mean_fidelity),
            "closed_fidelity": _number(closed),
            "residual": _number(abs(estimate.mean_fidelity - closed)),
            "shrink": _number(estimate.shrink),
            "sx": bloch.sx,
            "sy": bloch.sy,
            "sz": bloch.sz,
        }
        return CommandPayload(command="estimate", params={"n": n, "nodes": n_nodes, "phi": phi}, report=report)

    def optimize(self, symmetric: bool = False) -> CommandPayload:
        optimum = AnsatzOptimizer(self.optimizer_config).optimize(symmetric=symmetric)
        overlaps = verify_overlaps(optimum.coeffs)
        report = {
            "a": _number(optimum.coeffs.a),
            "b": _number(optimum.coeffs.b),
            "c": _number(optimum.coeffs.c),
            "fidelity": _number(optimum.fidelity),
            "theta": _number(optimum.theta),
            "iterations": optimum.iterations,
            "converged": optimum.converged,
            "eq23_residual": _number(overlaps.eq23_residual),
            "eq25_value": _number(overlaps.eq25_value),
            "eq26_residual": _number(overlaps.eq26_residual),
        }
        if not math.isclose(optimum.fidelity, bound_fidelity(1, 2), abs_tol=1e-9) and not symmetric:
            logger.warning("optimizer fidelity %.15f differs from the 1->2 bound", optimum.fidelity)
        return CommandPayload(command="optimize", params={"symmetric": symmetric}, report=report)
