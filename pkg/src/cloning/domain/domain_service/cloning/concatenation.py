"""级联性质检验：复合信道的 η_xy（中间为单比特时还有 η_z）等于各级的乘积"""
from __future__ import annotations

import logging

from ...exceptions import NotPhaseCovariantError
from ...value_object.channel.kraus_channel import KrausChannel
from ...value_object.channel.reports import ConcatenationReport
from ..channel.appendix_analyzer import extract_shrink
from ..channel.channel_algebra import compose
from ..channel.covariance_checker import check_phase_covariance

logger = logging.getLogger(__name__)

COVARIANCE_TOLERANCE = 1e-8
COVARIANCE_SAMPLES = 16


def concatenation_check(
    first: KrausChannel,
    second: KrausChannel,
    tol: float = COVARIANCE_TOLERANCE,
) -> ConcatenationReport:
    """
    先 first 后 second，比较实测与预测的 η_xy

    Raises:
        NotPhaseCovariantError: 任一信道协变残差超过 tol
        DimensionMismatchError: 信道不可复合
    """
    for ch in (first, second):
        report = check_phase_covariance(ch, n_samples=COVARIANCE_SAMPLES, tol=tol)
        if not report.passed:
            raise NotPhaseCovariantError(report.max_residual, tol)

    composite = compose(first, second)
    shrink_first = extract_shrink(first, tol=tol)
    shrink_second = extract_shrink(second, tol=tol)
    shrink_measured = extract_shrink(composite, tol=tol)
    eta_first, eta_second, eta_measured = shrink_first.eta_xy, shrink_second.eta_xy, shrink_measured.eta_xy
    eta_product = eta_first * eta_second
    residual = abs(eta_product - eta_measured)
    eta_z_product = shrink_first.eta_z * shrink_second.eta_z

    logger.debug(
        "concatenation %d->%d->%d: %.12f x %.12f = %.12f, measured %.12f",
        first.in_qubits, first.out_qubits, second.out_qubits,
        eta_first, eta_second, eta_product, eta_measured,
    )
    return ConcatenationReport(
        eta_first=eta_first,
        eta_second=eta_second,
        eta_product=eta_product,
        eta_measured=eta_measured,
        residual=residual,
        eta_z_first=shrink_first.eta_z,
        eta_z_second=shrink_second.eta_z,
        eta_z_product=eta_z_product,
        eta_z_measured=shrink_measured.eta_z,
        z_residual=abs(eta_z_product - shrink_measured.eta_z),
    )
