"""
相位协变克隆界限

η̃_pcc(N,M) = η̄_pe(N) / η̄_pe(M)，F = (1+η)/2；
通用克隆最优保真度 (M(N+1)+N)/(M(N+2)) 作为对照。
"""
from __future__ import annotations

import math
from numbers import Integral

from ...exceptions import InvalidRangeError
from ...value_object.cloning.cloning import INFINITY, BoundRow, OutputCount
from ..estimation.phase_estimator import pe_shrink_closed


def _validate_range(n: object, m: object) -> None:
    if isinstance(n, bool) or not isinstance(n, Integral) or n < 1:
        raise InvalidRangeError(n, m, "N must be a positive integer")
    if isinstance(m, float) and math.isinf(m) and m > 0:
        return
    if isinstance(m, bool) or not isinstance(m, Integral):
        raise InvalidRangeError(n, m, "M must be an integer or infinity")
    if m < n:
        raise InvalidRangeError(n, m, "M < N")


def bound_eta(n: int, m: OutputCount) -> float:
    """收缩因子上界；M 为无穷时直接返回 η̄_pe(N)"""
    _validate_range(n, m)
    if math.isinf(m):
        return pe_shrink_closed(n)
    if m == n:
        return 1.0
    return pe_shrink_closed(n) / pe_shrink_closed(int(m))


def bound_fidelity(n: int, m: OutputCount) -> float:
    return 0.5 * (1.0 + bound_eta(n, m))


def universal_fidelity(n: int, m: OutputCount) -> float:
    """通用 N→M 克隆最优保真度，M 为无穷时为 (N+1)/(N+2)"""
    _validate_range(n, m)
    if math.isinf(m):
        return (n + 1.0) / (n + 2.0)
    return (m * (n + 1.0) + n) / (m * (n + 2.0))


def bound_row(n: int, m: OutputCount) -> BoundRow:
    eta = bound_eta(n, m)
    return BoundRow(
        n_in=n,
        m_out=m,
        eta_bound=eta,
        f_pcc_bound=0.5 * (1.0 + eta),
        f_universal=universal_fidelity(n, m),
    )


def bound_table(n: int, m_max: int, include_infinity: bool = True) -> tuple[BoundRow, ...]:
    """
    M = N..m_max 的界限表，可附加 M = ∞ 行

    Raises:
        InvalidRangeError: N < 1 或 m_max < N
    """
    _validate_range(n, m_max)
    rows = [bound_row(n, m) for m in range(n, m_max + 1)]
    if include_infinity:
        rows.append(bound_row(n, INFINITY))
    return tuple(rows)
