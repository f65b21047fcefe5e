"""
BB84 对称克隆攻击

Eve 用最优 1→2 克隆机截获 BB84 态，Bob 与 Eve 各得一份克隆，
Bob 的误码率 D = 1 − F；Alice–Bob 互信息 1 − h₂(D)。
"""
from __future__ import annotations

from scipy.stats import entropy

from ...value_object.cloning.cloning import Bb84Report, Bb84StateRecord
from ..channel.channel_algebra import apply_pure
from ..linalg.qlinalg import fidelity_pure, partial_trace_keep_one
from ..state.state_factory import bb84_states
from .bound_calculator import bound_fidelity
from .optimal_cloner import optimal_12_channel

BB84_LABELS = ("0", "1", "0bar", "1bar")


def binary_entropy(p: float) -> float:
    """h₂(p)，单位比特"""
    return float(entropy([p, 1.0 - p], base=2))


def bb84_report() -> Bb84Report:
    fidelity = bound_fidelity(1, 2)
    disturbance = 1.0 - fidelity
    return Bb84Report(
        fidelity=fidelity,
        disturbance=disturbance,
        mutual_info_ab=1.0 - binary_entropy(disturbance),
    )


def bb84_attack_report() -> Bb84Report:
    """在四个 BB84 态上模拟攻击，附逐态结果"""
    cloner = optimal_12_channel()
    records = []
    for label, psi in zip(BB84_LABELS, bb84_states()):
        output = apply_pure(cloner, psi)
        bob = fidelity_pure(psi, partial_trace_keep_one(output, 3, 0))
        eve = fidelity_pure(psi, partial_trace_keep_one(output, 3, 1))
        records.append(Bb84StateRecord(label=label, bob_fidelity=bob, eve_fidelity=eve, error_rate=1.0 - bob))

    summary = bb84_report()
    return Bb84Report(
        fidelity=summary.fidelity,
        disturbance=summary.disturbance,
        mutual_info_ab=summary.mutual_info_ab,
        states=tuple(records),
    )
