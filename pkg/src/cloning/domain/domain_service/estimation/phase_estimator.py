"""
协变相位估计

N 个赤道拷贝上的最优相位估计：闭式保真度、均匀节点求积的数值 POVM、
态估计收缩因子，以及“测量-制备”克隆信道。
"""
from __future__ import annotations

import logging
import math
from numbers import Integral
from typing import Optional

import numpy as np
from scipy.linalg import null_space
from scipy.special import gammaln, logsumexp

from ...exceptions import InvalidCopiesError, TooFewNodesError
from ...value_object.channel.kraus_channel import KrausChannel
from ...value_object.config.numerics_config import EstimationConfig
from ...value_object.estimation.estimation import CovariantPovm, EstimationReport
from ..channel.channel_algebra import make_channel
from ..linalg.qlinalg import kron_all
from ..state.state_factory import dicke_matrix, equatorial_state, product_copies

logger = logging.getLogger(__name__)

# 超过该拷贝数时二项式求和改在对数域进行
LOG_DOMAIN_THRESHOLD = 30


def _require_copies(name: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral) or value < 1:
        raise InvalidCopiesError(name, value)
    return int(value)


def min_nodes(n: int) -> int:
    """求积精确所需的最少节点数 2n+3"""
    return 2 * n + 3


def _log_binomial(n: int, k: np.ndarray) -> np.ndarray:
    return gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)


def binomial_root_sum(n: int) -> float:
    """Σ_{l=0}^{n−1} √(C(n,l)·C(n,l+1))，大 n 时可能溢出，用 log_binomial_root_sum"""
    n = _require_copies("n", n)
    return math.fsum(math.sqrt(math.comb(n, l) * math.comb(n, l + 1)) for l in range(n))


def log_binomial_root_sum(n: int) -> float:
    n = _require_copies("n", n)
    l = np.arange(n)
    return float(logsumexp(0.5 * (_log_binomial(n, l) + _log_binomial(n, l + 1))))


def pe_shrink_closed(n: int) -> float:
    """η̄_pe(N) = 2^{−N} Σ √(C(N,l)C(N,l+1)) = 2F̄_pe(N) − 1"""
    n = _require_copies("n", n)
    if n <= LOG_DOMAIN_THRESHOLD:
        return binomial_root_sum(n) / 2.0 ** n
    return math.exp(log_binomial_root_sum(n) - n * math.log(2.0))


def pe_fidelity_closed(n: int) -> float:
    """最优协变相位估计平均保真度 ½ + 2^{−(N+1)} Σ √(C(N,l)C(N,l+1))"""
    return 0.5 + 0.5 * pe_shrink_closed(n)


def se_shrink(l: int) -> float:
    """L 个拷贝上全 Bloch 球态估计的收缩因子 L/(L+2)"""
    l = _require_copies("l", l)
    return l / (l + 2.0)


def _resolve_nodes(n: int, n_nodes: Optional[int], config: Optional[EstimationConfig]) -> int:
    if n_nodes is None:
        n_nodes = (config or EstimationConfig()).default_nodes(n)
    if n_nodes < min_nodes(n):
        raise TooFewNodesError(n_nodes, min_nodes(n))
    return int(n_nodes)


def canonical_povm(
    n: int,
    n_nodes: Optional[int] = None,
    config: Optional[EstimationConfig] = None,
) -> CovariantPovm:
    """
    种子 Σ_l |D_l⟩ 的协变 POVM，均匀节点 φ*_k = 2πk/K，权重 1/K

    Args:
        n: 拷贝数 N
        n_nodes: 节点数 K，至少 2N+3
        config: n_nodes 缺省时由其给出节点数，再缺省为 4N+8
    """
    n = _require_copies("n", n)
    n_nodes = _resolve_nodes(n, n_nodes, config)
    seed = dicke_matrix(n).sum(axis=1)
    weight = 1.0 / n_nodes
    nodes = tuple((2.0 * math.pi * k / n_nodes, weight) for k in range(n_nodes))
    return CovariantPovm(n_copies=n, seed=seed, nodes=nodes)


def outcome_vectors(povm: CovariantPovm) -> np.ndarray:
    """(K, 2^N) 数组，第 k 行为 |e(φ*_k)⟩ = Σ_l e^{ilφ*_k}|D_l⟩"""
    phases = np.array([phi_star for phi_star, _ in povm.nodes])
    excitations = np.arange(povm.n_copies + 1)
    symmetric_coords = np.exp(1j * np.outer(phases, excitations))
    return symmetric_coords @ dicke_matrix(povm.n_copies).T


def povm_completeness_residual(povm: CovariantPovm) -> float:
    """‖Σ_k w_k |e_k⟩⟨e_k| − P_sym‖"""
    vectors = outcome_vectors(povm)
    weights = np.array([w for _, w in povm.nodes])
    total = np.einsum("k,ki,kj->ij", weights, vectors, vectors.conj())
    dicke = dicke_matrix(povm.n_copies)
    return float(np.linalg.norm(total - dicke @ dicke.conj().T, ord=2))


def pe_fidelity_numeric(
    n: int,
    n_nodes: Optional[int] = None,
    phi: float = 0.0,
    config: Optional[EstimationConfig] = None,
) -> EstimationReport:
    """
    数值相位估计

    p(φ|φ*) = w·|⟨e(φ*)|ψ_φ^{⊗N}⟩|²，
    F̄ = Σ p·|⟨ψ_φ|ψ_{φ*}⟩|²，ϱ̄_φ = Σ p·|ψ_{φ*}⟩⟨ψ_{φ*}|。
    """
    povm = canonical_povm(n, n_nodes, config)
    psi = equatorial_state(phi)
    amplitudes = product_copies(psi, povm.n_copies).amplitudes
    probabilities = np.array([w for _, w in povm.nodes]) * np.abs(outcome_vectors(povm).conj() @ amplitudes) ** 2

    candidates = [equatorial_state(phi_star) for phi_star, _ in povm.nodes]
    overlaps = np.array([psi.overlap(candidate) for candidate in candidates])
    mean_fidelity = math.fsum(probabilities * np.abs(overlaps) ** 2)
    reconstructed = sum(p * candidate.density() for p, candidate in zip(probabilities, candidates))

    logger.debug(
        "phase estimation n=%d nodes=%d phi=%.6f: fidelity=%.15f (probability mass %.3e off unity)",
        povm.n_copies, povm.n_nodes, phi, mean_fidelity, abs(math.fsum(probabilities) - 1.0),
    )
    return EstimationReport.from_fidelity(mean_fidelity, reconstructed, phi=phi)


def measure_prepare_channel(
    n_in: int,
    m_out: int,
    n_nodes: Optional[int] = None,
    config: Optional[EstimationConfig] = None,
) -> KrausChannel:
    """
    测量-制备克隆信道 N → M

    Kraus 算符 √w·|ψ_{φ*}⟩^{⊗M}⟨e(φ*)|；对称子空间的补空间整体映到 |0…0⟩，
    以保持迹。每个输出比特的约化态按 η̄_pe(N) 收缩，与 M 无关。
    """
    m_out = _require_copies("m_out", m_out)
    povm = canonical_povm(n_in, n_nodes, config)
    vectors = outcome_vectors(povm)

    ops = []
    for (phi_star, weight), outcome in zip(povm.nodes, vectors):
        prepared = kron_all([equatorial_state(phi_star).amplitudes] * m_out)
        ops.append(math.sqrt(weight) * np.outer(prepared, outcome.conj()))

    complement = null_space(dicke_matrix(povm.n_copies).conj().T)
    vacuum = np.zeros(2 ** m_out, dtype=np.complex128)
    vacuum[0] = 1.0
    for column in complement.T:
        ops.append(np.outer(vacuum, column.conj()))

    logger.debug(
        "measure-prepare channel %d->%d: %d nodes, %d complement operators",
        povm.n_copies, m_out, povm.n_nodes, complement.shape[1],
    )
    return make_channel(povm.n_copies, m_out, ops)
