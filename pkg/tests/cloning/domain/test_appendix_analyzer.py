from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cloning.domain.domain_service.channel import (
    apply,
    check_phase_covariance,
    compose,
    conjugate_channel,
    covariance_constraint_residual,
    effective_transfer,
    equatorial_family_gamma,
    extract_shrink,
    fidelity_with_offset,
    gamma_from_channel,
    gamma_from_kraus,
    gamma_from_transfer,
    identity_channel,
    kraus_coefficients,
    make_channel,
    pauli_channel,
    predicted_output,
    restrict_outputs,
    shrink_from_gamma,
    symmetrize_channel,
    unitary_channel,
)
from src.cloning.domain.domain_service.cloning import optimal_12_clones_channel, universal_12_channel
from src.cloning.domain.domain_service.estimation import measure_prepare_channel
from src.cloning.domain.domain_service.linalg import PAULI_X, density_from_bloch
from src.cloning.domain.exceptions import DimensionMismatchError, NotPhaseCovariantError
from src.cloning.domain.value_object import BlochVector, EquatorConvention, GammaMatrix, ShrinkFactors

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)


def _amplitude_damping(gamma: float):
    return make_channel(
        1,
        1,
        [
            np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - gamma)]]),
            np.array([[0.0, math.sqrt(gamma)], [0.0, 0.0]]),
        ],
    )


def test_kraus_coefficients_of_identity() -> None:
    assert np.allclose(kraus_coefficients(identity_channel()), [[0.0, 0.0, 1.0, 1.0]])
    with pytest.raises(DimensionMismatchError):
        kraus_coefficients(optimal_12_clones_channel())


def test_identity_shrink_factors() -> None:
    shrink = extract_shrink(identity_channel())

    assert shrink.eta_xy == pytest.approx(1.0)
    assert shrink.eta_z == pytest.approx(1.0)
    assert shrink.phi_rot == pytest.approx(0.0)
    assert shrink.z_offset == pytest.approx(0.0)


def test_dephasing_shrinks_only_the_equator() -> None:
    shrink = extract_shrink(pauli_channel([0.9, 0.0, 0.0, 0.1]))

    assert shrink.eta_xy == pytest.approx(0.8)
    assert shrink.eta_z == pytest.approx(1.0)


def test_amplitude_damping_gamma_entries() -> None:
    gamma = 0.3
    g = gamma_from_kraus(_amplitude_damping(gamma))
    shrink = shrink_from_gamma(g)

    assert g.is_valid()
    assert covariance_constraint_residual(g) == pytest.approx(0.0, abs=1e-15)
    assert g[0, 0].real == pytest.approx(gamma)
    assert shrink.eta_xy == pytest.approx(math.sqrt(1.0 - gamma))
    assert shrink.eta_z == pytest.approx(1.0 - gamma)
    assert shrink.z_offset == pytest.approx(gamma)


def test_gamma_from_transfer_matches_kraus_expansion() -> None:
    ch = _amplitude_damping(0.45)

    assert np.allclose(gamma_from_transfer(effective_transfer(ch)).gamma, gamma_from_kraus(ch).gamma)
    with pytest.raises(DimensionMismatchError):
        gamma_from_transfer(np.zeros((2, 2)))


def test_predicted_output_matches_channel_action() -> None:
    ch = _amplitude_damping(0.2)
    rho = density_from_bloch(BlochVector(0.3, -0.4, 0.5))

    assert np.allclose(predicted_output(gamma_from_kraus(ch), rho), apply(ch, rho))


def test_non_covariant_channel_is_rejected() -> None:
    g = gamma_from_kraus(unitary_channel(HADAMARD))

    assert covariance_constraint_residual(g) > 0.1
    with pytest.raises(NotPhaseCovariantError):
        shrink_from_gamma(g)


def test_optimal_cloner_shrink_in_xy_frame() -> None:
    cloner = optimal_12_clones_channel(EquatorConvention.XY)

    for keep in (0, 1):
        shrink = extract_shrink(cloner, keep=keep, tol=1e-10)
        assert shrink.eta_xy == pytest.approx(math.sqrt(0.5), abs=1e-10)
        assert shrink.eta_z == pytest.approx(0.5, abs=1e-10)
        assert shrink.phi_rot == pytest.approx(0.0, abs=1e-10)
        assert shrink.z_offset == pytest.approx(0.0, abs=1e-10)
        assert shrink.equatorial_fidelity == pytest.approx(0.5 + math.sqrt(0.125), abs=1e-10)


def test_measure_prepare_shrink_from_two_copies() -> None:
    single = extract_shrink(measure_prepare_channel(1, 1))
    from_two_copies = gamma_from_channel(measure_prepare_channel(2, 3), keep=2)

    assert single.eta_xy == pytest.approx(0.5, abs=1e-8)
    assert single.eta_z == pytest.approx(0.0, abs=1e-8)
    assert shrink_from_gamma(from_two_copies).eta_xy == pytest.approx(math.sqrt(0.5), abs=1e-8)


def test_symmetrize_balances_populations() -> None:
    damping = _amplitude_damping(0.3)
    symmetric = gamma_from_kraus(symmetrize_channel(damping))

    assert symmetric[2, 2].real == pytest.approx(symmetric[3, 3].real)
    assert shrink_from_gamma(symmetric).eta_xy == pytest.approx(extract_shrink(damping).eta_xy)
    with pytest.raises(DimensionMismatchError):
        symmetrize_channel(optimal_12_clones_channel())


def test_fidelity_with_phase_offset() -> None:
    assert fidelity_with_offset(ShrinkFactors(0.6, 0.3, phi_rot=math.pi / 3)) == pytest.approx(0.65)


def test_gamma_matrix_requires_four_by_four() -> None:
    with pytest.raises(DimensionMismatchError):
        GammaMatrix(np.eye(3))


def test_universal_cloner_shrinks_isotropically() -> None:
    for keep in (0, 1):
        shrink = extract_shrink(universal_12_channel(), keep=keep)
        assert shrink.eta_xy == pytest.approx(2.0 / 3.0, abs=1e-12)
        assert shrink.eta_z == pytest.approx(2.0 / 3.0, abs=1e-12)


def _parity_channel():
    """测量两比特的 Z，输出奇偶 |i⊕j⟩⟨ij|"""
    ops = []
    for i in (0, 1):
        for j in (0, 1):
            op = np.zeros((2, 4))
            op[i ^ j, 2 * i + j] = 1.0
            ops.append(op)
    return make_channel(2, 1, ops)


def _random_density(rng: np.random.Generator) -> np.ndarray:
    m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    rho = m @ m.conj().T
    return rho / np.trace(rho)


def test_multi_copy_dephasing_channel_is_covariant() -> None:
    ch = _parity_channel()
    g = equatorial_family_gamma(ch)
    shrink = extract_shrink(ch)

    assert check_phase_covariance(ch).passed
    assert g.is_valid()
    assert np.allclose(np.diag(g.gamma).real, [1.0, 0.0, 1.0, 0.0])
    assert shrink.eta_xy == pytest.approx(0.0, abs=1e-12)
    assert shrink.eta_z == pytest.approx(0.0, abs=1e-12)
    assert shrink.z_offset == pytest.approx(1.0)


def test_multi_copy_gamma_rejects_non_covariant_channel() -> None:
    rotated = compose(measure_prepare_channel(2, 1), unitary_channel(HADAMARD))

    with pytest.raises(NotPhaseCovariantError):
        extract_shrink(rotated)


@pytest.mark.parametrize(
    "ch",
    [
        _amplitude_damping(0.35),
        pauli_channel([0.7, 0.1, 0.1, 0.1]),
        compose(_amplitude_damping(0.2), pauli_channel([0.8, 0.0, 0.0, 0.2])),
        conjugate_channel(_amplitude_damping(0.6), PAULI_X),
        restrict_outputs(optimal_12_clones_channel(EquatorConvention.XY), [1]),
        measure_prepare_channel(1, 1),
    ],
)
def test_matrix_form_reconstructs_channel_action(ch) -> None:
    rng = np.random.default_rng(20240611)
    g = gamma_from_kraus(ch)

    for _ in range(50):
        rho = _random_density(rng)
        assert np.allclose(predicted_output(g, rho), apply(ch, rho), atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=0.99),
    st.floats(min_value=0.0, max_value=0.5),
    st.booleans(),
)
def test_symmetrization_keeps_eta_xy_for_real_coherence(gamma: float, q: float, toward_one: bool) -> None:
    damping = _amplitude_damping(gamma)
    if toward_one:
        damping = conjugate_channel(damping, PAULI_X)
    ch = compose(damping, pauli_channel([1.0 - q, 0.0, 0.0, q]))

    before = gamma_from_kraus(ch)
    after = gamma_from_kraus(symmetrize_channel(ch))

    assert abs(before[3, 2].imag) <= 1e-12
    assert after[2, 2].real == pytest.approx(after[3, 3].real, abs=1e-12)
    assert shrink_from_gamma(after).eta_xy == pytest.approx(shrink_from_gamma(before).eta_xy, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=0.99),
    st.floats(min_value=0.0, max_value=2.0 * math.pi),
    st.floats(min_value=0.0, max_value=2.0 * math.pi),
)
def test_shrink_factors_ignore_kraus_remixing(gamma: float, theta: float, phase: float) -> None:
    ch = _amplitude_damping(gamma)
    w = np.array(
        [
            [math.cos(theta), -np.exp(1j * phase) * math.sin(theta)],
            [np.exp(-1j * phase) * math.sin(theta), math.cos(theta)],
        ]
    )
    remixed = make_channel(1, 1, [w[i, 0] * ch.kraus_ops[0] + w[i, 1] * ch.kraus_ops[1] for i in range(2)])

    original = shrink_from_gamma(gamma_from_kraus(ch))
    shrink = shrink_from_gamma(gamma_from_kraus(remixed))

    assert np.allclose(gamma_from_kraus(remixed).gamma, gamma_from_kraus(ch).gamma, atol=1e-12)
    assert shrink.eta_xy == pytest.approx(original.eta_xy, abs=1e-12)
    assert shrink.eta_z == pytest.approx(original.eta_z, abs=1e-12)
    assert shrink.z_offset == pytest.approx(original.z_offset, abs=1e-12)
