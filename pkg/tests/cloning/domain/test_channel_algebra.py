from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cloning.domain.domain_service.channel import (
    apply,
    apply_pure,
    choi_matrix,
    compose,
    conjugate_channel,
    effective_transfer,
    identity_channel,
    kraus_from_transfer,
    make_channel,
    pauli_channel,
    reduced_single_qubit_map,
    restrict_outputs,
    to_xy_convention,
    unitary_channel,
)
from src.cloning.domain.domain_service.cloning import optimal_12_channel, optimal_12_clones_channel
from src.cloning.domain.domain_service.estimation import measure_prepare_channel
from src.cloning.domain.domain_service.linalg import (
    IDENTITY,
    PAULI_X,
    PAULI_Z,
    bloch_from_density,
    density_from_bloch,
)
from src.cloning.domain.domain_service.state import XZ_TO_XY, basis_state, equatorial_state
from src.cloning.domain.exceptions import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotCompletelyPositiveError,
    NotTracePreservingError,
)
from src.cloning.domain.value_object import BlochVector, EquatorConvention

MIXED = density_from_bloch(BlochVector(0.3, -0.4, 0.5))


def test_make_channel_validates_completeness_and_shapes() -> None:
    with pytest.raises(NotTracePreservingError):
        make_channel(1, 1, [0.5 * IDENTITY])
    with pytest.raises(DimensionMismatchError):
        make_channel(1, 2, [IDENTITY])
    with pytest.raises(NotTracePreservingError):
        make_channel(1, 1, [])


def test_kraus_channel_is_immutable() -> None:
    ch = identity_channel()

    with pytest.raises(ValueError):
        ch.kraus_ops[0][0, 0] = 2.0
    assert len(ch) == 1
    assert ch.stacked.shape == (1, 2, 2)


def test_apply_and_apply_pure_agree() -> None:
    ch = pauli_channel([0.7, 0.1, 0.1, 0.1])
    psi = equatorial_state(0.8)

    assert np.allclose(apply(ch, psi.density()), apply_pure(ch, psi))
    assert np.allclose(apply(identity_channel(), MIXED), MIXED)
    with pytest.raises(DimensionMismatchError):
        apply(ch, np.eye(4) / 4.0)
    with pytest.raises(DimensionMismatchError):
        apply_pure(ch, basis_state("00"))


def test_compose_runs_first_then_second() -> None:
    flip_then_flip = compose(unitary_channel(PAULI_X), unitary_channel(PAULI_X))

    assert np.allclose(apply(flip_then_flip, MIXED), MIXED)
    with pytest.raises(DimensionMismatchError):
        compose(optimal_12_channel(), identity_channel())


def test_restrict_outputs_traces_out_other_qubits() -> None:
    cloner = optimal_12_channel()
    clones = restrict_outputs(cloner, [0, 1])
    psi = basis_state("0")

    assert clones.in_qubits == 1
    assert clones.out_qubits == 2
    assert np.trace(apply_pure(clones, psi)).real == pytest.approx(1.0)
    with pytest.raises(IndexOutOfRangeError):
        restrict_outputs(cloner, [3])


def test_effective_transfer_of_identity_is_matrix_units() -> None:
    transfer = effective_transfer(identity_channel())

    for j in range(2):
        for jp in range(2):
            unit = np.zeros((2, 2))
            unit[j, jp] = 1.0
            assert np.allclose(transfer[j, jp], unit)


def test_kraus_from_transfer_reproduces_pauli_channel() -> None:
    ch = pauli_channel([0.6, 0.2, 0.0, 0.2])

    rebuilt = kraus_from_transfer(effective_transfer(ch))

    assert np.allclose(apply(rebuilt, MIXED), apply(ch, MIXED))


def test_kraus_from_transfer_rejects_transpose_map() -> None:
    transfer = np.zeros((2, 2, 2, 2), dtype=np.complex128)
    for j in range(2):
        for jp in range(2):
            transfer[j, jp][jp, j] = 1.0

    assert np.linalg.eigvalsh(choi_matrix(transfer))[0] == pytest.approx(-1.0)
    with pytest.raises(NotCompletelyPositiveError):
        kraus_from_transfer(transfer)


def test_reduced_single_qubit_map() -> None:
    copies_identity = reduced_single_qubit_map(identity_channel(2), 2, keep=1)

    assert np.allclose(apply(copies_identity, MIXED), MIXED)
    with pytest.raises(DimensionMismatchError):
        reduced_single_qubit_map(identity_channel(2), 1)


def test_reduced_map_of_two_copy_estimation_is_not_completely_positive() -> None:
    # ½ − η̄_pe(2) < 0 在 Choi 谱中出现
    with pytest.raises(NotCompletelyPositiveError):
        reduced_single_qubit_map(measure_prepare_channel(2, 1), 2)


def test_conjugate_channel_rotates_clone_frame() -> None:
    assert np.allclose(
        apply(conjugate_channel(identity_channel(), XZ_TO_XY), MIXED),
        MIXED,
    )
    clones_xz = optimal_12_clones_channel(EquatorConvention.XZ)
    clones_xy = to_xy_convention(clones_xz)
    psi_xz = equatorial_state(0.9, EquatorConvention.XZ)
    psi_xy = equatorial_state(0.9, EquatorConvention.XY)

    out_xz = apply_pure(clones_xz, psi_xz)
    out_xy = apply_pure(clones_xy, psi_xy)
    w2 = np.kron(XZ_TO_XY, XZ_TO_XY)
    assert np.allclose(w2 @ out_xz @ w2.conj().T, out_xy)


def test_dephasing_pauli_channel_shrinks_equator() -> None:
    p = 0.15
    ch = pauli_channel([1.0 - p, 0.0, 0.0, p])

    bloch = bloch_from_density(apply_pure(ch, equatorial_state(0.0)))

    assert bloch.sx == pytest.approx(1.0 - 2.0 * p)
    assert math.isclose(bloch.sz, 0.0, abs_tol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.0, max_value=2.0 * math.pi), st.floats(min_value=0.0, max_value=1.0))
def test_unitary_remixing_of_kraus_operators_leaves_channel_unchanged(angle: float, p: float) -> None:
    ch = pauli_channel([1.0 - p, 0.0, 0.0, p])
    ops = [math.sqrt(1.0 - p) * IDENTITY, math.sqrt(p) * PAULI_Z]
    mixed = make_channel(
        1,
        1,
        [
            math.cos(angle) * ops[0] - math.sin(angle) * ops[1],
            math.sin(angle) * ops[0] + math.cos(angle) * ops[1],
        ],
    )

    assert np.allclose(apply(mixed, MIXED), apply(ch, MIXED), atol=1e-12)
