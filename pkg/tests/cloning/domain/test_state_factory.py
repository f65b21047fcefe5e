from __future__ import annotations

import math

import numpy as np
import pytest

from src.cloning.domain.domain_service.linalg import bloch_from_density
from src.cloning.domain.domain_service.state import (
    XZ_TO_XY,
    basis_state,
    bb84_states,
    dicke_basis,
    dicke_matrix,
    equatorial_state,
    product_copies,
    symmetric_projector,
    symmetric_support_residual,
)
from src.cloning.domain.exceptions import DimensionMismatchError, InvalidCopiesError, NotDensityMatrixError
from src.cloning.domain.value_object import EquatorConvention, PureState


@pytest.mark.parametrize(
    ("phi", "convention", "expected"),
    [
        (0.0, EquatorConvention.XY, (1.0, 0.0, 0.0)),
        (math.pi / 2, EquatorConvention.XY, (0.0, 1.0, 0.0)),
        (0.0, EquatorConvention.XZ, (0.0, 0.0, 1.0)),
        (math.pi / 2, EquatorConvention.XZ, (1.0, 0.0, 0.0)),
        (-math.pi / 2, EquatorConvention.XY, (0.0, -1.0, 0.0)),
    ],
)
def test_equatorial_state_bloch_vectors(phi: float, convention: EquatorConvention, expected: tuple) -> None:
    bloch = bloch_from_density(equatorial_state(phi, convention).density())

    assert bloch.as_array() == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("phi", [0.0, 0.4, 1.7, math.pi, 5.9])
def test_xz_to_xy_rotation_maps_equators(phi: float) -> None:
    rotated = PureState(1, XZ_TO_XY @ equatorial_state(phi, EquatorConvention.XZ).amplitudes)

    assert abs(rotated.overlap(equatorial_state(phi, EquatorConvention.XY))) == pytest.approx(1.0)


def test_bb84_states_form_two_orthonormal_bases() -> None:
    zero, one, zero_bar, one_bar = bb84_states()

    assert abs(zero.overlap(one)) == pytest.approx(0.0)
    assert abs(zero_bar.overlap(one_bar)) == pytest.approx(0.0)
    assert abs(zero.overlap(zero_bar)) ** 2 == pytest.approx(0.5)


def test_product_copies_validates_input() -> None:
    psi = equatorial_state(0.3)

    assert product_copies(psi, 3).n_qubits == 3
    with pytest.raises(InvalidCopiesError):
        product_copies(psi, 0)
    with pytest.raises(DimensionMismatchError):
        product_copies(basis_state("01"), 2)


def test_pure_state_rejects_unnormalized_amplitudes() -> None:
    with pytest.raises(NotDensityMatrixError):
        PureState(1, np.array([1.0, 1.0]))
    assert PureState.from_amplitudes([1.0, 1.0], normalize=True).n_qubits == 1


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_dicke_basis_is_orthonormal(n: int) -> None:
    columns = dicke_matrix(n)

    assert columns.shape == (2 ** n, n + 1)
    assert np.allclose(columns.conj().T @ columns, np.eye(n + 1))
    assert len(dicke_basis(n)) == n + 1
    assert np.trace(symmetric_projector(n)).real == pytest.approx(n + 1)


def test_dicke_state_with_one_excitation() -> None:
    expected = np.array([0.0, 1.0, 1.0, 0.0]) / math.sqrt(2.0)

    assert np.allclose(dicke_matrix(2)[:, 1], expected)
    with pytest.raises(InvalidCopiesError):
        dicke_matrix(0)


def test_symmetric_support_residual() -> None:
    copies = product_copies(equatorial_state(1.1), 3).density()
    singlet = PureState(2, np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2.0))

    assert symmetric_support_residual(copies, 3) == pytest.approx(0.0, abs=1e-12)
    assert symmetric_support_residual(singlet.density(), 2) == pytest.approx(1.0)
    with pytest.raises(DimensionMismatchError):
        symmetric_support_residual(copies, 2)
