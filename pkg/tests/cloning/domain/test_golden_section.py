from __future__ import annotations

import pytest

from src.cloning.domain.domain_service.optimization import EvaluationBudget, bracket_maximum, golden_maximize
from src.cloning.domain.exceptions import NotConvergedError


def _parabola(x: float) -> float:
    return -(x - 0.3) ** 2


def test_golden_maximize_finds_interior_peak() -> None:
    result = golden_maximize(_parabola, 0.0, 1.0, 1e-10)

    assert result.argmax == pytest.approx(0.3, abs=1e-8)
    assert result.maximum == pytest.approx(0.0, abs=1e-15)
    assert result.converged
    assert result.evaluations > 10


def test_golden_maximize_returns_endpoint_for_monotone_function() -> None:
    result = golden_maximize(lambda x: x, 0.0, 1.0, 1e-8)

    assert result.argmax == 1.0
    assert result.maximum == 1.0


@pytest.mark.parametrize("x0", [0.0, 0.05, 0.29, 0.6, 1.0])
def test_bracket_contains_maximum(x0: float) -> None:
    lo, hi = bracket_maximum(_parabola, x0, 0.0, 1.0, 0.01)

    assert lo <= 0.3 <= hi


def test_evaluation_budget_raises_when_exhausted() -> None:
    budget = EvaluationBudget(_parabola, max_evaluations=5)

    for _ in range(5):
        budget(0.1)
    assert budget.evaluations == 5
    with pytest.raises(NotConvergedError):
        budget(0.1)


@pytest.mark.parametrize("value", [float("nan"), float("inf")])
def test_golden_maximize_flags_non_finite_objective(value: float) -> None:
    result = golden_maximize(lambda x: value, 0.0, 1.0, 1e-6)

    assert not result.converged
