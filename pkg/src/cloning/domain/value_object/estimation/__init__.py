from .estimation import CovariantPovm, EstimationReport

__all__ = ["CovariantPovm", "EstimationReport"]
