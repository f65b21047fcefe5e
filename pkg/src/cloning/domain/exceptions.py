"""领域层异常类型定义"""

from typing import Sequence


class CloningDomainError(Exception):
    """相位协变克隆工具包的异常基类"""


class DimensionMismatchError(CloningDomainError, ValueError):
    """矩阵或态的维度不一致"""

    def __init__(self, expected: object, actual: object, context: str = "") -> None:
        self.expected = expected
        self.actual = actual
        self.context = context
        prefix = f"{context}: " if context else ""
        super().__init__(f"{prefix}dimension mismatch, expected {expected}, got {actual}")


class IndexOutOfRangeError(CloningDomainError, ValueError):
    """量子比特下标越界"""

    def __init__(self, index: int, n_qubits: int) -> None:
        self.index = index
        self.n_qubits = n_qubits
        super().__init__(f"qubit index {index} out of range for {n_qubits} qubits")


class NotDensityMatrixError(CloningDomainError, ValueError):
    """矩阵不满足密度矩阵条件（厄米、半正定、单位迹）"""

    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(f"not a density matrix: {reason}")


class BlochVectorTooLongError(CloningDomainError, ValueError):
    """Bloch 矢量长度超过 1"""

    def __init__(self, length: float) -> None:
        self.length = length
        super().__init__(f"Bloch vector length {length:.15g} exceeds 1")


class NotTracePreservingError(CloningDomainError, ValueError):
    """Kraus 算符不满足完备性 Σ A†A = I"""

    def __init__(self, residual: float) -> None:
        self.residual = residual
        super().__init__(f"Kraus set is not trace preserving, ||sum A^dag A - I|| = {residual:.3e}")


class NotCompletelyPositiveError(CloningDomainError, ValueError):
    """线性延拓得到的单比特映射不是完全正映射"""

    def __init__(self, min_eigenvalue: float) -> None:
        self.min_eigenvalue = min_eigenvalue
        super().__init__(
            f"effective map is not completely positive (min Choi eigenvalue {min_eigenvalue:.3e})"
        )


class NotPhaseCovariantError(CloningDomainError, ValueError):
    """信道不满足相位协变约束"""

    def __init__(self, residual: float, tolerance: float) -> None:
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"channel is not phase covariant (residual {residual:.3e} > {tolerance:.1e})"
        )


class InvalidCopiesError(CloningDomainError, ValueError):
    """拷贝数（N 或 L）不合法"""

    def __init__(self, name: str, value: object) -> None:
        self.name = name
        self.value = value
        super().__init__(f"{name} must be a positive integer, got {value!r}")


class TooFewNodesError(CloningDomainError, ValueError):
    """求积节点数不足"""

    def __init__(self, n_nodes: int, minimum: int) -> None:
        self.n_nodes = n_nodes
        self.minimum = minimum
        super().__init__(f"{n_nodes} quadrature nodes < required {minimum}")


class InvalidRangeError(CloningDomainError, ValueError):
    """(N, M) 取值范围不合法"""

    def __init__(self, n: object, m: object, reason: str = "") -> None:
        self.n = n
        self.m = m
        suffix = f" ({reason})" if reason else ""
        super().__init__(f"invalid range N={n}, M={m}{suffix}")


class NormalizationViolatedError(CloningDomainError, ValueError):
    """拟设系数不满足归一化 a²+2b²+c²=1"""

    def __init__(self, residual: float) -> None:
        self.residual = residual
        super().__init__(f"a^2+2b^2+c^2-1 = {residual:.3e} violates normalization")


class InfeasiblePointError(CloningDomainError, ValueError):
    """拟设参数点不可行"""

    def __init__(self, point: Sequence[float], reason: str) -> None:
        self.point = tuple(point)
        self.reason = reason
        super().__init__(f"infeasible point {self.point}: {reason}")


class NotConvergedError(CloningDomainError, RuntimeError):
    """数值优化未收敛"""

    def __init__(self, evaluations: int, max_evaluations: int) -> None:
        self.evaluations = evaluations
        self.max_evaluations = max_evaluations
        super().__init__(
            f"optimizer did not converge after {evaluations} evaluations (limit {max_evaluations})"
        )
