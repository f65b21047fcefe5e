"""相位协变克隆的应用层工作流。"""

from .command_workflow import CommandWorkflow
from .payload import CommandPayload
from .verification_workflow import CheckResult, VerificationSuite, VerificationWorkflow

__all__ = [
    "CheckResult",
    "CommandPayload",
    "CommandWorkflow",
    "VerificationSuite",
    "VerificationWorkflow",
]
