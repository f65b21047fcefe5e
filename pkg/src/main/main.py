"""
main.py - pcclone 命令行入口

子命令:
    bound     相位协变克隆保真度上界表
    figure    N=1 时上界与通用克隆两条曲线的数据
    clone     最优 1→2 克隆机作用于赤道态
    verify    运行不变量检验套件
    bb84      BB84 对称克隆攻击的扰动报告
    estimate  协变相位估计（数值 POVM 与闭式对照）
    optimize  对称拟设的数值优化

退出码: 0 成功，1 检验未通过，2 用法或输入错误。
"""
import argparse
import logging
import sys
from pathlib import Path

# 添加项目根目录到 Python 路径
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.cloning.application import CommandWorkflow, VerificationSuite, VerificationWorkflow
from src.cloning.application.payload import CommandPayload
from src.cloning.domain.exceptions import CloningDomainError, NotConvergedError
from src.cloning.domain.value_object import EquatorConvention
from src.cloning.infrastructure.reporting import OutputFormat, write_payload
from src.main.config.config_loader import ConfigLoader
from src.main.config.numerics_config_loader import (
    load_estimation_config,
    load_optimizer_config,
    load_tolerance_config,
)
from src.main.utils.logging_setup import setup_logging

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

logger = logging.getLogger(__name__)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        type=str,
        default=None,
        choices=[fmt.value for fmt in OutputFormat],
        help="输出格式 (缺省取 PCCLONE_FORMAT，否则 csv)",
    )
    common.add_argument(
        "--log-level",
        type=str,
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="日志级别",
    )
    common.add_argument("--log-dir", type=str, default=None, help="日志目录 (缺省不写文件)")
    return common


def build_parser() -> argparse.ArgumentParser:
    """构建 pcclone 命令解析器。"""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="pcclone",
        description="相位协变量子克隆的模拟与验证工具",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    bound = subparsers.add_parser("bound", parents=[common], help="保真度上界表")
    bound.add_argument("--n", type=int, required=True, help="输入拷贝数 N")
    bound.add_argument("--m-max", type=int, required=True, help="最大输出拷贝数")

    figure = subparsers.add_parser("figure", parents=[common], help="N=1 两条曲线的数据")
    figure.add_argument("--m-max", type=int, default=30, help="最大输出拷贝数 (>= 2)")

    clone = subparsers.add_parser("clone", parents=[common], help="最优 1->2 克隆")
    clone.add_argument("--phi", type=float, required=True, help="赤道相位 (弧度)")
    clone.add_argument(
        "--convention",
        type=str,
        default=EquatorConvention.XZ.value,
        choices=[c.value for c in EquatorConvention],
        help="赤道平面",
    )

    verify = subparsers.add_parser("verify", parents=[common], help="运行检验套件")
    verify.add_argument(
        "--suite",
        type=str,
        default=VerificationSuite.ALL.value,
        choices=[s.value for s in VerificationSuite],
    )
    verify.add_argument("--tol", type=float, default=None, help="覆盖所有阈值型检验的容差")

    subparsers.add_parser("bb84", parents=[common], help="BB84 扰动报告")

    estimate = subparsers.add_parser("estimate", parents=[common], help="协变相位估计")
    estimate.add_argument("--n", type=int, required=True, help="拷贝数 N")
    estimate.add_argument("--nodes", type=int, default=None, help="求积节点数 (>= 2N+3)")
    estimate.add_argument("--phi", type=float, default=0.0, help="输入相位")

    optimize = subparsers.add_parser("optimize", parents=[common], help="对称拟设数值优化")
    optimize.add_argument("--symmetric", action="store_true", help="强制 c = a")

    return parser


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """
    解析命令行参数

    Returns:
        解析后的参数命名空间
    """
    return build_parser().parse_args(argv)


def run_command(args: argparse.Namespace) -> tuple[CommandPayload, bool]:
    """执行子命令，返回载荷与检验是否通过"""
    workflow = CommandWorkflow(load_estimation_config(), load_optimizer_config())

    if args.command == "bound":
        return workflow.bound(args.n, args.m_max), True
    if args.command == "figure":
        if args.m_max < 2:
            raise argparse.ArgumentTypeError("--m-max must be >= 2")
        return workflow.figure(args.m_max), True
    if args.command == "clone":
        return workflow.clone(args.phi, EquatorConvention(args.convention)), True
    if args.command == "bb84":
        return workflow.bb84(), True
    if args.command == "estimate":
        return workflow.estimate(args.n, args.nodes, args.phi), True
    if args.command == "optimize":
        return workflow.optimize(symmetric=args.symmetric), True

    verification = VerificationWorkflow(
        tolerances=load_tolerance_config(),
        estimation_config=load_estimation_config(),
        optimizer_config=load_optimizer_config(),
        tol_override=args.tol,
    )
    return verification.payload(args.suite)


def main(argv: list[str] | None = None) -> int:
    """主函数"""
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    setup_logging(args.log_level, args.log_dir)
    fmt = OutputFormat(args.format or ConfigLoader.default_format())

    try:
        payload, passed = run_command(args)
    except NotConvergedError as exc:
        logger.error("%s failed: %s", args.command, exc)
        print(f"pcclone {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (CloningDomainError, argparse.ArgumentTypeError) as exc:
        logger.error("%s rejected input: %s", args.command, exc)
        print(f"pcclone {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    write_payload(payload, fmt, sys.stdout)
    if not passed:
        failed = [row["check"] for row in payload.records() if not row.get("passed", True)]
        print(f"pcclone verify: failed checks: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
