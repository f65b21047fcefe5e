"""
numerics_config_loader.py - 数值配置加载器

从 config/numerics/ 目录下的 TOML 文件加载容差、求积与优化配置，
并转换为对应的配置值对象。

优先级: overrides > TOML 文件 > dataclass 默认值
"""
import sys
from dataclasses import fields
from pathlib import Path
from typing import Any, Optional, Type, TypeVar

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from src.cloning.domain.value_object.config.numerics_config import (
    EstimationConfig,
    OptimizerConfig,
    ToleranceConfig,
)

# 项目根目录 (从 src/main/config/ 向上 3 级)
_PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent.parent
NUMERICS_CONFIG_DIR = _PROJECT_ROOT / "config" / "numerics"

ConfigT = TypeVar("ConfigT")


def _load_toml(path: Path) -> dict:
    """加载 TOML 文件，文件不存在或无法解析时返回空字典"""
    if not path.exists():
        return {}
    try:
        with open(path, "rb") as f:
            return tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError):
        return {}


def _build(
    config_cls: Type[ConfigT],
    path: Path,
    section: str,
    overrides: Optional[dict],
) -> ConfigT:
    data = _load_toml(path).get(section, {})
    overrides = overrides or {}
    kwargs: dict[str, Any] = {}
    for field in fields(config_cls):
        if field.name in overrides:
            kwargs[field.name] = overrides[field.name]
        elif field.name in data:
            kwargs[field.name] = data[field.name]
    return config_cls(**kwargs)


def load_tolerance_config(
    overrides: Optional[dict] = None,
    config_dir: Optional[Path] = None,
) -> ToleranceConfig:
    """加载容差层级 (config/numerics/tolerance.toml 的 [tolerance] 节)"""
    directory = config_dir or NUMERICS_CONFIG_DIR
    return _build(ToleranceConfig, directory / "tolerance.toml", "tolerance", overrides)


def load_estimation_config(
    overrides: Optional[dict] = None,
    config_dir: Optional[Path] = None,
) -> EstimationConfig:
    """加载相位估计求积配置 (config/numerics/estimation.toml 的 [quadrature] 节)"""
    directory = config_dir or NUMERICS_CONFIG_DIR
    return _build(EstimationConfig, directory / "estimation.toml", "quadrature", overrides)


def load_optimizer_config(
    overrides: Optional[dict] = None,
    config_dir: Optional[Path] = None,
) -> OptimizerConfig:
    """加载优化器配置 (config/numerics/optimizer.toml 的 [optimizer] 节)"""
    directory = config_dir or NUMERICS_CONFIG_DIR
    return _build(OptimizerConfig, directory / "optimizer.toml", "optimizer", overrides)
