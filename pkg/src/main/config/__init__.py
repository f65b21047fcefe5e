"""
src/main/config/ - 配置加载模块

包含通用 TOML/环境变量加载器、日志配置与数值配置加载器。
"""

from src.main.config.config_loader import ConfigLoader
from src.main.config.numerics_config_loader import (
    load_estimation_config,
    load_optimizer_config,
    load_tolerance_config,
)

__all__ = [
    "ConfigLoader",
    "load_estimation_config",
    "load_optimizer_config",
    "load_tolerance_config",
]
