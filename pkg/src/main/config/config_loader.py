"""
config_loader.py - 配置加载器

支持:
1. TOML 配置文件
2. 环境变量（.env 经 python-dotenv 载入）
"""
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

# Python 3.11+ 内置 tomllib，之前版本使用 tomli
if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

FORMAT_ENV = "PCCLONE_FORMAT"
DEFAULT_FORMAT = "csv"
_VALID_FORMATS = ("csv", "json", "tsv")


class ConfigLoader:
    """
    配置加载器

    - 数值配置: 从 TOML 文件加载
    - 运行环境: 从环境变量加载 (.env)
    """

    @staticmethod
    def load_toml(path: str | Path) -> Dict[str, Any]:
        """加载 TOML 配置文件"""
        with open(path, "rb") as f:
            return tomllib.load(f)

    @staticmethod
    def load_env(env_file: Optional[str] = None) -> None:
        """载入 .env，不覆盖已存在的环境变量"""
        load_dotenv(dotenv_path=env_file, override=False)

    @staticmethod
    def default_format(env_file: Optional[str] = None) -> str:
        """PCCLONE_FORMAT 指定的默认输出格式，非法或缺省时为 csv"""
        ConfigLoader.load_env(env_file)
        value = os.getenv(FORMAT_ENV, DEFAULT_FORMAT).strip().lower()
        return value if value in _VALID_FORMATS else DEFAULT_FORMAT
