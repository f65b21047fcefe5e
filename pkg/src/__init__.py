"""项目根包。"""

__version__ = "0.1.0"
