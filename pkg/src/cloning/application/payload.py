"""命令输出载荷：command、params 以及 rows（表格）或 report（单条记录）。"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class CommandPayload:
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    rows: Optional[List[Dict[str, Any]]] = None
    report: Optional[Dict[str, Any]] = None

    def records(self) -> List[Dict[str, Any]]:
        """表格形式：rows 原样返回，report 视为单行"""
        if self.rows is not None:
            return list(self.rows)
        return [dict(self.report or {})]

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"command": self.command, "params": dict(self.params)}
        if self.rows is not None:
            data["rows"] = list(self.rows)
        if self.report is not None:
            data["report"] = dict(self.report)
        return data
