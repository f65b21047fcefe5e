"""载荷写出器，支持 CSV / TSV（pandas）与 JSON。

格式约定:
| 格式 | 内容                                     | 数值                          |
|------|------------------------------------------|-------------------------------|
| csv  | 表头 + 记录行，逗号分隔，'\\n' 换行       | 最短往返 repr，∞ 写作 inf      |
| tsv  | 同 csv，制表符分隔                        | 同上                          |
| json | {"command", "params", "rows"/"report"}    | 同上，∞ 写作字符串 "inf"       |
"""

from __future__ import annotations

import io
import json
import math
from enum import Enum
from typing import Any, TextIO

import pandas as pd

from src.cloning.application.payload import CommandPayload


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    TSV = "tsv"


def _json_safe(value: Any) -> Any:
    if isinstance(value, dict):
        return {key: _json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(item) for item in value]
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def _frame(payload: CommandPayload) -> pd.DataFrame:
    """逐列 object dtype，保留 int / float 原样以便 str() 输出"""
    records = payload.records()
    columns = list(records[0]) if records else []
    return pd.DataFrame({col: pd.Series([row.get(col) for row in records], dtype=object) for col in columns})


def render_payload(payload: CommandPayload, fmt: OutputFormat | str) -> str:
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        return json.dumps(_json_safe(payload.to_dict()), ensure_ascii=False, indent=2, allow_nan=False) + "\n"

    buffer = io.StringIO()
    separator = "," if fmt == OutputFormat.CSV else "\t"
    _frame(payload).to_csv(buffer, sep=separator, index=False, lineterminator="\n")
    return buffer.getvalue()


def write_payload(payload: CommandPayload, fmt: OutputFormat | str, stream: TextIO) -> None:
    stream.write(render_payload(payload, fmt))
    stream.flush()
