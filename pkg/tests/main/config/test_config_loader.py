from __future__ import annotations

import pytest

from src.main.config.config_loader import ConfigLoader
from src.main.config.logging_config_loader import (
    LOGGING_CONFIG_ENV,
    get_logger_level_overrides,
    resolve_logging_config_path,
)


def test_load_toml(tmp_path) -> None:
    path = tmp_path / "sample.toml"
    path.write_text("[quadrature]\nnodes_per_copy = 6\n", encoding="utf-8")

    assert ConfigLoader.load_toml(path) == {"quadrature": {"nodes_per_copy": 6}}


@pytest.mark.parametrize(("value", "expected"), [("JSON", "json"), (" tsv ", "tsv"), ("xml", "csv")])
def test_default_format_reads_environment(monkeypatch: pytest.MonkeyPatch, tmp_path, value: str, expected: str) -> None:
    monkeypatch.setenv("PCCLONE_FORMAT", value)

    assert ConfigLoader.default_format(str(tmp_path / ".env")) == expected


def test_default_format_reads_dotenv_file(monkeypatch: pytest.MonkeyPatch, tmp_path) -> None:
    monkeypatch.setenv("PCCLONE_FORMAT", "placeholder")
    monkeypatch.delenv("PCCLONE_FORMAT")
    env_file = tmp_path / ".env"
    env_file.write_text("PCCLONE_FORMAT=tsv\n", encoding="utf-8")

    assert ConfigLoader.default_format(str(env_file)) == "tsv"


def test_default_format_without_environment(monkeypatch: pytest.MonkeyPatch, tmp_path) -> None:
    monkeypatch.delenv("PCCLONE_FORMAT", raising=False)

    assert ConfigLoader.default_format(str(tmp_path / ".env")) == "csv"


def test_logger_level_overrides_skip_invalid_levels(tmp_path) -> None:
    path = tmp_path / "logging.toml"
    path.write_text(
        '[logger_levels]\nroot = "info"\n"src.cloning" = "debug"\nnoisy = "LOUD"\n',
        encoding="utf-8",
    )

    assert get_logger_level_overrides(str(path)) == {"root": "INFO", "src.cloning": "DEBUG"}


def test_logging_config_path_from_environment(monkeypatch: pytest.MonkeyPatch, tmp_path) -> None:
    target = tmp_path / "custom.toml"
    monkeypatch.setenv(LOGGING_CONFIG_ENV, str(target))

    assert resolve_logging_config_path() == target
    assert get_logger_level_overrides() == {}


def test_shipped_logging_config_has_no_active_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(LOGGING_CONFIG_ENV, raising=False)

    assert resolve_logging_config_path().name == "logging.toml"
    assert get_logger_level_overrides() == {}
