import os
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.config_loader import BaseKind, group_order_cap, load_config
from core.errors import ConfigError


@pytest.fixture()
def temp_files(tmp_path: Path):
    env_path = tmp_path / ".env"
    env_path.write_text("POLECOVER_TEST_CAP=512\n", encoding="utf-8")

    config_path = tmp_path / "config.yaml"
    config_path.write_text(
        """
groups:
  order_cap: 900
  order_cap_env: "POLECOVER_TEST_CAP"
certificates:
  schema_version: 1
  indent: 4
  output_dir: "out/certs"
realize:
  default_kind: "third"
  default_residue: "1/2"
logging:
  level: "debug"
""",
        encoding="utf-8",
    )

    yield config_path, env_path

    if "POLECOVER_TEST_CAP" in os.environ:
        del os.environ["POLECOVER_TEST_CAP"]


def test_load_config_with_env(temp_files):
    config_path, env_path = temp_files
    config = load_config(config_path=config_path, env_path=env_path)

    assert config.groups.order_cap == 900
    assert config.groups.effective_order_cap == 512
    assert config.certificates.schema_version == "1"
    assert config.certificates.indent == 4
    assert config.certificates.output_dir == "out/certs"
    assert config.realize.default_kind is BaseKind.THIRD
    assert config.realize.default_residue == "1/2"
    assert config.logging.level == "DEBUG"


def test_defaults_when_sections_missing(tmp_path: Path):
    cfg_path = tmp_path / "config.yaml"
    cfg_path.write_text(
        """
certificates:
  indent: 0
""",
        encoding="utf-8",
    )

    config = load_config(config_path=cfg_path)

    assert config.certificates.indent == 0
    assert config.certificates.schema_version == "1"
    assert config.groups.order_cap == 20000
    assert config.realize.default_kind is BaseKind.SECOND
    assert config.logging.level == "INFO"


def test_missing_file_gives_defaults(tmp_path: Path):
    config = load_config(config_path=tmp_path / "absent.yaml")

    assert config.groups.order_cap_env == "POLECOVER_GROUP_CAP"
    assert config.realize.default_residue == "1"


def test_env_override_must_be_positive_integer(tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
    config = load_config(config_path=tmp_path / "absent.yaml")

    monkeypatch.setenv("POLECOVER_GROUP_CAP", "lots")
    with pytest.raises(ConfigError):
        _ = config.groups.effective_order_cap

    monkeypatch.setenv("POLECOVER_GROUP_CAP", "0")
    with pytest.raises(ConfigError):
        _ = config.groups.effective_order_cap

    monkeypatch.setenv("POLECOVER_GROUP_CAP", "64")
    assert config.groups.effective_order_cap == 64


def test_unknown_keys_are_config_errors(tmp_path: Path):
    cfg_path = tmp_path / "config.yaml"
    cfg_path.write_text("groups:\n  order_limit: 5\n", encoding="utf-8")

    with pytest.raises(ConfigError):
        load_config(config_path=cfg_path)


def test_explicit_cap_wins():
    assert group_order_cap(7) == 7
