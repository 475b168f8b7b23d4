"""Configuration loader for the certification toolkit."""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Dict, Optional

import yaml
from dotenv import load_dotenv

from core.errors import ConfigError

LOGGER = logging.getLogger(__name__)

DEFAULT_ORDER_CAP = 20_000
DEFAULT_CAP_ENV = "POLECOVER_GROUP_CAP"


class BaseKind(str, Enum):
    """Kind of the base differential chosen by the realization pipeline."""

    SECOND = "second"
    THIRD = "third"


@dataclass
class GroupsConfig:
    """Limits for permutation group enumeration."""

    order_cap: int = DEFAULT_ORDER_CAP
    order_cap_env: Optional[str] = DEFAULT_CAP_ENV

    @property
    def effective_order_cap(self) -> int:
        raw = os.getenv(self.order_cap_env) if self.order_cap_env else None
        if raw is None or raw.strip() == "":
            return self.order_cap
        try:
            cap = int(raw)
        except ValueError as exc:
            raise ConfigError(f"{self.order_cap_env} must be an integer, got {raw!r}") from exc
        if cap <= 0:
            raise ConfigError(f"{self.order_cap_env} must be positive, got {cap}")
        return cap

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, object]]) -> "GroupsConfig":
        if not data:
            return cls()
        return cls(**data)


@dataclass
class CertificatesConfig:
    """Certificate serialization settings."""

    schema_version: str = "1"
    indent: int = 2
    output_dir: str = "certificates"

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, object]]) -> "CertificatesConfig":
        if not data:
            return cls()
        payload = dict(data)
        if "schema_version" in payload:
            payload["schema_version"] = str(payload["schema_version"])
        return cls(**payload)


@dataclass
class RealizeConfig:
    """Defaults for the group realization pipeline."""

    default_kind: BaseKind = BaseKind.SECOND
    default_residue: str = "1"

    def __post_init__(self) -> None:
        if not isinstance(self.default_kind, BaseKind):
            self.default_kind = BaseKind(self.default_kind)

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, object]]) -> "RealizeConfig":
        if not data:
            return cls()
        payload = dict(data)
        if "default_residue" in payload:
            payload["default_residue"] = str(payload["default_residue"])
        return cls(**payload)


@dataclass
class LoggingConfig:
    """Log verbosity for the command line entry point."""

    level: str = "INFO"

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, object]]) -> "LoggingConfig":
        if not data:
            return cls()
        return cls(level=str(data.get("level", "INFO")).upper())


@dataclass
class AppConfig:
    """Top level configuration model."""

    groups: GroupsConfig = field(default_factory=GroupsConfig)
    certificates: CertificatesConfig = field(default_factory=CertificatesConfig)
    realize: RealizeConfig = field(default_factory=RealizeConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, object]]) -> "AppConfig":
        if not data:
            return cls()
        if not isinstance(data, dict):
            raise ConfigError("configuration root must be a mapping")
        try:
            return cls(
                groups=GroupsConfig.from_dict(data.get("groups")),
                certificates=CertificatesConfig.from_dict(data.get("certificates")),
                realize=RealizeConfig.from_dict(data.get("realize")),
                logging=LoggingConfig.from_dict(data.get("logging")),
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"invalid configuration: {exc}") from exc


def load_config(
    config_path: Optional[Path] = None,
    env_path: Optional[Path] = None,
) -> AppConfig:
    """Load configuration from YAML and environment variables."""

    base_path = Path(__file__).resolve().parents[1]
    if config_path is None:
        config_path = base_path / "config.yaml"
    if env_path is None:
        default_env = base_path / ".env"
        if default_env.exists():
            env_path = default_env

    if env_path is not None:
        load_dotenv(dotenv_path=env_path, override=False)

    if not Path(config_path).exists():
        LOGGER.debug("No configuration at %s, using defaults", config_path)
        return AppConfig()

    with open(config_path, "r", encoding="utf-8") as fp:
        data = yaml.safe_load(fp) or {}
    return AppConfig.from_dict(data)


@lru_cache(maxsize=1)
def get_config() -> AppConfig:
    """Default configuration, loaded once per process."""

    return load_config()


def group_order_cap(explicit: Optional[int] = None) -> int:
    """Resolve the group order cap: explicit argument, then env, then file."""

    if explicit is not None:
        return explicit
    return get_config().groups.effective_order_cap


__all__ = [
    "AppConfig",
    "BaseKind",
    "CertificatesConfig",
    "GroupsConfig",
    "LoggingConfig",
    "RealizeConfig",
    "get_config",
    "group_order_cap",
    "load_config",
]
