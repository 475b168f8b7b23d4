"""Certificate persistence.

Certificates are written as sorted-key JSON under the configured output
directory; a sidecar hash is not stored, it is recomputed on load.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from core.config_loader import get_config
from core.errors import InvalidInput
from core.serialization import canonical_hash, dumps

LOGGER = logging.getLogger(__name__)


def default_output_dir() -> Path:
    return Path(get_config().certificates.output_dir)


def save_certificate(payload: Dict[str, Any], path: Optional[Path] = None, indent: Optional[int] = None) -> Path:
    """Persist a certificate payload and return the written path."""

    if indent is None:
        indent = get_config().certificates.indent
    if path is None:
        digest = canonical_hash(payload)[:16]
        path = default_output_dir() / f"certificate-{digest}.json"
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(payload, indent=indent) + "\n", encoding="utf-8")
    LOGGER.info("Certificate written to %s", path)
    return path


def load_certificate(path: Path) -> Dict[str, Any]:
    """Load a certificate document; malformed JSON is an input error."""

    path = Path(path)
    if not path.exists():
        raise InvalidInput(f"certificate file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}") from exc
    if not isinstance(data, dict):
        raise InvalidInput(f"{path}: certificate root must be an object")
    return data


__all__ = ["default_output_dir", "load_certificate", "save_certificate"]
