"""Command line front end.

Every verb reads its input as a file path or inline JSON, writes one output
document to stdout and logs to stderr. Exit codes: 0 success, 2 invalid
input, 3 certification refused, 1 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

import pandas as pd
from pydantic import BaseModel, ValidationError

from bounds.signatures import Tristate, check_translation_bound, max_admissible_degree
from cli.schemas import (
    CertificateDocument,
    CharacterDocument,
    CoverDocument,
    GroupDocument,
    error_pointer,
)
from core.certificate_store import load_certificate, save_certificate
from core.config_loader import get_config
from core.errors import InvalidInput, PolecoverError
from core.serialization import dumps
from cover.periods import period_lattice
from cover.surface import covered_surface
from cover.translations import is_large, translation_group
from haupt.character import factors_through_sphere_cover, haupt_realizable
from projective.structure import extend_to_bps
from realize.pipeline import realize_group, realize_hurwitz, verify_certificate
from spherediff.differential import DifferentialKind

LOGGER = logging.getLogger(__name__)

Rows = List[Dict[str, Any]]


def configure_logging(level: str | None = None) -> None:
    logging.basicConfig(
        level=getattr(logging, (level or get_config().logging.level).upper(), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polecover", description="Translation surfaces with poles as group covers")
    parser.add_argument("--log-level", default=None, help="Override the configured log level")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, help_text: str, default_format: str = "json") -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "table"), default=default_format)
        return p

    for verb, text in (
        ("cover", "Genus and singularity data of a cover"),
        ("periods", "Period lattice of a cover"),
        ("autos", "Certified translation group of a cover"),
        ("extend", "Branched projective structure of a second-kind cover"),
    ):
        add(verb, text).add_argument("--cover", required=True, help="Cover JSON: path or inline")

    for verb, text in (
        ("realize", "Realize a group as the translation group of a surface"),
        ("hurwitz", "Realize a (2,3,7) quotient with 84(g-1) translations"),
    ):
        p = add(verb, text)
        p.add_argument("--group", help="Group JSON: path or inline")
        p.add_argument("--output", help="Also write the certificate to this path")
        p.add_argument("--verify", metavar="PATH", help="Verify an existing certificate instead")
        if verb == "realize":
            p.add_argument("--kind", choices=("second", "third"), default=None)
            p.add_argument("--residue", default=None, help="Residue of the extra pole for --kind third")

    p = add("haupt", "Realizability verdict for a period character")
    p.add_argument("--character", required=True, help="Character JSON: path or inline")
    p.add_argument("--kind", choices=("second", "third"), default=None, help="Requested kind of the differential")

    p = add("bounds", "Riemann-Hurwitz degree bounds", default_format="table")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--large", default="unknown", help="true, false or unknown")
    p.add_argument("--aut-size", type=int, default=None)
    p.add_argument("--holomorphic", action="store_true")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


# input -----------------------------------------------------------------------

def read_json(source: str) -> Any:
    """Parse ``source`` as a path when such a file exists, else as inline JSON."""

    candidate = Path(source)
    try:
        is_file = candidate.is_file()
    except OSError:
        is_file = False
    text = candidate.read_text(encoding="utf-8") if is_file else source
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        where = str(candidate) if is_file else "inline JSON"
        raise InvalidInput(f"{where}: malformed JSON at line {exc.lineno} column {exc.colno}") from exc


def load_document(source: Optional[str], model: type[BaseModel], flag: str) -> Any:
    if not source:
        raise InvalidInput(f"{flag} is required")
    return model.model_validate(read_json(source))


# output ----------------------------------------------------------------------

def render(document: Any, rows: Rows, fmt: str) -> str:
    if fmt == "table":
        if not rows:
            return "(empty)"
        return pd.DataFrame(rows).to_string(index=False)
    return dumps(document)


def _summary_rows(pairs: Dict[str, Any]) -> Rows:
    return [{"quantity": key, "value": value} for key, value in pairs.items()]


# verbs -----------------------------------------------------------------------

def cmd_cover(args: argparse.Namespace):
    surface = covered_surface(load_document(args.cover, CoverDocument, "--cover").to_spec())
    document = {"surface": surface.summary(), "checks": surface.checks.to_list()}
    rows = [{"order": order, "count": count} for order, count in surface.singularity_table().items()]
    return document, rows


def cmd_periods(args: argparse.Namespace):
    surface = covered_surface(load_document(args.cover, CoverDocument, "--cover").to_spec())
    periods = period_lattice(surface)
    rows = [{"generator": str(g), "unit": "2*pi*i"} for g in periods.generators()]
    return {"period_lattice": periods.to_json(), "checks": surface.checks.to_list()}, rows


def cmd_autos(args: argparse.Namespace):
    surface = covered_surface(load_document(args.cover, CoverDocument, "--cover").to_spec())
    aut = translation_group(surface)
    large = is_large(surface, aut)
    document = {"aut": aut.to_json(), "is_large": large, "genus": surface.genus}
    rows = _summary_rows({"lower": aut.lower, "upper": aut.upper, "status": aut.status.value, "is_large": large.value})
    return document, rows


def cmd_extend(args: argparse.Namespace):
    surface = covered_surface(load_document(args.cover, CoverDocument, "--cover").to_spec())
    data = extend_to_bps(surface)
    rows = [r.to_json() for r in data.records]
    return {"projective": data.to_json(), "checks": surface.checks.to_list()}, rows


def _verify(path: str):
    payload = load_certificate(Path(path))
    CertificateDocument.model_validate(payload)
    report = verify_certificate(payload)
    rows = [{"field": k, "agrees": v} for k, v in report.agreements.items()]
    if not report.ok:
        LOGGER.error("Certificate %s does not reproduce", path)
    return report.to_json(), rows, (0 if report.ok else 2)


def _certificate_output(cert, output: Optional[str]):
    payload = cert.to_dict()
    if output:
        save_certificate(payload, Path(output))
    rows = _summary_rows(
        {
            "genus": payload["genus"],
            "aut": payload["aut"],
            "bound": payload["bound"],
            "kind": payload["kind"],
            "period rank": payload["period_lattice"]["rank"],
        }
    )
    return payload, rows


def cmd_realize(args: argparse.Namespace):
    if args.verify:
        return _verify(args.verify)
    group = load_document(args.group, GroupDocument, "--group").to_group()
    generators = list(group.generators) or [group.identity]
    cert = realize_group(group, generators, kind=args.kind, residue=args.residue)
    return _certificate_output(cert, args.output)


def cmd_hurwitz(args: argparse.Namespace):
    if args.verify:
        return _verify(args.verify)
    group = load_document(args.group, GroupDocument, "--group").to_group()
    cert = realize_hurwitz(group)
    if cert is None:
        document = {"found": False, "group_order": group.order}
        return document, _summary_rows({"found": False, "group order": group.order})
    return _certificate_output(cert, args.output)


def cmd_haupt(args: argparse.Namespace):
    chi = load_document(args.character, CharacterDocument, "--character").to_character()
    requested = DifferentialKind(args.kind) if args.kind else None
    result = haupt_realizable(chi, requested_kind=requested)
    document = result.to_json()
    document["factors_through_sphere_cover"] = factors_through_sphere_cover(chi)
    rows = _summary_rows({"verdict": result.verdict.value, "volume": str(result.volume), "lattice": result.lattice.kind.value})
    return document, rows


def cmd_bounds(args: argparse.Namespace):
    large = Tristate.coerce(args.large)
    bound = max_admissible_degree(args.genus, large is not Tristate.NO)
    document: Dict[str, Any] = {"max_degree": bound.to_json()}
    pairs: Dict[str, Any] = {
        "max degree": bound.degree,
        "witness": str(bound.witness),
        "realizability": bound.realizability.value,
    }
    if args.aut_size is not None:
        check = check_translation_bound(args.genus, large, args.aut_size, holomorphic=args.holomorphic)
        document["check"] = check.to_json()
        pairs["verdict"] = check.verdict.value
        pairs["bound"] = check.bound
    return document, _summary_rows(pairs)


COMMANDS: Dict[str, Callable[[argparse.Namespace], tuple]] = {
    "cover": cmd_cover,
    "periods": cmd_periods,
    "autos": cmd_autos,
    "realize": cmd_realize,
    "hurwitz": cmd_hurwitz,
    "haupt": cmd_haupt,
    "bounds": cmd_bounds,
    "extend": cmd_extend,
}


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Run one command; returns the process exit code."""

    out = stdout or sys.stdout
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.log_level:
        logging.getLogger().setLevel(args.log_level.upper())
    try:
        result = COMMANDS[args.verb](args)
    except ValidationError as exc:
        LOGGER.error("Invalid input at %s", error_pointer(exc))
        return 2
    except PolecoverError as exc:
        LOGGER.error("%s: %s", type(exc).__name__, exc)
        return exc.exit_code
    document, rows = result[0], result[1]
    code = result[2] if len(result) > 2 else 0
    print(render(document, rows, args.format), file=out)
    return code


def main() -> None:
    configure_logging()
    raise SystemExit(run(sys.argv[1:]))


__all__ = ["COMMANDS", "build_parser", "configure_logging", "main", "parse_args", "read_json", "render", "run"]
