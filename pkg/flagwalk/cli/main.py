"""Command-line entry point: ``flagwalk <command> [INPUT|-] [options]``."""

import argparse
import sys
from collections.abc import Callable, Sequence
from typing import NoReturn, TextIO

from pydantic import BaseModel

from flagwalk.core.exceptions import (
    EXIT_INVALID_MAP,
    EXIT_OK,
    UsageException,
    exception_to_payload,
    exit_code_for,
)
from flagwalk.core.logging import get_logger, setup_logging
from flagwalk.models.automorphism import SubgroupSpec
from flagwalk.models.flag_system import FlagSystem
from flagwalk.repositories.fixtures import FixtureRepository
from flagwalk.schemas import (
    AxiomViolationSchema,
    ClassificationListSchema,
    ClassificationSchema,
    CycletOrbitSchema,
    CycletReportSchema,
    ErrorResponse,
    LabelSchema,
    MapInfoSchema,
    MessageResponse,
    SymmetryClassSchema,
    ValidationReportSchema,
    WalkOrbitReportSchema,
)
from flagwalk.services import AutGroupService, ClassifyService, CycletService, MapService
from flagwalk.services.families import build_delta, build_H, build_M
from flagwalk.services.flagmap import (
    dual,
    petrie,
    read_mapfile,
    require_valid,
    validate,
    write_mapfile,
)
from flagwalk.services.walks import WalkService

logger = get_logger(__name__)

COMMANDS = (
    "validate",
    "info",
    "sym",
    "walks",
    "classify",
    "dual",
    "petrie",
    "gen",
    "cyclets",
    "export-fixtures",
)

_GROUPS = {
    "full": SubgroupSpec.full,
    "rotation": SubgroupSpec.rotation,
    "facebip": SubgroupSpec.face_bipartite,
}


class _Parser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageException(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flagwalk", description="Consistent walks in combinatorial maps")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for command in COMMANDS:
        if command == "export-fixtures":
            p = sub.add_parser(command, help="Write every fixture as a mapfile")
            p.add_argument("directory", nargs="?", default=None, help="Target directory")
        else:
            p = sub.add_parser(command)
            p.add_argument("input", nargs="?", default=None, help="Mapfile path, or - for stdin")
            p.add_argument("--family", choices=["M", "delta", "H"], help="Generate instead")
            p.add_argument("--n", type=int, help="Family parameter n")
            p.add_argument("--a", type=int, help="Family parameter a (H only)")
            p.add_argument("--group", choices=list(_GROUPS), default="full", help="Subgroup")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--log-level", default=None, help="Override the configured log level")
    return parser


def _generate(args: argparse.Namespace) -> FlagSystem:
    if args.n is None:
        raise UsageException("--family needs --n")
    if args.family == "H":
        if args.a is None:
            raise UsageException("--family H needs --a")
        return build_H(args.n, args.a)
    if args.a is not None:
        raise UsageException("--a applies only to --family H")
    return build_M(args.n) if args.family == "M" else build_delta(args.n)


def load_input(args: argparse.Namespace, stdin: TextIO, check: bool = True) -> FlagSystem:
    """
    The map named by exactly one of INPUT and ``--family``.

    Raises:
        UsageException: If both or neither are given, or the file is unreadable
    """
    if (args.input is None) == (args.family is None):
        raise UsageException("Give exactly one of INPUT or --family")
    if args.family is not None:
        return _generate(args)
    if args.input == "-":
        text = stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise UsageException(f"Cannot read {args.input}: {exc.strerror}") from exc
    return read_mapfile(text, check=check)


def _validate(m: FlagSystem, args: argparse.Namespace) -> tuple[BaseModel, str, int]:
    report = validate(m)
    schema = ValidationReportSchema(
        valid=report.passed,
        n_flags=report.n_flags,
        violations=[AxiomViolationSchema.model_validate(v) for v in report.violations],
    )
    lines = ["valid" if report.passed else "invalid"]
    lines += [f"  {v.axiom.value}: {v.detail}" for v in report.violations]
    return schema, "\n".join(lines), EXIT_OK if report.passed else EXIT_INVALID_MAP


def _info(m: FlagSystem, args: argparse.Namespace) -> tuple[BaseModel, str, int]:
    maps = MapService(m)
    auts = AutGroupService(m, maps)
    fs = maps.face_structure
    genus = maps.genus_report()
    schema = MapInfoSchema(
        name=m.name,
        flags=m.n_flags,
        vertices=fs.n_vertices,
        edges=fs.n_edges,
        faces=fs.n_faces,
        euler_characteristic=genus.euler_characteristic,
        orientable=genus.orientable,
        genus=genus.genus,
        crosscaps=genus.crosscaps,
        valences=list(maps.valences),
        face_sizes=list(maps.face_sizes),
        equivelar=maps.is_equivelar,
        simple=maps.is_simple,
        group_order=auts.group.order,
        vertex_transitive=auts.is_vertex_transitive,
        edge_transitive=auts.is_edge_transitive,
        face_transitive=auts.is_face_transitive,
    )
    surface = f"genus {genus.genus}" if genus.orientable else f"crosscaps {genus.crosscaps}"
    text = (
        f"V={fs.n_vertices} E={fs.n_edges} F={fs.n_faces} chi={genus.euler_characteristic} "
        f"{surface} {'orientable' if genus.orientable else 'non-orientable'}\n"
        f"valences {' '.join(map(str, maps.valences))}\n"
        f"|Aut|={auts.group.order}"
    )
    return schema, text, EXIT_OK


def _sym(m: FlagSystem, args: argparse.Namespace) -> tuple[BaseModel, str, int]:
    auts = AutGroupService(m)
    cls = auts.symmetry_class()
    schema = SymmetryClassSchema(
        symmetry_class=str(cls),
        tag=cls.tag,
        flag_orbits=cls.flag_orbits,
        dart_transitive=cls.is_dart_transitive,
        group_order=auts.group.order,
    )
    return schema, str(cls), EXIT_OK


def _walks(m: FlagSystem, args: argparse.Namespace) -> tuple[BaseModel, str, int]:
    report = WalkService(m).enumerate_consistent_orbits(_GROUPS[args.group]())
    schema = WalkOrbitReportSchema.model_validate(report)
    lines = [f"q={report.valence} |G|={report.group_order} orbits={len(report)}"]
    for row in report.rows:
        flags = [
            "symmetric" if row.symmetric else "chiral",
            *(["line"] if row.is_line else []),
        ]
        lines.append(
            f"orbit {row.flag_orbit} {row.kind}: length {row.length} "
            f"size {row.orbit_size} {' '.join(flags)}"
        )
    return schema, "\n".join(lines), EXIT_OK


def _classify(m: FlagSystem, args: argparse.Namespace) -> tuple[BaseModel, str, int]:
    results = ClassifyService(m).classify_orbits(_GROUPS[args.group]())
    items = [
        ClassificationSchema(
            flag_orbit=row.flag_orbit,
            kind=row.kind.tag,
            j=row.j,
            primary=result.primary.tag if result.primary is not None else None,
            labels=[LabelSchema.model_validate(label) for label in result.labels],
            is_line=result.is_line,
            one_vertex_map=result.one_vertex_map,
            proof_case=result.trace.proof_case,
            edges=list(result.trace.edges),
            vertices=list(result.trace.vertices),
        )
        for row, result in results
    ]
    lines = []
    for row, result in results:
        tags = ",".join(tag.value for tag in result.tags) or "-"
        extra = " line" if result.is_line else ""
        lines.append(f"orbit {row.flag_orbit} {row.kind}: {tags}{extra}")
    return ClassificationListSchema(items=items), "\n".join(lines), EXIT_OK


def _cyclets(m: FlagSystem, args: argparse.Namespace) -> tuple[BaseModel, str, int]:
    report = CycletService(m).consistent_cyclets(_GROUPS[args.group]())
    schema = CycletReportSchema(
        valence=report.valence,
        group_order=report.group_order,
        expected=report.expected,
        matches=report.matches,
        orbits=[
            CycletOrbitSchema(key=list(o.key), length=o.length, size=o.size)
            for o in report.orbits
        ],
    )
    verdict = "matches" if report.matches else "differs from"
    text = f"{len(report.orbits)} cyclet orbits, {verdict} q - 1 = {report.expected}"
    return schema, text, EXIT_OK


_REPORTS: dict[str, Callable[[FlagSystem, argparse.Namespace], tuple[BaseModel, str, int]]] = {
    "validate": _validate,
    "info": _info,
    "sym": _sym,
    "walks": _walks,
    "classify": _classify,
    "cyclets": _cyclets,
}

_TRANSFORMS: dict[str, Callable[[FlagSystem], FlagSystem]] = {
    "dual": dual,
    "petrie": petrie,
    "gen": lambda m: m,
}


def _emit(stdout: TextIO, schema: BaseModel, text: str, as_json: bool) -> None:
    stdout.write((schema.model_dump_json(indent=2) if as_json else text) + "\n")


def run(
    argv: Sequence[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
) -> int:
    """
    Execute one command.

    Args:
        argv: Arguments without the program name
        stdin: Stream read for ``-``
        stdout: Stream receiving reports and mapfiles

    Returns:
        Exit code: 0 success, 1 invalid map, 2 usage error, 3 theorem violation,
            4 internal error
    """
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    as_json = argv is not None and "--json" in argv

    try:
        args = build_parser().parse_args(argv)
        as_json = args.json
        setup_logging(args.log_level)

        if args.command == "export-fixtures":
            paths = FixtureRepository().export(args.directory)
            message = f"Exported {len(paths)} fixtures"
            _emit(stdout, MessageResponse(message=message), message, as_json)
            return EXIT_OK

        if args.command == "gen" and args.family is None:
            raise UsageException("gen needs --family")
        m = load_input(args, stdin, check=args.command != "validate")

        if args.command in _TRANSFORMS:
            out = _TRANSFORMS[args.command](m)
            require_valid(out)
            stdout.write(write_mapfile(out) + "\n")
            return EXIT_OK

        schema, text, code = _REPORTS[args.command](m, args)
        _emit(stdout, schema, text, as_json)
        return code
    except Exception as exc:
        code = exit_code_for(exc)
        logger.debug("Command failed with exit code %d", code, exc_info=True)
        payload = exception_to_payload(exc)
        if as_json:
            error = ErrorResponse(message=payload["message"], details=payload.get("details", {}))
            stdout.write(error.model_dump_json(indent=2) + "\n")
        print(f"error: {payload['message']}", file=sys.stderr)
        if "detail" in payload:
            print(f"  {payload['detail']}", file=sys.stderr)
        for key, value in payload.get("details", {}).items():
            print(f"  {key}: {value}", file=sys.stderr)
        return code


def main() -> None:
    sys.exit(run())
