"""Command-line interface.

Commands read flags (or a JSON file via --input), write exact JSON to
stdout, and use stable exit codes: 0 success, 2 domain error (bad
mathematics, e.g. non-admissible x-coordinates), 64 usage error, 74 I/O
error.  Identical invocations produce identical output bytes.  Every
command can record a run manifest (--manifest PATH) with sha256 digests
of its input and output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .errors import DomainError
from .exact import normalize_projective, rational
from .family import CurveWithPoints, twist_curve, twist_points
from .fiber import (
    XCoordinates,
    fiber_contains,
    fiber_equation_triples,
    fiber_equations,
    geometry_report,
)
from .elkies import ELKIES, dataset_self_check, verify_reproduction
from .maps import (
    ConicSpec,
    CubicSpec,
    conic_param,
    fermat_to_weierstrass,
    phi_forward,
    phi_inverse,
)
from .search import SearchConfig, cross_check, curve_census_entries, fiber_census_entries

USAGE_ERROR = 64
IO_ERROR = 74
DOMAIN_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _rational_list(text: str) -> list[Fraction]:
    return [rational(part) for part in text.split(",") if part.strip() != ""]


def _alphas(args) -> XCoordinates:
    return XCoordinates(tuple(_rational_list(args.alphas)), args.r)


def _search_config(args, mode: str) -> SearchConfig:
    workers = getattr(args, "workers", 1) or 1
    partition = (getattr(args, "worker_index", 0), workers) if workers > 1 else None
    return SearchConfig(args.height, mode, partition)


def _read_input(args) -> dict:
    if args.input == "-":
        raw = sys.stdin.buffer.read()
    else:
        with open(args.input, "rb") as handle:
            raw = handle.read()
    setattr(args, "_input_bytes", raw)
    return json.loads(raw.decode("utf-8"))


def _cmd_repro_elkies(args):
    report = verify_reproduction(ELKIES)
    return report.to_obj(), (0 if report.ok else DOMAIN_ERROR), "json"


def _cmd_fiber_eqs(args):
    a_n = _alphas(args)
    eqs = fiber_equations(a_n, args.s)
    c, pairs = fiber_equation_triples(a_n, args.s)
    payload = {
        "alphas": [str(a) for a in a_n.alphas],
        "r": args.r,
        "s": args.s,
        "equations": [eq.to_obj() for eq in eqs],
        "solved_form": {"c": str(c), "pairs": [[str(A), str(B)] for A, B in pairs]},
    }
    return payload, 0, "json"


def _cmd_verify_point(args):
    a_n = _alphas(args)
    point = normalize_projective(_rational_list(args.point))
    on_fiber = fiber_contains(a_n, args.s, point.coords)
    payload = {
        "alphas": [str(a) for a in a_n.alphas],
        "r": args.r,
        "s": args.s,
        "point": point.to_obj(),
        "on_fiber": on_fiber,
    }
    return payload, 0, "json"


def _cmd_genus(args):
    return geometry_report(args.n, args.s).to_obj(), 0, "json"


def _cmd_twist(args):
    cwp = CurveWithPoints.from_obj(_read_input(args))
    tc = twist_curve(cwp)
    images = twist_points(cwp)
    return {"twist": tc.to_obj(), "points": [p.to_obj() for p in images]}, 0, "json"


def _cmd_map(args):
    cwp = CurveWithPoints.from_obj(_read_input(args))
    a_n, image = phi_forward(cwp)
    payload = {
        "alphas": [str(a) for a in a_n.alphas],
        "r": cwp.curve.params.r,
        "s": cwp.curve.params.s,
        "fiber_point": image.to_obj(),
    }
    return payload, 0, "json"


def _cmd_map_inverse(args):
    a_n = _alphas(args)
    point = normalize_projective(_rational_list(args.point))
    cwp = phi_inverse(a_n, point.coords, args.s)
    return cwp.to_obj(), 0, "json"


def _cmd_param_conic(args):
    spec = ConicSpec(rational(args.alpha), rational(args.beta))
    point = conic_param(spec, rational(args.u))
    return {"point": point.to_obj()}, 0, "json"


def _cmd_cubic_to_weierstrass(args):
    spec = CubicSpec(rational(args.alpha), rational(args.beta))
    wp = fermat_to_weierstrass(spec, _rational_list(args.point))
    return wp.to_obj(), 0, "json"


def _cmd_search(args):
    a_n = _alphas(args)
    cfg = _search_config(args, args.mode)
    if args.mode == "curve-box":
        entries = curve_census_entries(a_n, args.s, cfg)
    else:
        entries = fiber_census_entries(a_n, args.s, cfg)
    return [e.to_obj() for e in entries], 0, "jsonl"


def _cmd_cross_check(args):
    a_n = _alphas(args)
    cfg = _search_config(args, "curve-box")
    report = cross_check(a_n, args.s, cfg)
    return report.to_obj(), 0, "json"


def _table_lines(command: str, payload) -> list[str]:
    if command == "repro-elkies":
        lines = []
        for check in payload["checks"]:
            status = "PASS" if check["passed"] else "FAIL"
            lines.append(f"{status}  {check['name']}")
            lines.extend(f"      {f}" for f in check["failures"])
        lines.append("OK" if payload["ok"] else "MISMATCH")
        return lines
    if command == "fiber-eqs":
        s = payload["s"]
        c = payload["solved_form"]["c"]
        return [
            f"({c}) * Y_{i + 2}^{s} = {A} * Y_1^{s} - {B} * Y_0^{s}"
            for i, (A, B) in enumerate(payload["solved_form"]["pairs"])
        ]
    if isinstance(payload, dict):
        return [f"{key}: {json.dumps(value)}" for key, value in payload.items()]
    return [json.dumps(item) for item in payload]


def _render(command: str, payload, kind: str, fmt: str) -> str:
    if fmt == "table":
        return "\n".join(_table_lines(command, payload)) + "\n"
    if kind == "jsonl":
        return "".join(json.dumps(item, separators=(",", ":")) + "\n" for item in payload)
    return json.dumps(payload, separators=(",", ":")) + "\n"


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record for one invocation; digests are stable
    across reruns with identical inputs."""

    command: str
    input_digest: str
    parameters: dict
    tool_version: str
    output_digest: str

    def to_obj(self) -> dict:
        return {
            "command": self.command,
            "input_digest": self.input_digest,
            "parameters": self.parameters,
            "tool_version": self.tool_version,
            "output_digest": self.output_digest,
        }


def build_manifest(args, output: bytes) -> RunManifest:
    params = {
        key: value
        for key, value in vars(args).items()
        if not key.startswith("_") and key not in ("command", "manifest", "func") and value is not None
    }
    raw_input = getattr(args, "_input_bytes", None)
    if raw_input is None:
        raw_input = json.dumps(params, sort_keys=True).encode("utf-8")
    return RunManifest(
        command=args.command,
        input_digest=hashlib.sha256(raw_input).hexdigest(),
        parameters={key: str(value) for key, value in sorted(params.items())},
        tool_version=__version__,
        output_digest=hashlib.sha256(output).hexdigest(),
    )


def _write_manifest(args, output: bytes) -> None:
    manifest = build_manifest(args, output)
    with open(args.manifest, "w", encoding="utf-8") as handle:
        json.dump(manifest.to_obj(), handle, sort_keys=True, separators=(",", ":"))
        handle.write("\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--manifest", metavar="PATH", help="write a run manifest here")

    fiber_flags = argparse.ArgumentParser(add_help=False)
    fiber_flags.add_argument("--alphas", required=True, help="comma-separated x-coordinates")
    fiber_flags.add_argument("--r", type=int, required=True)
    fiber_flags.add_argument("--s", type=int, required=True)

    parser = _Parser(prog="superfiber", description=__doc__)
    parser.add_argument("--version", action="version", version=f"superfiber {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("repro-elkies", parents=[common],
                       help="recompute the rank-17 dataset tables bit-exactly")
    p.set_defaults(func=_cmd_repro_elkies)

    p = sub.add_parser("fiber-eqs", parents=[common, fiber_flags],
                       help="defining equations of the fiber")
    p.set_defaults(func=_cmd_fiber_eqs)

    p = sub.add_parser("verify-point", parents=[common, fiber_flags],
                       help="test whether a point lies on the fiber")
    p.add_argument("--point", required=True, help="comma-separated coordinates")
    p.set_defaults(func=_cmd_verify_point)

    p = sub.add_parser("genus", parents=[common],
                       help="genus, gonality bound and finiteness threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_genus)

    p = sub.add_parser("twist", parents=[common],
                       help="twist a curve-with-points by its base point")
    p.add_argument("--input", required=True, help="JSON file ('-' for stdin)")
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("map", parents=[common],
                       help="forward map: curve with points -> fiber point")
    p.add_argument("--input", required=True, help="JSON file ('-' for stdin)")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("map-inverse", parents=[common, fiber_flags],
                       help="inverse map: fiber point -> curve with points")
    p.add_argument("--point", required=True)
    p.set_defaults(func=_cmd_map_inverse)

    p = sub.add_parser("param-conic", parents=[common],
                       help="rational point on a sum-zero conic")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--u", required=True)
    p.set_defaults(func=_cmd_param_conic)

    p = sub.add_parser("cubic-to-weierstrass", parents=[common],
                       help="map a diagonal cubic point to the Weierstrass model")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=_cmd_cubic_to_weierstrass)

    p = sub.add_parser("search", parents=[common, fiber_flags],
                       help="bounded census (JSON lines, one entry per curve)")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--mode", choices=("curve-box", "fiber-pairs"), default="curve-box")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--worker-index", type=int, default=0)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("cross-check", parents=[common, fiber_flags],
                       help="dual enumeration and bijection report")
    p.add_argument("--height", type=int, required=True)
    p.set_defaults(func=_cmd_cross_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        dataset_self_check(ELKIES)
        payload, code, kind = args.func(args)
        output = _render(args.command, payload, kind, args.format)
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    sys.stdout.write(output)
    sys.stdout.flush()
    if args.manifest:
        try:
            _write_manifest(args, output.encode("utf-8"))
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return IO_ERROR
    return code


def entrypoint() -> None:
    sys.exit(main())
