"""conformal-type-lab command line

Entry point for working with line complexes (``.spg``), partitions (``.gpt``) and tilings
(``.tlg``): validation, face tracing and excess, partitioning, hyperbolicity certificates,
tiling condition checks, the constant ledger, spherical radii, the half-sheet identity,
generators and the parabolic growth record.

Reports go to stdout (or ``--output``) as text, JSON or CSV; logs go to stderr.

Exit codes:
  0  success, or a hyperbolic or inconclusive verdict
  1  invalid arguments, unreadable input or a library error
  2  conditions violated (including a complex with validation diagnostics)

Usage:
  $ conformal-type-lab validate --in complex.spg
  $ conformal-type-lab certify t2 --in complex.spg --partition pieces.gpt --eps 1 --M 1
  $ conformal-type-lab record build --eps 0.1 --stages 4 --format json
"""
import argparse
import logging
import math
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from conformal_type_lab.certificates import VIOLATED, Certificate
from conformal_type_lab.config import config
from conformal_type_lab.errors import ConformalTypeLabError, DomainError
from conformal_type_lab.example_factory import (
    GrowthRecord, area_certificates, build, combinatorial_euler_audit, export_tiling,
    module_lower_bound, radius_growth_audit, riemann_hurwitz_audit,)
from conformal_type_lab.formats import gpt_format, spg_format, tlg_format
from conformal_type_lab.line_complex import (
    LineComplex, classic, closed, excess_report, mean_excess_sequence, regular, trace_faces,
    validate, vertex_excess,)
from conformal_type_lab.line_complex.generators import CLASSIC_SCHEMES, parse_scheme_m
from conformal_type_lab.partitioner import (
    CONSTRUCTIVE, EXHAUSTIVE, GraphPartition, SubgraphHandle, certify_regularly_ramified,
    certify_T2, certify_Tfinal, partition_lemma_par2,)
from conformal_type_lab.scripts.reports import FORMATS, emit_report
from conformal_type_lab.spherical import circumradius_equilateral_oracle, r_q_eps
from conformal_type_lab.tiling import (
    check_corollary_conditions, check_final_tiling_theorem, check_theorem_T, constant_ledger,
    half_sheet_curvature_identity, regular_triangle_patch,)
from conformal_type_lab.utils import (
    create_logger, format_half_perimeter, set_log_level, to_fraction,)

logger = create_logger(
    name="Main",
    log_level=config.log_level,
    log_file=config.log_file,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATED = 2

Outcome = Tuple[Any, int]


class UsageError(Exception):
    """Invalid command line arguments."""


class ArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting with status 2."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _verdict_exit(certificate: Certificate) -> int:
    return EXIT_VIOLATED if certificate.verdict == VIOLATED else EXIT_OK


def _read_complex(args: argparse.Namespace) -> LineComplex:
    return spg_format.read(args.input)


# ----------------------------------------------------------------------
# Line complex verbs
# ----------------------------------------------------------------------
def cmd_validate(args: argparse.Namespace) -> Outcome:
    diagnostics = validate(_read_complex(args))
    for diagnostic in diagnostics:
        logger.warning(str(diagnostic))
    return diagnostics, EXIT_VIOLATED if diagnostics else EXIT_OK


def cmd_faces(args: argparse.Namespace) -> Outcome:
    faces = trace_faces(_read_complex(args))
    rows = [
        {
            "id": face.id,
            "labels": f"{face.labels[0]},{face.labels[1]}",
            "m": "unknown" if face.m is None else format_half_perimeter(face.m),
            "status": face.status,
            "length": len(face.boundary),
        }
        for face in faces
    ]
    return rows, EXIT_OK


def cmd_excess(args: argparse.Namespace) -> Outcome:
    complex_ = _read_complex(args)
    if args.vertex is not None:
        return [{"vertex": args.vertex, "excess": vertex_excess(complex_, args.vertex)}], EXIT_OK
    report = excess_report(complex_)
    rows = [{"vertex": vertex_id, "excess": value} for vertex_id, value in report.values.items()]
    if report.unresolved:
        logger.info(f"{len(report.unresolved)} vertices have unresolved excess")
    if report.regular_value is not None:
        logger.info(f"Regularly ramified with E = {report.regular_value}")
    return rows, EXIT_OK


def cmd_mean_excess(args: argparse.Namespace) -> Outcome:
    return mean_excess_sequence(_read_complex(args), args.base, args.jmax), EXIT_OK


def cmd_partition(args: argparse.Namespace) -> Outcome:
    complex_ = _read_complex(args)
    pieces = partition_lemma_par2(SubgraphHandle.from_complex(complex_), args.M)
    partition = GraphPartition(pieces)
    if args.out:
        gpt_format.write(partition, args.out)
    rows = [
        {
            "id": piece_id,
            "size": piece.size,
            "infinite": piece.infinite,
            "vertices": piece.sorted_vertices(),
        }
        for piece_id, piece in partition.items()
    ]
    return rows, EXIT_OK


# ----------------------------------------------------------------------
# Certificates
# ----------------------------------------------------------------------
def cmd_certify_t2(args: argparse.Namespace) -> Outcome:
    complex_ = _read_complex(args)
    partition = GraphPartition.from_vertex_lists(complex_, gpt_format.read(args.partition))
    certificate = certify_T2(complex_, partition, to_fraction(args.eps), args.M, args.parallel)
    return certificate, _verdict_exit(certificate)


def cmd_certify_final(args: argparse.Namespace) -> Outcome:
    certificate = certify_Tfinal(
        _read_complex(args), to_fraction(args.eps), args.M, args.mode, args.parallel
    )
    return certificate, _verdict_exit(certificate)


def cmd_certify_regular(args: argparse.Namespace) -> Outcome:
    eps = None if args.eps is None else to_fraction(args.eps)
    certificate = certify_regularly_ramified(_read_complex(args), eps)
    return certificate, _verdict_exit(certificate)


def cmd_check_tiling(args: argparse.Namespace) -> Outcome:
    tiling = tlg_format.read(args.input)
    if args.theorem == "T":
        certificate = check_theorem_T(tiling, args.eps, args.M, args.parallel)
    elif args.theorem == "final":
        certificate = check_final_tiling_theorem(tiling, args.eps, args.M)
    else:
        if args.q is None:
            raise UsageError("check-tiling --theorem corollary requires --q")
        certificate = check_corollary_conditions(tiling, args.q, args.eps)
    return certificate, _verdict_exit(certificate)


# ----------------------------------------------------------------------
# Constants and identities
# ----------------------------------------------------------------------
def cmd_constants(args: argparse.Namespace) -> Outcome:
    return constant_ledger(args.eps, args.M, args.k).to_dict(), EXIT_OK


def cmd_rqe(args: argparse.Namespace) -> Outcome:
    result: Dict[str, Any] = {"q": args.q, "eps": args.eps, "R": r_q_eps(args.q, args.eps)}
    if args.oracle:
        closed_form = r_q_eps(args.q, 0)
        angle = args.q * math.pi / 3
        try:
            oracle = circumradius_equilateral_oracle(angle)
        except DomainError:
            logger.warning(f"No oracle value for q = {args.q}: the corner angle is not below pi")
            oracle = None
        result["closed_form"] = closed_form
        result["oracle"] = oracle
        result["difference"] = None if oracle is None else abs(oracle - closed_form)
    return result, EXIT_OK


def cmd_identity(args: argparse.Namespace) -> Outcome:
    m = parse_scheme_m(args.m)
    identity = half_sheet_curvature_identity(args.q, m)
    result = {
        "q": args.q,
        "m": [format_half_perimeter(value) for value in m],
        "sum_K_over_pi": identity.sum_K,
        "E_p": identity.pi_Ep,
        "residual": identity.residual,
        "holds": identity.residual == 0,
    }
    return result, EXIT_OK if identity.residual == 0 else EXIT_VIOLATED


# ----------------------------------------------------------------------
# Generators
# ----------------------------------------------------------------------
def _emit_generated(text: str, args: argparse.Namespace, kind: str) -> Outcome:
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text)
        logger.info(f"Wrote {kind} to {args.out}")
        return {"written": str(args.out)}, EXIT_OK
    return text, EXIT_OK


def cmd_gen_regular(args: argparse.Namespace) -> Outcome:
    complex_ = regular(args.q, parse_scheme_m(args.m), args.radius, args.declare_faces)
    return _emit_generated(spg_format.serialize(complex_), args, "line complex")


def cmd_gen_closed(args: argparse.Namespace) -> Outcome:
    return _emit_generated(spg_format.serialize(closed(args.n, args.q)), args, "line complex")


def cmd_gen_classic(args: argparse.Namespace) -> Outcome:
    complex_ = classic(args.name, args.radius)
    return _emit_generated(spg_format.serialize(complex_), args, "line complex")


def cmd_gen_patch(args: argparse.Namespace) -> Outcome:
    tiling = regular_triangle_patch(args.p, args.radius, args.corner_angle)
    return _emit_generated(tlg_format.serialize(tiling), args, "tiling")


# ----------------------------------------------------------------------
# Growth record
# ----------------------------------------------------------------------
def stage_audits(record: GrowthRecord, n: int) -> Dict[str, Any]:
    """Module bound, radius, Riemann-Hurwitz and Euler audits of stage n."""
    return {
        "n": n,
        "module_lower_bound": module_lower_bound(record, n),
        "radius": radius_growth_audit(record, n)._asdict(),
        "riemann_hurwitz": riemann_hurwitz_audit(record, n)._asdict(),
        "euler": combinatorial_euler_audit(record, n)._asdict(),
    }


def cmd_record_build(args: argparse.Namespace) -> Outcome:
    record = build(args.eps, args.stages, to_fraction(args.slack))
    result = record.to_dict()
    result["audits"] = [stage_audits(record, n) for n in range(1, record.built + 1)]
    result["area_certificates"] = area_certificates(record, record.built)
    return result, EXIT_OK


def cmd_record_export(args: argparse.Namespace) -> Outcome:
    record = build(args.eps, args.stages, to_fraction(args.slack))
    tiling = export_tiling(record, record.built, args.window, not args.disk)
    if args.tiling_out:
        tlg_format.write(tiling, args.tiling_out)
        summary = {
            "stages": record.built,
            "triangles": len(tiling),
            "vertices": len(tiling.total_angles),
            "written": str(args.tiling_out),
        }
        return summary, EXIT_OK
    return tlg_format.serialize(tiling), EXIT_OK


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------
def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="Report format")
    common.add_argument("--output", help="Write the report to this path instead of stdout")
    common.add_argument("--parallel", action="store_true",
                        help="Check pieces and clusters on a thread pool")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Override the configured log level")

    parser = ArgumentParser(prog="conformal-type-lab", description=__doc__.split("\n")[0])
    verbs = parser.add_subparsers(dest="verb", parser_class=ArgumentParser)
    verbs.required = True

    def verb(subparsers, name: str, handler: Callable, help_text: str,
             needs_input: bool = False) -> ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        if needs_input:
            sub.add_argument("--in", dest="input", required=True, help="Input file")
        return sub

    verb(verbs, "validate", cmd_validate, "Validate a line complex", True)
    verb(verbs, "faces", cmd_faces, "Trace the faces of a line complex", True)
    sub = verb(verbs, "excess", cmd_excess, "Per-vertex excess", True)
    sub.add_argument("--vertex", help="Report a single vertex")
    sub = verb(verbs, "mean-excess", cmd_mean_excess, "Partial mean excess over balls", True)
    sub.add_argument("--base", required=True, help="Base vertex id")
    sub.add_argument("--jmax", required=True, type=int, help="Largest ball radius")
    sub = verb(verbs, "partition", cmd_partition, "Partition into bounded pieces", True)
    sub.add_argument("--M", required=True, type=int, help="Lower piece size bound")
    sub.add_argument("--out", help="Write the partition as .gpt")

    certify = verbs.add_parser("certify", help="Hyperbolicity certificates for line complexes")
    kinds = certify.add_subparsers(dest="kind", parser_class=ArgumentParser)
    kinds.required = True
    sub = verb(kinds, "t2", cmd_certify_t2, "Check a given partition", True)
    sub.add_argument("--partition", required=True, help=".gpt partition file")
    sub.add_argument("--eps", required=True, help="Exact rational eps > 0, e.g. 1/3")
    sub.add_argument("--M", required=True, type=int, help="Piece size bound")
    sub = verb(kinds, "final", cmd_certify_final, "Check subgraphs of size >= M", True)
    sub.add_argument("--eps", required=True, help="Exact rational eps > 0")
    sub.add_argument("--M", required=True, type=int, help="Subgraph size threshold")
    sub.add_argument("--mode", choices=[CONSTRUCTIVE, EXHAUSTIVE], default=CONSTRUCTIVE)
    sub = verb(kinds, "regular", cmd_certify_regular, "Certify a regularly ramified complex",
               True)
    sub.add_argument("--eps", help="Exact rational eps > 0; defaults to -E")

    sub = verb(verbs, "check-tiling", cmd_check_tiling, "Check a tiling against a theorem", True)
    sub.add_argument("--eps", required=True, type=float)
    sub.add_argument("--M", required=True, type=int)
    sub.add_argument("--theorem", choices=["T", "final", "corollary"], default="T")
    sub.add_argument("--q", type=float, help="Total angle multiple for the corollary")

    sub = verb(verbs, "constants", cmd_constants, "The isoperimetric constant ledger")
    sub.add_argument("--eps", required=True, type=float)
    sub.add_argument("--M", required=True, type=int)
    sub.add_argument("--k", required=True, type=float)

    sub = verb(verbs, "rqe", cmd_rqe, "Circumradius R_{q,eps}")
    sub.add_argument("--q", required=True, type=float)
    sub.add_argument("--eps", required=True, type=float)
    sub.add_argument("--oracle", action="store_true", help="Compare with the bisection oracle")

    sub = verb(verbs, "identity", cmd_identity, "Half-sheet curvature identity")
    sub.add_argument("--q", required=True, type=int)
    sub.add_argument("--m", required=True, help="Comma separated half-perimeters, e.g. 2,2,inf")

    gen = verbs.add_parser("gen", help="Generate complexes and tilings")
    shapes = gen.add_subparsers(dest="shape", parser_class=ArgumentParser)
    shapes.required = True
    sub = verb(shapes, "regular", cmd_gen_regular, "Regular complex truncated to a radius")
    sub.add_argument("--q", required=True, type=int)
    sub.add_argument("--m", required=True, help="Comma separated half-perimeters")
    sub.add_argument("--radius", required=True, type=int)
    sub.add_argument("--declare-faces", action="store_true")
    sub.add_argument("--out")
    sub = verb(shapes, "closed", cmd_gen_closed, "Closed n-sheeted complex")
    sub.add_argument("--n", required=True, type=_positive_int)
    sub.add_argument("--q", required=True, type=int)
    sub.add_argument("--out")
    sub = verb(shapes, "classic", cmd_gen_classic, "Named classical complex")
    sub.add_argument("--name", required=True, choices=sorted(CLASSIC_SCHEMES))
    sub.add_argument("--radius", type=int, default=3)
    sub.add_argument("--out")
    sub = verb(shapes, "patch", cmd_gen_patch, "Patch of the regular triangulation {3, p}")
    sub.add_argument("--p", required=True, type=int)
    sub.add_argument("--radius", required=True, type=int)
    sub.add_argument("--corner-angle", type=float)
    sub.add_argument("--out")

    record = verbs.add_parser("record", help="The parabolic growth record")
    actions = record.add_subparsers(dest="action", parser_class=ArgumentParser)
    actions.required = True
    for name, handler, help_text in (
        ("build", cmd_record_build, "Build stages and run every audit"),
        ("export", cmd_record_export, "Export representative triangles as .tlg"),
    ):
        sub = verb(actions, name, handler, help_text)
        sub.add_argument("--eps", required=True, type=float)
        sub.add_argument("--stages", required=True, type=int)
        sub.add_argument("--slack", default="0", help="Non-negative rational radius slack")
        if name == "export":
            sub.add_argument("--window", type=_positive_int)
            sub.add_argument("--tiling-out", help="Write the tiling to this .tlg path")
            sub.add_argument("--disk", action="store_true",
                             help="Outermost circle vertices keep total angle 2pi")
    return parser


def _write(text: str, output: Optional[str]) -> None:
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        logger.info(f"Report written to {path}")
    else:
        sys.stdout.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one verb and emit its report.

    Returns:
        int: The process exit code.
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as error:
        logger.error(str(error))
        return EXIT_ERROR

    if args.log_level:
        level = getattr(logging, args.log_level)
        logger.setLevel(level)
        set_log_level(level)

    start_time = time.time()
    try:
        result, code = args.handler(args)
        text = result if isinstance(result, str) else emit_report(result, args.format)
        _write(text, args.output)
    except (ConformalTypeLabError, OSError, ValueError, UsageError) as error:
        logger.error(f"{args.verb} failed: {error}", exc_info=True)
        return EXIT_ERROR

    logger.info(f"{args.verb} finished in {time.time() - start_time:.3f} seconds (exit {code})")
    return code


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
