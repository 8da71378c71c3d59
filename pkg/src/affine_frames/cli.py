"""Command-line interface.

Every command reads one JSON document via ``--in`` and writes either a
result document or (for ``plot``) an SVG drawing to ``--out`` or stdout.
Exit codes: 0 on success, 1 on internal error, 2 when the input is rejected
by parsing, schema, or a mathematical precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io as docio
from .bezout import bezout_degree_search, minimal_bezout, mu_basis
from .completion import minimal_completion, verify_completion
from .equivariance import (
    canonical_form,
    canonical_shape_violations,
    pivot_profile,
    section,
)
from .frames import CurveRejection, moving_frame, validate_curve
from .io import (
    CurveDocument,
    DocumentError,
    ResultDocument,
    curve_to_dict,
    dict_to_matrix,
    dict_to_vector,
    format_rational,
    group_to_dict,
    matrix_to_dict,
    parse_curve_dict,
    parse_rational,
    vector_to_dict,
)
from .poly import Polynomial
from .svg import render_plot
from .sylvester import build_sylvester
from .vectors import PolyVector, RegularityError, require_regular
from .groups import GroupElement


class CommandRejection(Exception):
    """Input is structurally valid JSON but fails a precondition."""

    def __init__(self, message: str, details: tuple[str, ...] = ()):
        super().__init__(message)
        self.details = details


def _input_dict(doc: CurveDocument) -> dict:
    return curve_to_dict(doc)


def _cmd_frame(doc: CurveDocument) -> ResultDocument:
    outcome = validate_curve(doc.vector)
    if isinstance(outcome, CurveRejection):
        raise CommandRejection("curve rejected", outcome.failures)
    result = moving_frame(outcome)
    return ResultDocument(
        kind="frame",
        payload={
            "input": _input_dict(doc),
            "matrix": matrix_to_dict(result.matrix),
            "section": group_to_dict(result.section),
            "canonical_tangent": vector_to_dict(result.canonical_tangent),
            "bezout_degree": result.bezout_degree,
        },
        metadata={
            "degree": int(result.matrix.degree),
            "determinant": "1",
            "tangent_degree": int(outcome.vector.derivative().degree),
        },
    )


def _cmd_complete(doc: CurveDocument) -> ResultDocument:
    require_regular(doc.vector)
    result = minimal_completion(doc.vector)
    return ResultDocument(
        kind="completion",
        payload={
            "input": _input_dict(doc),
            "matrix": matrix_to_dict(result.matrix),
            "bezout_degree": result.bezout_degree,
        },
        metadata={
            "degree": int(result.matrix.degree),
            "determinant": "1",
        },
    )


def _cmd_bezout(doc: CurveDocument) -> ResultDocument:
    require_regular(doc.vector)
    result = minimal_bezout(doc.vector)
    return ResultDocument(
        kind="bezout",
        payload={
            "input": _input_dict(doc),
            "vector": vector_to_dict(result.vector),
            "degree": result.degree,
        },
        metadata={
            "pairing": "1",
        },
    )


def _cmd_mubasis(doc: CurveDocument) -> ResultDocument:
    require_regular(doc.vector)
    result = mu_basis(doc.vector)
    degrees = [int(u.degree) for u in result.elements]
    return ResultDocument(
        kind="mubasis",
        payload={
            "input": _input_dict(doc),
            "elements": [vector_to_dict(u) for u in result.elements],
            "scale": format_rational(result.scale),
        },
        metadata={
            "degrees": degrees,
            "degree_sum": sum(degrees),
        },
    )


def _cmd_section(doc: CurveDocument) -> ResultDocument:
    g = section(doc.vector)
    profile = pivot_profile(doc.vector)
    return ResultDocument(
        kind="section",
        payload={
            "input": _input_dict(doc),
            "matrix": docio.rational_matrix_to_lists(g.matrix),
            "shift": format_rational(g.shift),
        },
        metadata={
            "profile": {
                "indices": list(profile.indices),
                "k": profile.k,
                "det_vbar": format_rational(profile.det_vbar),
            },
        },
    )


def _cmd_canonical(doc: CurveDocument) -> ResultDocument:
    g = section(doc.vector)
    reduced = g.inverse().apply(doc.vector)
    profile = pivot_profile(reduced)
    return ResultDocument(
        kind="canonical",
        payload={
            "input": _input_dict(doc),
            "vector": vector_to_dict(reduced),
            "section": group_to_dict(g),
        },
        metadata={
            "degree": int(reduced.degree),
            "profile": {
                "indices": list(profile.indices),
                "k": profile.k,
                "det_vbar": format_rational(profile.det_vbar),
            },
        },
    )


def _cmd_sylvester(doc: CurveDocument, dump_pivots: bool = False) -> ResultDocument:
    if doc.vector.is_zero:
        raise CommandRejection("zero vector has no Sylvester matrix")
    system = build_sylvester(doc.vector)
    payload = {
        "input": _input_dict(doc),
        "matrix": docio.rational_matrix_to_lists(system.matrix),
        "pivot_cols": list(system.pivot_cols),
        "nonpivot_cols": list(system.nonpivot_cols),
        "basic_nonpivot": list(system.basic_nonpivot),
    }
    if dump_pivots:
        payload["reduced"] = docio.rational_matrix_to_lists(system.reduced)
    return ResultDocument(
        kind="sylvester",
        payload=payload,
        metadata={
            "rows": system.nrows,
            "cols": system.ncols,
            "rank": system.rank,
        },
    )


def _check(checks: list, name: str, passed: bool) -> None:
    checks.append({"name": name, "passed": bool(passed)})


def _verify_frame(payload: dict, checks: list) -> None:
    doc = parse_curve_dict(payload.get("input"))
    outcome = validate_curve(doc.vector)
    _check(checks, "input_is_generic_curve", not isinstance(outcome, CurveRejection))
    if isinstance(outcome, CurveRejection):
        return
    stored = dict_to_matrix(payload.get("matrix"))
    recomputed = moving_frame(outcome)
    tangent = doc.vector.derivative()
    _check(checks, "matrix_reproducible", stored == recomputed.matrix)
    _check(checks, "first_column_is_tangent", stored.column(0) == tangent)
    _check(checks, "determinant_is_one", stored.determinant() == Polynomial.one())
    minimal = int(tangent.degree) + bezout_degree_search(tangent)
    _check(checks, "degree_is_minimal", stored.degree == minimal)


def _verify_completion(payload: dict, checks: list) -> None:
    doc = parse_curve_dict(payload.get("input"))
    stored = dict_to_matrix(payload.get("matrix"))
    report = verify_completion(stored, doc.vector)
    _check(checks, "first_column_matches", report.first_column_matches)
    _check(checks, "determinant_is_one", report.determinant_one)
    _check(checks, "degree_is_minimal", report.minimal)
    _check(
        checks,
        "matrix_reproducible",
        stored == minimal_completion(doc.vector).matrix,
    )


def _verify_bezout(payload: dict, checks: list) -> None:
    doc = parse_curve_dict(payload.get("input"))
    stored = dict_to_vector(payload.get("vector"))
    _check(checks, "pairing_is_one", doc.vector.dot(stored) == Polynomial.one())
    _check(
        checks,
        "degree_is_minimal",
        stored.degree == bezout_degree_search(doc.vector),
    )
    _check(
        checks,
        "vector_reproducible",
        stored == minimal_bezout(doc.vector).vector,
    )


def _verify_mubasis(payload: dict, checks: list) -> None:
    from .vectors import outer_product

    doc = parse_curve_dict(payload.get("input"))
    elements = [dict_to_vector(e) for e in payload.get("elements", [])]
    scale = parse_rational(payload.get("scale"))
    _check(
        checks,
        "elements_are_syzygies",
        all(doc.vector.dot(u).is_zero for u in elements),
    )
    degrees = [u.degree for u in elements]
    _check(checks, "degrees_ascending", degrees == sorted(degrees))
    _check(checks, "degrees_sum_to_input", sum(degrees) == doc.vector.degree)
    _check(
        checks,
        "outer_product_proportional",
        outer_product(elements) == doc.vector.scale(scale),
    )
    recomputed = mu_basis(doc.vector)
    _check(
        checks,
        "basis_reproducible",
        tuple(elements) == recomputed.elements and scale == recomputed.scale,
    )


def _verify_section(payload: dict, checks: list) -> None:
    doc = parse_curve_dict(payload.get("input"))
    matrix = docio.lists_to_rational_matrix(payload.get("matrix"))
    shift = parse_rational(payload.get("shift"))
    try:
        stored = GroupElement(matrix, shift)
        _check(checks, "matrix_is_unimodular", True)
    except ValueError:
        _check(checks, "matrix_is_unimodular", False)
        return
    recomputed = section(doc.vector)
    _check(
        checks,
        "section_reproducible",
        stored.matrix == recomputed.matrix and stored.shift == recomputed.shift,
    )


def _verify_canonical(payload: dict, checks: list) -> None:
    doc = parse_curve_dict(payload.get("input"))
    stored = dict_to_vector(payload.get("vector"))
    recomputed = canonical_form(doc.vector)
    _check(checks, "vector_reproducible", stored == recomputed)
    _check(checks, "shape_constraints_hold", not canonical_shape_violations(stored))
    _check(checks, "section_is_identity", section(stored).is_identity())


def _verify_sylvester(payload: dict, checks: list) -> None:
    doc = parse_curve_dict(payload.get("input"))
    system = build_sylvester(doc.vector)
    stored = docio.lists_to_rational_matrix(payload.get("matrix"))
    _check(checks, "matrix_reproducible", stored == system.matrix)
    _check(
        checks,
        "pivots_reproducible",
        tuple(payload.get("pivot_cols", ())) == system.pivot_cols
        and tuple(payload.get("nonpivot_cols", ())) == system.nonpivot_cols
        and tuple(payload.get("basic_nonpivot", ())) == system.basic_nonpivot,
    )
    nonpivot = set(system.nonpivot_cols)
    periodic = all(
        j + system.n > system.ncols or j + system.n in nonpivot
        for j in system.nonpivot_cols
    )
    _check(checks, "nonpivot_indices_periodic", periodic)
    if doc.vector.gcd() == Polynomial.one():
        _check(checks, "rank_is_full", system.rank == system.nrows)
        _check(
            checks,
            "basic_nonpivot_count",
            len(system.basic_nonpivot) == system.n - 1,
        )


_VERIFIERS = {
    "frame": _verify_frame,
    "completion": _verify_completion,
    "bezout": _verify_bezout,
    "mubasis": _verify_mubasis,
    "section": _verify_section,
    "canonical": _verify_canonical,
    "sylvester": _verify_sylvester,
}


def _cmd_verify(stored: ResultDocument) -> ResultDocument:
    verifier = _VERIFIERS.get(stored.kind)
    if verifier is None:
        raise DocumentError(f"cannot verify a document of kind {stored.kind!r}")
    checks: list = []
    verifier(stored.payload, checks)
    return ResultDocument(
        kind="verify",
        payload={"input": stored.to_dict()},
        metadata={
            "checks": checks,
            "ok": all(c["passed"] for c in checks),
        },
    )


def _cmd_plot(stored: ResultDocument, params_text: str, project_text: str | None) -> str:
    if stored.kind != "frame":
        raise DocumentError("plot expects a frame result document")
    doc = parse_curve_dict(stored.payload.get("input"))
    frame = dict_to_matrix(stored.payload.get("matrix"))
    if frame.nrows != doc.n or frame.ncols != doc.n:
        raise DocumentError("frame matrix does not match the curve dimension")
    params = docio.parse_param_list(params_text)
    if project_text is not None:
        axes = docio.parse_projection(project_text, doc.n)
    elif doc.n == 2:
        axes = (0, 1)
    else:
        raise DocumentError("--project is required when the dimension exceeds 2")
    return render_plot(doc.vector, frame, params, axes)


def run_command(command: str, document, **options):
    """Dispatch a parsed input document; returns a result or SVG text."""
    if command == "frame":
        return _cmd_frame(document)
    if command == "complete":
        return _cmd_complete(document)
    if command == "bezout":
        return _cmd_bezout(document)
    if command == "mubasis":
        return _cmd_mubasis(document)
    if command == "section":
        return _cmd_section(document)
    if command == "canonical":
        return _cmd_canonical(document)
    if command == "sylvester":
        return _cmd_sylvester(document, dump_pivots=options.get("dump_pivots", False))
    if command == "verify":
        return _cmd_verify(document)
    if command == "plot":
        return _cmd_plot(
            document, options.get("params"), options.get("project")
        )
    raise DocumentError(f"unknown command: {command}")


_CURVE_COMMANDS = (
    "frame",
    "complete",
    "bezout",
    "mubasis",
    "section",
    "canonical",
    "sylvester",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affine-frames",
        description="Minimal-degree moving frames for polynomial curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "frame": "equivariant minimal-degree frame along a curve",
        "complete": "minimal completion of a vector to determinant one",
        "bezout": "minimal-degree Bezout vector",
        "mubasis": "degree-ordered syzygy basis",
        "section": "group section (matrix and shift) of a vector",
        "canonical": "canonical orbit representative",
        "sylvester": "Sylvester-type matrix with pivot data",
        "verify": "re-check all invariants of a stored result",
        "plot": "SVG drawing of a curve with frame arrows",
    }
    for name in (*_CURVE_COMMANDS, "verify", "plot"):
        cmd = sub.add_parser(name, help=helps[name])
        cmd.add_argument("--in", dest="infile", required=True, metavar="FILE")
        cmd.add_argument("--out", dest="outfile", metavar="FILE")
        if name == "sylvester":
            cmd.add_argument("--dump-pivots", action="store_true")
        if name == "plot":
            cmd.add_argument("--params", required=True, metavar="LIST")
            cmd.add_argument("--project", metavar="I,J")
    return parser


def _emit(text: str, outfile: str | None) -> None:
    if outfile:
        with open(outfile, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in _CURVE_COMMANDS:
            with open(args.infile, "r", encoding="utf-8") as handle:
                document = docio.parse_curve(handle.read())
            options = {}
            if args.command == "sylvester":
                options["dump_pivots"] = args.dump_pivots
            result = run_command(args.command, document, **options)
            _emit(result.to_json(), args.outfile)
            return 0
        with open(args.infile, "r", encoding="utf-8") as handle:
            stored = ResultDocument.from_json(handle.read())
        if args.command == "verify":
            result = run_command("verify", stored)
            _emit(result.to_json(), args.outfile)
            return 0 if result.metadata["ok"] else 2
        svg_text = run_command(
            "plot", stored, params=args.params, project=args.project
        )
        _emit(svg_text, args.outfile)
        return 0
    except CommandRejection as exc:
        _print_rejection(str(exc), exc.details)
        return 2
    except (DocumentError, RegularityError) as exc:
        _print_rejection(str(exc), ())
        return 2
    except OSError as exc:
        _print_rejection(f"cannot read input: {exc}", ())
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(
            json.dumps({"error": f"internal error: {exc}"}),
            file=sys.stderr,
        )
        return 1


def _print_rejection(message: str, details) -> None:
    body = {"error": message}
    if details:
        body["failures"] = list(details)
    print(json.dumps(body, sort_keys=True), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
