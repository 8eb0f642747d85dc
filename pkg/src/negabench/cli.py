"""Command-line workbench.

Subcommands build constructions, dump spectra and ANFs, verify saved
function files, and replay the verification suites.  Artifact outputs
(gen, spectrum, anf, dual, orbits) are byte-deterministic; report outputs
carry timings and are meant for humans or logs.

Exit codes: 0 success, 1 a verification or replay failed, 2 bad command
line, 3 capacity limit, 4 invalid construction parameters, 5 unreadable
or malformed input file.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Optional

from .core import (
    BitVector,
    BooleanFunction,
    CapacityError,
    DEFAULT_MAX_N,
    DimensionError,
    InvalidSpecError,
    NotBentError,
    anf_from_truth_table,
    set_max_n,
)
from .spectra import (
    InvalidPermutationError,
    dual,
    nega_transform,
    walsh_transform,
)
from .subspaces import GammaSpec, orbit, orbit_representatives
from .constructions import (
    RotationSpec,
    construct,
    normalize_family,
    spec_from_dict,
    function_file_dict,
)
from .oracle import (
    CheckResult,
    SU_CASES,
    VerificationReport,
    check_reference_case,
    check_su_conditions,
    check_table1,
    verify_construction,
    verify_fragmentary_lemma,
)
from .reference import REFERENCE_CASES

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_SPEC = 4
EXIT_FILE = 5

_SET_FAMILIES = ("S1", "S2", "S3", "S4")

_FILE_KEYS = ("n", "family", "params", "tt_hex", "anf", "dual_tt_hex",
              "predicts_max_degree")


class _InputFileError(Exception):
    pass


def _json_line(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def emit_report(report: VerificationReport, fmt: str) -> str:
    """Render one verification report; pure function of its input."""
    if fmt == "json":
        return _json_line(report.to_dict())
    lines = [f"{report.subject}: {'PASS' if report.passed else 'FAIL'} "
             f"({report.elapsed_ms:.1f} ms)"]
    for c in report.checks:
        mark = "ok  " if c.passed else "FAIL"
        line = f"  {mark} {c.name}: {c.details}" if c.details else f"  {mark} {c.name}"
        if c.counterexample is not None:
            line += f" [{c.counterexample}]"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _emit_reports(reports: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return _json_line({
            "passed": all(r.passed for r in reports),
            "reports": [r.to_dict() for r in reports],
        })
    return "".join(emit_report(r, fmt) for r in reports)


def _write_out(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# spec assembly from flags


def _add_spec_options(sp: argparse.ArgumentParser, with_infile: bool = True) -> None:
    sp.add_argument("--family", help="construction family (G4K, G8K, H4K2, H8K2, "
                                     "F2RS, F2RS_SET, F2RS_ORBIT)")
    sp.add_argument("--k", type=int, help="size parameter k")
    sp.add_argument("--gamma", action="append", default=[], metavar="BITS",
                    help="gamma vector as a bit string, character j = coordinate j; "
                         "repeat for several")
    sp.add_argument("--eset", action="append", default=[], choices=["0", "1", "B"],
                    help="E symbol per gamma for H4K2/H8K2 (B = both values)")
    sp.add_argument("--p", action="append", default=[], metavar="BITS",
                    help="orbit representative for F2RS; repeat for several")
    sp.add_argument("--a-set", dest="a_set", action="append", default=[], metavar="BITS",
                    help="orbit-sum vector for F2RS_SET; repeat for several")
    if with_infile:
        sp.add_argument("--in", dest="infile", metavar="FILE",
                        help="read the function from a saved JSON file instead")


def _spec_from_args(args) -> tuple[str, object]:
    if not args.family:
        raise InvalidSpecError("--family is required without --in")
    family = normalize_family(args.family)
    if args.k is None:
        raise InvalidSpecError("--k is required without --in")
    k = args.k
    set_tag = {"G4K": "S1", "G8K": "S2", "H4K2": "S3", "H8K2": "S4"}.get(family)
    if set_tag is not None:
        gammas = tuple(BitVector.from_string(s) for s in args.gamma)
        esets = tuple(args.eset) if args.eset else None
        return family, GammaSpec(k, set_tag, gammas, esets)
    if family == "F2RS":
        return family, RotationSpec(k, tuple(BitVector.from_string(s) for s in args.p))
    if family == "F2RS_SET":
        return family, RotationSpec(k, tuple(BitVector.from_string(s) for s in args.a_set))
    if len(args.gamma) != 1:
        raise InvalidSpecError("F2RS_ORBIT takes exactly one --gamma")
    return family, RotationSpec(k, (BitVector.from_string(args.gamma[0]),))


def _load_file(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise _InputFileError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise _InputFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise _InputFileError(f"{path}: expected a JSON object")
    missing = [key for key in _FILE_KEYS if key not in data]
    if missing:
        raise _InputFileError(f"{path}: missing keys {', '.join(missing)}")
    return data


def _function_from_file(data: dict) -> BooleanFunction:
    try:
        return BooleanFunction.from_hex(int(data["n"]), data["tt_hex"])
    except (TypeError, ValueError) as exc:
        raise _InputFileError(f"bad truth table: {exc}") from exc


def _resolve_function(args) -> BooleanFunction:
    if getattr(args, "infile", None):
        return _function_from_file(_load_file(args.infile))
    family, spec = _spec_from_args(args)
    return construct(family, spec).function


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_gen(args) -> int:
    family, spec = _spec_from_args(args)
    cf = construct(family, spec)
    _write_out(_json_line(function_file_dict(cf)), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.infile:
        data = _load_file(args.infile)
        try:
            family = normalize_family(str(data["family"]))
            if not isinstance(data["params"], dict):
                raise InvalidSpecError("params must be an object")
            spec = spec_from_dict(family, data["params"])
        except ValueError as exc:
            raise _InputFileError(f"{args.infile}: {exc}") from exc
        fn = _function_from_file(data)
        rebuilt = construct(family, spec)
        if fn.n != rebuilt.n:
            report = VerificationReport(
                subject=f"{family} from {args.infile}",
                checks=(CheckResult(
                    "file-n-matches-family", False, "",
                    f"file says n={fn.n}, family gives n={rebuilt.n}"),),
                elapsed_ms=0.0)
            _write_out(emit_report(report, args.format), None)
            return EXIT_FAILED
        cf = dataclasses.replace(rebuilt, function=fn)
        report = verify_construction(cf)
        extra = [
            CheckResult("file-anf-field-matches-closed-form",
                        data["anf"] == cf.closed_anf.to_text()),
            CheckResult("file-dual-field-matches-closed-form",
                        data["dual_tt_hex"] == cf.closed_dual.to_hex()),
            CheckResult("file-degree-flag-matches-parity",
                        bool(data["predicts_max_degree"]) == cf.predicts_max_degree),
        ]
        report = VerificationReport(
            subject=f"{report.subject} from {args.infile}",
            checks=report.checks + tuple(extra),
            elapsed_ms=report.elapsed_ms)
    else:
        family, spec = _spec_from_args(args)
        report = verify_construction(construct(family, spec))
    _write_out(emit_report(report, args.format), None)
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_spectrum(args) -> int:
    fn = _resolve_function(args)
    pad = (fn.n + 3) // 4
    lines = []
    wf = walsh_transform(fn) if args.kind in ("walsh", "both") else None
    nf = nega_transform(fn) if args.kind in ("nega", "both") else None
    for u in range(1 << fn.n):
        cols = [f"{u:0{pad}x}"]
        if wf is not None:
            cols.append(str(wf.value(u)))
        if nf is not None:
            cols.append(str(nf.re[u]))
            cols.append(str(nf.im[u]))
        lines.append("\t".join(cols))
    _write_out("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_anf(args) -> int:
    fn = _resolve_function(args)
    _write_out(anf_from_truth_table(fn).to_text() + "\n", args.out)
    return EXIT_OK


def _cmd_dual(args) -> int:
    fn = _resolve_function(args)
    _write_out(dual(fn).to_hex() + "\n", args.out)
    return EXIT_OK


def _cmd_orbits(args) -> int:
    lines = [f"{rep.to_string()}\t{len(orbit(rep))}"
             for rep in orbit_representatives(args.n)]
    _write_out("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_lemma_check(args) -> int:
    if args.set_family not in _SET_FAMILIES:
        raise InvalidSpecError(f"--set must be one of {', '.join(_SET_FAMILIES)}")
    gammas = tuple(BitVector.from_string(s) for s in args.gamma)
    esets = tuple(args.eset) if args.eset else None
    spec = GammaSpec(args.k, args.set_family, gammas, esets)
    report = verify_fragmentary_lemma(spec)
    _write_out(emit_report(report, args.format), None)
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_table1(args) -> int:
    report = check_table1(args.k)
    _write_out(emit_report(report, args.format), None)
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_su_check(args) -> int:
    reports = [check_su_conditions(case) for case in SU_CASES]
    _write_out(_emit_reports(reports, args.format), None)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _cmd_repro_examples(args) -> int:
    reports = [check_reference_case(case) for case in REFERENCE_CASES]
    if args.format == "json":
        _write_out(_emit_reports(reports, "json"), None)
    else:
        lines = []
        for rep in reports:
            lines.append(f"{'PASS' if rep.passed else 'FAIL'} {rep.subject}")
            for c in rep.failures():
                detail = c.counterexample or c.details
                lines.append(f"  FAIL {c.name}: {detail}")
        _write_out("\n".join(lines) + "\n", None)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negabench",
        description="Construct and verify bent-negabent Boolean functions.")
    parser.add_argument("--max-n", type=int, default=None,
                        help=f"cap on variable count (default {DEFAULT_MAX_N})")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", help="build a construction and write its JSON record")
    _add_spec_options(sp, with_infile=False)
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(handler=_cmd_gen)

    sp = sub.add_parser("verify", help="verify a construction or a saved file")
    _add_spec_options(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(handler=_cmd_verify)

    sp = sub.add_parser("spectrum", help="print a spectrum, one point per line")
    _add_spec_options(sp)
    sp.add_argument("--kind", choices=["walsh", "nega", "both"], default="both")
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(handler=_cmd_spectrum)

    sp = sub.add_parser("anf", help="print the algebraic normal form")
    _add_spec_options(sp)
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(handler=_cmd_anf)

    sp = sub.add_parser("dual", help="print the dual's truth table in hex")
    _add_spec_options(sp)
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(handler=_cmd_dual)

    sp = sub.add_parser("orbits", help="list rotation orbit representatives")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(handler=_cmd_orbits)

    sp = sub.add_parser("lemma-check",
                        help="verify the fragment spectrum formulas of one modifier set")
    sp.add_argument("--set", dest="set_family", required=True,
                    help="modifier set family (S1, S2, S3, S4)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--gamma", action="append", default=[], metavar="BITS")
    sp.add_argument("--eset", action="append", default=[], choices=["0", "1", "B"])
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(handler=_cmd_lemma_check)

    sp = sub.add_parser("table1", help="verify the bent/negabent relation table")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(handler=_cmd_table1)

    sp = sub.add_parser("su-check",
                        help="verify the subspace-modification comparison cases")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(handler=_cmd_su_check)

    sp = sub.add_parser("repro-examples", help="replay the recorded worked examples")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(handler=_cmd_repro_examples)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    set_max_n(args.max_n if args.max_n is not None else DEFAULT_MAX_N)
    try:
        return args.handler(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except NotBentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except _InputFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE
    except (InvalidSpecError, InvalidPermutationError, DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
