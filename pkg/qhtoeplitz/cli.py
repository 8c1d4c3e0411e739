"""Command line interface: compute, classify, verify and report"""
# Standard Library
import argparse
import csv
import enum
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

# Third Party Libraries
import numpy as np

# qhtoeplitz Modules
from qhtoeplitz import settings
from qhtoeplitz.checks import CheckResult, relative_error
from qhtoeplitz.exceptions import MarginViolation, ToeplitzError, watch_errors
from qhtoeplitz.mellin import RadialSymbol, mellin_of_symbol
from qhtoeplitz.operators import QHOperator, Space, commutator_map, gen_semicommutator_map, residual_summary
from qhtoeplitz.oracle import quad_mellin
from qhtoeplitz.rank import (
    COMMUTATOR, GENSEMI, detect_rank, pairing_check, parity_and_bounds, reconstruction_check, svd_rank
)
from qhtoeplitz.suites import DEFAULT_SEED, ORACLE_TOLERANCE, SUITES, VerifyOptions, run_suite
from qhtoeplitz.theorems import corollaries, import_theorem, normalize_name
from qhtoeplitz.theorems.validation import cross_validate
from qhtoeplitz.util import log
from qhtoeplitz.util.log import logger
from qhtoeplitz.util.strings import format_real, parse_grid
from qhtoeplitz.util.yaml import dump_yaml

THEOREMS = ("h-commute", "h-gensemi", "b-commute", "b-gensemi", "corollaries", "cross-space")
SYMBOL_PARAMS = ("phi", "phi1", "phi2", "psi")
TEXT_PARAMS = ("which", "part")


def plain(value):
    """Turn a report into JSON/YAML friendly builtins"""
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, Fraction):
        return float(value)
    if isinstance(value, enum.Enum):
        return value.value
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


class ReportEnvelope:

    """Everything one command computed, with the knobs it ran under.

    The timestamp is the only field that depends on the clock and stays out
    of `computed()`, so two runs with the same inputs compare equal there.
    """

    def __init__(self, command, inputs, outputs, checks, tolerances=None, window=None, margin=None, rows=None):
        self.command = command
        self.inputs = inputs
        self.outputs = outputs
        self.checks = list(checks)
        self.tolerances = tolerances or {}
        self.window = window
        self.margin = settings.WINDOW_MARGIN if margin is None else margin
        self.rows = rows or []
        self.timestamp = datetime.now(timezone.utc).isoformat()

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def summary(self):
        skipped = sum(1 for check in self.checks if check.is_skipped)
        failed = sum(1 for check in self.checks if not check.passed)
        return {
            "passed": self.passed,
            "total": len(self.checks),
            "failed": failed,
            "skipped": skipped,
        }

    def computed(self):
        return plain(
            {
                "schema": settings.SCHEMA,
                "command": self.command,
                "inputs": self.inputs,
                "outputs": self.outputs,
                "tolerances": self.tolerances,
                "window": list(self.window) if self.window else None,
                "margin": self.margin,
                "summary": self.summary,
            }
        )

    def to_dict(self):
        data = self.computed()
        data["timestamp"] = self.timestamp
        return data


def _tolerance(args):
    return settings.ZERO_TOLERANCE if args.tol is None else args.tol


def _margin(args):
    return settings.WINDOW_MARGIN if args.margin is None else args.margin


# Commands


def cmd_mellin(args):
    """Closed-form Mellin transform and quadrature side by side"""
    symbol = RadialSymbol.parse(args.symbol)
    transform = mellin_of_symbol(symbol)
    tolerance = ORACLE_TOLERANCE if args.tol is None else args.tol
    rows = []
    checks = []
    for z in args.z:
        closed = transform(z)
        numeric = quad_mellin(symbol, z)
        error = relative_error(numeric, closed)
        rows.append({"z": z, "closed_form": closed, "quadrature": numeric, "error": error})
        checks.append(CheckResult("mellin", error <= tolerance, {"z": z, "expected": closed, "found": numeric}))
    return ReportEnvelope(
        "mellin",
        {"symbol": args.symbol, "z": list(args.z)},
        {"symbol": symbol.to_dict(), "values": rows},
        checks,
        tolerances={"comparison": tolerance, "quadrature": settings.QUADRATURE_TOLERANCE},
        rows=rows,
    )


def cmd_rank(args):
    """Rank and canonical form of a commutator or generalized semicommutator"""
    space = Space(args.space)
    first = QHOperator(space, args.k1, RadialSymbol.parse(args.sym1))
    second = QHOperator(space, args.k2, RadialSymbol.parse(args.sym2))
    tolerance = _tolerance(args)
    inputs = {
        "space": space.value, "kind": args.kind, "k1": args.k1, "sym1": args.sym1, "k2": args.k2, "sym2": args.sym2,
    }
    psi = None
    if args.kind == GENSEMI:
        inputs["psi"] = args.psi
        psi = RadialSymbol.parse(args.psi)
        coeff_map = gen_semicommutator_map(first, second, psi, margin=args.margin)
    else:
        coeff_map = commutator_map(first, second, margin=args.margin)
    tolerances = {"zero": tolerance, "svd": settings.SVD_RELATIVE_THRESHOLD}
    try:
        report = detect_rank(coeff_map, tolerance=tolerance)
    except MarginViolation as ex:
        residuals = residual_summary(first, second, _margin(args), psi)
        outputs = dict(residuals, finite=False, index=ex.index, coefficient=ex.coefficient)
        check = CheckResult("finite-rank", False, dict(residuals, index=ex.index, coefficient=ex.coefficient))
        return ReportEnvelope("rank", inputs, outputs, [check], tolerances, coeff_map.window, _margin(args))

    report.svd_rank = svd_rank(coeff_map, tolerance=tolerance)
    checks = [parity_and_bounds(report, args.k1, args.k2, args.kind, space)]
    if space is Space.HARMONIC and args.kind == COMMUTATOR:
        checks.append(pairing_check(report.canonical))
    checks.append(
        CheckResult("svd-rank", report.svd_rank == report.rank, {"expected": report.rank, "found": report.svd_rank})
    )
    checks.append(reconstruction_check(coeff_map, report.canonical))
    rows = [
        {"index": term.index, "partner": term.partner, "coefficient": term.coefficient}
        for term in report.canonical
    ]
    outputs = dict(report.to_dict(), finite=True)
    return ReportEnvelope("rank", inputs, outputs, checks, tolerances, report.window, _margin(args), rows)


def _param_value(name, text):
    if name in SYMBOL_PARAMS:
        return RadialSymbol.parse(text)
    if name == "space":
        return Space(text)
    if name in TEXT_PARAMS:
        return text
    value = Fraction(text)
    if value.denominator == 1:
        return int(value)
    return float(value)


def parse_params(pairs):
    """Classifier keyword arguments from name=value pairs"""
    params = {}
    for pair in pairs:
        name, sep, text = pair.partition("=")
        if not sep or not name:
            raise ToeplitzError("Expected name=value, got %r" % pair)
        try:
            params[name.strip()] = _param_value(name.strip(), text.strip())
        except ValueError as ex:
            raise ToeplitzError("Invalid value for %s: %s" % (name, ex)) from ex
    return params


def cmd_classify(args):
    """Run one classifier and check its verdict against the computed operator"""
    params = parse_params(args.params)
    theorem = normalize_name(args.theorem)
    try:
        if theorem == "corollaries":
            which = params.pop("which", None)
            if which is None:
                raise ToeplitzError("The corollaries need which=<name>, one of %s" % ", ".join(corollaries.CLASSIFIERS))
            verdict = corollaries.classify(which, **params)
        else:
            verdict = import_theorem(theorem)(**params)
    except (TypeError, ValueError) as ex:
        raise ToeplitzError("%s: %s" % (args.theorem, ex)) from ex
    validation = cross_validate(verdict, margin=args.margin, tolerance=args.tol)
    outputs = validation.to_dict()
    inputs = {"theorem": args.theorem, "params": list(args.params)}
    window = validation.rank_report.window if validation.rank_report else None
    return ReportEnvelope(
        "classify", inputs, outputs, validation.checks, {"zero": _tolerance(args)}, window, _margin(args)
    )


def cmd_verify(args):
    """Run a verification suite"""
    if args.grid:
        parse_grid(args.grid)
    options = VerifyOptions(args.grid, args.margin, args.tol, args.workers, args.seed)
    report = run_suite(args.theorem, options)
    outputs = report.to_dict()
    rows = outputs.pop("rows")
    return ReportEnvelope(
        "verify",
        {"theorem": args.theorem, "grid": args.grid, "seed": args.seed},
        outputs,
        report.checks,
        {"zero": _tolerance(args), "match": settings.MATCH_TOLERANCE},
        margin=_margin(args),
        rows=rows,
    )


COMMANDS = {
    "mellin": cmd_mellin,
    "rank": cmd_rank,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


# Output


def _cell(value):
    if isinstance(value, float):
        return format_real(value)
    if value is None:
        return "-"
    return str(value)


def print_table(rows, stream):
    columns = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    if not columns:
        return
    cells = [[_cell(row.get(column)) for column in columns] for row in rows]
    widths = [max([len(column)] + [len(line[i]) for line in cells]) for i, column in enumerate(columns)]
    stream.write(" | ".join("{:<{}}".format(column, width) for column, width in zip(columns, widths)) + "\n")
    for line in cells:
        stream.write(" | ".join("{:<{}}".format(cell, width) for cell, width in zip(line, widths)) + "\n")


def print_grouped(rows, stream):
    """One table per suite when rows come from several suites"""
    groups = {}
    for row in rows:
        groups.setdefault(row.get("suite"), []).append(row)
    if len(groups) < 2:
        print_table(rows, stream)
        return
    for suite, suite_rows in groups.items():
        stream.write("\n[%s]\n" % suite)
        print_table([{key: value for key, value in row.items() if key != "suite"} for row in suite_rows], stream)


def print_human(envelope, stream):
    stream.write("%s %s\n" % (envelope.command, " ".join("%s=%s" % item for item in sorted(
        (key, value) for key, value in envelope.inputs.items() if value is not None
    ))))
    outputs = envelope.outputs
    if envelope.command == "rank":
        if outputs["finite"]:
            stream.write("rank %d, range %s\n" % (outputs["rank"], outputs["range"]))
        else:
            stream.write("not finite rank: coefficient %s at index %s, identity residual %s on %s..%s\n" % (
                format_real(outputs["coefficient"]), outputs["index"], format_real(outputs["max_residual"]),
                outputs["indices"][0], outputs["indices"][1]
            ))
    elif envelope.command == "classify":
        verdict = outputs["verdict"]
        stream.write("%s condition %s, predicted rank %s\n" % (
            verdict["theorem"], verdict["condition"], verdict["predicted_rank"]
        ))
        for note in verdict["notes"]:
            stream.write("  %s\n" % note)
    print_grouped(envelope.rows, stream)
    failures = [check for check in envelope.checks if not check.passed]
    for check in failures[:20]:
        stream.write("FAIL %s: %s\n" % (check.name, plain(check.details)))
    summary = envelope.summary
    stream.write("%d checks, %d failed, %d skipped: %s\n" % (
        summary["total"], summary["failed"], summary["skipped"], "PASS" if summary["passed"] else "FAIL"
    ))


def write_csv(rows, path):
    columns = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    with open(path, "w", newline="") as csv_file:
        writer = csv.DictWriter(csv_file, fieldnames=columns)
        writer.writeheader()
        for row in rows:
            writer.writerow(plain(row))
    logger.info("Wrote %d rows to %s", len(rows), path)


def emit(envelope, args, stream=None):
    stream = stream or sys.stdout
    if args.json:
        stream.write(json.dumps(envelope.to_dict(), indent=2) + "\n")
    elif args.yaml:
        stream.write(dump_yaml(envelope.to_dict()))
    else:
        print_human(envelope, stream)
    if args.csv:
        write_csv(envelope.rows, args.csv)


# Arguments


def build_parser():
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT,
        description="Quasihomogeneous Toeplitz operators on the Bergman and harmonic Bergman spaces",
    )
    parser.add_argument("--version", action="version", version="%(prog)s-" + settings.VERSION)
    parser.add_argument("-d", "--debug", action="store_true", help="Show debug messages")
    output = parser.add_mutually_exclusive_group()
    output.add_argument("-j", "--json", action="store_true", help="Print the report as JSON")
    output.add_argument("--yaml", action="store_true", help="Print the report as YAML")
    parser.add_argument("--csv", metavar="PATH", help="Write the report rows to a CSV file")
    parser.add_argument("--tol", type=float, help="Zero tolerance (default %s)" % settings.ZERO_TOLERANCE)
    parser.add_argument("--margin", type=int, help="Window margin (default %s)" % settings.WINDOW_MARGIN)
    parser.add_argument("--workers", type=int, help="Grid workers (default %s)" % settings.GRID_WORKERS)
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    mellin_p = subparsers.add_parser("mellin", help="Mellin transform of a radial symbol")
    mellin_p.add_argument("--symbol", required=True, help='Radial symbol, e.g. "3*r^-1 - r^3"')
    mellin_p.add_argument("--z", required=True, type=float, nargs="+", help="Evaluation points")

    rank_p = subparsers.add_parser("rank", help="Rank and canonical form of an operator pair")
    rank_p.add_argument("--space", choices=[space.value for space in Space], default=Space.HARMONIC.value)
    rank_p.add_argument("--kind", choices=(COMMUTATOR, GENSEMI), default=COMMUTATOR)
    rank_p.add_argument("--k1", type=int, required=True)
    rank_p.add_argument("--sym1", required=True)
    rank_p.add_argument("--k2", type=int, required=True)
    rank_p.add_argument("--sym2", required=True)
    rank_p.add_argument("--psi", help="Radial part of T_ψ for --kind gensemi")

    classify_p = subparsers.add_parser("classify", help="Run one classification theorem")
    classify_p.add_argument("theorem", choices=THEOREMS)
    classify_p.add_argument("params", nargs="*", metavar="NAME=VALUE", help='e.g. k1=1 k2=2 m=1 phi="2*r^2"')

    verify_p = subparsers.add_parser("verify", help="Run a verification suite")
    verify_p.add_argument("--theorem", required=True, choices=list(SUITES) + ["all"])
    verify_p.add_argument("--grid", help='Grid, e.g. "k1=-6..6,k2=-6..6,m=-1..7"')
    verify_p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


@watch_errors
def run_command(args):
    envelope = COMMANDS[args.command](args)
    emit(envelope, args)
    return 0 if envelope.passed else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "rank" and args.kind == GENSEMI and not args.psi:
        parser.error("--kind gensemi needs --psi")
    log.attach_log_file()
    if args.debug:
        log.enable_debug()
    logger.debug("Running %s %s", settings.PROJECT, settings.VERSION)
    return run_command(args)


if __name__ == "__main__":
    sys.exit(main())
