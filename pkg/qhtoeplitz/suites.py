"""Verification suites run by `qhtoeplitz verify`.

Every suite returns a SuiteReport holding the checks it ran and one flat row
per instance, used for the table and CSV outputs.
"""
# Standard Library
import itertools
from functools import partial
from fractions import Fraction

# Third Party Libraries
import numpy as np

# qhtoeplitz Modules
from qhtoeplitz import settings
from qhtoeplitz.checks import CheckResult, relative_error
from qhtoeplitz.exceptions import InvalidTheorem, MarginViolation, SymbolParseError
from qhtoeplitz.mellin import (
    GammaRatioTransform, MonotoneKind, RadialSymbol, as_transform, mellin_of_symbol, monotonicity_certificate
)
from qhtoeplitz.operators import (
    QHOperator, Space, apply_bergman, commutator_map, gen_semicommutator_map, harmonic_lambda, lamre_check,
    monomial_operator, residual_summary
)
from qhtoeplitz.oracle import quad_mellin, quad_projection_coeff, reproducing_check
from qhtoeplitz.rank import detect_rank, finite_rank_or_none, rank_equivalence_check
from qhtoeplitz.theorems import b_commute, b_gensemi, corollaries, cross_space, h_commute, h_gensemi, import_theorem
from qhtoeplitz.theorems.validation import compare_canonical, cross_validate
from qhtoeplitz.theorems.verdict import FREE_WITNESS, proportionality
from qhtoeplitz.util import datapath
from qhtoeplitz.util.jobs import TaskFailure, run_parallel
from qhtoeplitz.util.log import logger
from qhtoeplitz.util.strings import parse_grid
from qhtoeplitz.util.yaml import read_yaml_from_file

DEFAULT_SEED = 20231
EXAMPLES_FILE = "examples.yml"

DEFAULT_GRIDS = {
    "h-commute": "k1=-6..6,k2=-6..6,m=-1..7",
    "h-gensemi": "k1=-6..6,k2=-6..6,m=-1..7",
    "b-commute": "k1=-6..6,k2=-6..6,m=-1..7",
    "b-gensemi": "k1=-4..4,m1=-1..4,k2=-4..4,m2=-1..4",
    "cross-space": "k1=-6..6,k2=-6..6,m=-1..7",
    "parity": "k1=-6..6,k2=-6..6,m=-1..7",
    "rank-equivalence": "k1=-6..6,k2=-6..6,m=-1..7",
    "negative-control": "k1=-6..6,k2=-6..6,m=-1..7",
    "lamre": "k=-8..8,l=-12..12",
}

ORACLE_MELLIN_DRAWS = 500
ORACLE_PROJECTION_DRAWS = 300
ORACLE_BERGMAN_SHARE = 3
ORACLE_TOLERANCE = 1e-8
MONOTONICITY_DRAWS = 20
MONOTONICITY_SAMPLES = 200
NEGATIVE_DRAWS = 100
NEGATIVE_MARGIN_SHARE = 0.95
NEGATIVE_BUMP = 0.1
LAMRE_TOLERANCE = 1e-11

LAMRE_POWERS = range(-1, 7)
LAMRE_SYMBOLS = ("3*r^-1 - r^3", "1 + r", "2 + r^2*log", "r^-1 - 5*r^4")
REPRODUCING_POINTS = (0.3 + 0.2j, -0.5j, 0.7)


class VerifyOptions:

    """Knobs shared by every suite; None falls back to the settings"""

    def __init__(self, grid=None, margin=None, tolerance=None, workers=None, seed=DEFAULT_SEED):
        self.grid = grid
        self.margin = margin
        self.tolerance = tolerance
        self.workers = settings.GRID_WORKERS if workers is None else workers
        self.seed = seed

    def rng(self):
        return np.random.default_rng(self.seed)

    def to_dict(self):
        return {
            "grid": self.grid,
            "margin": settings.WINDOW_MARGIN if self.margin is None else self.margin,
            "tolerance": settings.ZERO_TOLERANCE if self.tolerance is None else self.tolerance,
            "workers": self.workers,
            "seed": self.seed,
        }


class SuiteReport:

    """Checks and per-instance rows collected by one suite"""

    def __init__(self, name):
        self.name = name
        self.checks = []
        self.rows = []
        self.notes = []

    def add(self, check, row=None):
        self.checks.append(check)
        if row is not None:
            self.rows.append(row)

    def extend(self, other):
        self.checks.extend(other.checks)
        self.rows.extend(dict(row, suite=other.name) for row in other.rows)
        self.notes.extend(other.notes)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    @property
    def summary(self):
        skipped = sum(1 for check in self.checks if check.is_skipped)
        failed = len(self.failures)
        return {
            "total": len(self.checks),
            "passed": len(self.checks) - failed - skipped,
            "failed": failed,
            "skipped": skipped,
        }

    def __repr__(self):
        return "SuiteReport(%s, %s)" % (self.name, self.summary)

    def to_dict(self, max_failures=50):
        return {
            "suite": self.name,
            "passed": self.passed,
            "summary": self.summary,
            "failures": [check.to_dict() for check in self.failures[:max_failures]],
            "notes": self.notes,
            "rows": self.rows,
        }


def grid_cells(options, suite, axes):
    """Parameter tuples of a suite's grid as dicts, in grid order"""
    text = options.grid or DEFAULT_GRIDS[suite]
    grid = parse_grid(text)
    for axis in axes:
        if axis not in grid:
            raise SymbolParseError("grid for %s needs the axis %r" % (suite, axis), text, 0)
    return [dict(zip(axes, values)) for values in itertools.product(*(grid[axis] for axis in axes))]


def _error_check(name, item, error):
    details = dict(item) if isinstance(item, dict) else {"item": repr(item)}
    details["error"] = str(error)
    return CheckResult(name, False, details)


# Theorem grids


def _validation_row(cell, verdict, validation):
    row = dict(cell)
    row["condition"] = verdict.condition_id
    row["predicted_rank"] = verdict.predicted_rank
    row["rank"] = validation.rank_report.rank if validation.rank_report else None
    failure = validation.first_failure
    if all(check.is_skipped for check in validation.checks):
        row["status"] = "skipped"
    else:
        row["status"] = "pass" if failure is None else "fail: %s" % failure.name
    return row


def _theorem_sweep(name, classify, axes, options):
    """Classify every cell of the grid and cross-validate the verdict"""
    report = SuiteReport(name)

    def validate(cell):
        verdict = classify(**cell)
        return verdict, cross_validate(verdict, margin=options.margin, tolerance=options.tolerance)

    cells = grid_cells(options, name, axes)
    for cell, result in zip(cells, run_parallel(validate, cells, options.workers)):
        if isinstance(result, TaskFailure):
            report.add(_error_check(name, cell, result.error), dict(cell, status="error"))
            continue
        verdict, validation = result
        details = dict(cell, condition=verdict.condition_id)
        failure = validation.first_failure
        if failure is not None:
            details["failure"] = failure.to_dict()
        if all(check.is_skipped for check in validation.checks):
            check = CheckResult.skipped(name, validation.checks[0].details["skipped"])
        else:
            check = CheckResult(name, validation.passed, details)
        report.add(check, _validation_row(cell, verdict, validation))
    return report


def suite_h_commute(options):
    return _theorem_sweep("h-commute", h_commute.classify, ("k1", "k2", "m"), options)


def suite_h_gensemi(options):
    return _theorem_sweep("h-gensemi", h_gensemi.classify, ("k1", "k2", "m"), options)


def suite_b_commute(options):
    return _theorem_sweep("b-commute", b_commute.classify, ("k1", "k2", "m"), options)


def suite_b_gensemi(options):
    return _theorem_sweep("b-gensemi", b_gensemi.classify, ("k1", "m1", "k2", "m2"), options)


# Worked examples


def load_examples(path=None):
    """Worked examples from the packaged regression file"""
    path = path or datapath.get_file(EXAMPLES_FILE)
    examples = read_yaml_from_file(path).get("examples") or []
    if not examples:
        logger.warning("No examples found in %s", path)
    return examples


def expected_canonical(example):
    return {
        int(index): float(Fraction(str(value)))
        for index, value in (example.get("canonical") or {}).items()
    }


def example_map(example, margin=None):
    """Coefficient map of the operator an example describes"""
    space = Space(example["space"])
    first = QHOperator(space, example["k1"], RadialSymbol.parse(example["sym1"]))
    second = QHOperator(space, example["k2"], RadialSymbol.parse(example["sym2"]))
    if example["kind"] == "gensemi":
        return gen_semicommutator_map(first, second, RadialSymbol.parse(example["psi"]), margin=margin)
    return commutator_map(first, second, margin=margin)


def _classifier_check(example):
    classifier = example["classifier"]
    verdict = import_theorem(classifier["theorem"])(**classifier["args"])
    candidates = {"phi2": RadialSymbol.parse(example["sym2"])}
    if example.get("psi"):
        candidates["psi"] = RadialSymbol.parse(example["psi"])
    admitted = verdict.admits(**candidates)
    return CheckResult(
        "classifier",
        admitted and verdict.predicted_rank == example["rank"],
        {
            "theorem": verdict.theorem_id,
            "condition": verdict.condition_id,
            "admitted": admitted,
            "expected": example["rank"],
            "found": verdict.predicted_rank,
        },
    )


def run_example(example, margin=None, tolerance=None):
    """Checks reproducing one worked example"""
    checks = []
    try:
        rank_report = detect_rank(example_map(example, margin), tolerance=tolerance)
    except MarginViolation as ex:
        checks.append(CheckResult("finite-rank", False, {"index": ex.index, "coefficient": ex.coefficient}))
        return None, checks
    expected_rank = example["rank"]
    checks.append(
        CheckResult("rank", rank_report.rank == expected_rank, {"expected": expected_rank, "found": rank_report.rank})
    )
    checks.append(compare_canonical(expected_canonical(example), rank_report.canonical, settings.MATCH_TOLERANCE))
    if example.get("classifier"):
        checks.append(_classifier_check(example))
    return rank_report, checks


def suite_examples(options):
    report = SuiteReport("examples")
    for example in load_examples():
        name = example["name"]
        try:
            rank_report, checks = run_example(example, options.margin, options.tolerance)
        except Exception as ex:  # pylint: disable=broad-except
            logger.error("Example %s raised: %s", name, ex)
            report.add(_error_check(name, {"example": name}, ex), {"example": name, "status": "error"})
            continue
        failed = [check for check in checks if not check.passed]
        details = {"example": name}
        if failed:
            details["failures"] = [check.to_dict() for check in failed]
        report.add(
            CheckResult(name, not failed, details),
            {
                "example": name,
                "space": example["space"],
                "kind": example["kind"],
                "rank": rank_report.rank if rank_report else None,
                "status": "pass" if not failed else "fail: %s" % failed[0].name,
            },
        )
    return report


# Corollaries

CORR_DEGREES = (-3, -2, -1, 1, 2, 3)
CORR_EXPONENTS = (-1, 0, 1, 2, 3)


def _generic_commutator(space):
    return b_commute if space is Space.BERGMAN else h_commute


def _comr_instance(space, k1, m1, k2, m2):
    verdict = corollaries.comr(k1, m1, k2, m2, space=space)
    generic = _generic_commutator(space).classify(k1, k2, m1, phi=RadialSymbol.monomial(m2))
    return verdict, generic.finite


def _commonial_instance(space, part, k1, k2):
    power = k2 if part == "a" else -k2
    return corollaries.commonial(part, k1, k2, RadialSymbol.monomial(power), space=space), True


def _semimono_instance(k1, m1, k2, m2):
    verdict = corollaries.semimono(k1, m1, k2, m2)
    phi = RadialSymbol.monomial(m2)
    if verdict.finite:
        return verdict, h_gensemi.classify(k1, k2, m1, phi=phi, psi=verdict.symbols["psi"]).finite
    return verdict, h_gensemi.classify(k1, k2, m1, phi=phi).finite


def _semianaly_instance(part, k1, k2):
    degree, power, product = (k1, k2, k1 + k2) if part == "a" else (-k1, -k2, k1 - k2)
    phi, psi = RadialSymbol.monomial(power), RadialSymbol.monomial(product)
    verdict = corollaries.semianaly(part, k1, k2, phi, psi)
    return verdict, h_gensemi.classify(degree, k2, k1, phi=phi, psi=psi).finite


def _semicom_instance(k1, k2, m):
    power = k2 if m == k1 else -k2
    verdict = corollaries.semicom(k1, k2, m, RadialSymbol.monomial(power))
    return verdict, None


def _radial_instance(which, part, k, *symbols, expected=None):
    return corollaries.classify(which, part, k, *symbols), expected


def _corollary_instances():
    """(name, params, builder) where builder returns (verdict, expected finiteness or None)"""
    instances = []
    for space in Space:
        for k1, k2, m1, m2 in itertools.product(CORR_DEGREES, CORR_DEGREES, CORR_EXPONENTS, CORR_EXPONENTS):
            params = {"space": space.value, "k1": k1, "m1": m1, "k2": k2, "m2": m2}
            instances.append(("comr", params, partial(_comr_instance, space, k1, m1, k2, m2)))
        for k1, part, offset in itertools.product((-1, 1, 2, 3), ("a", "b"), range(-1, 4)):
            k2 = offset if part == "a" else -offset
            params = {"space": space.value, "part": part, "k1": k1, "k2": k2}
            instances.append(("commonial", params, partial(_commonial_instance, space, part, k1, k2)))
    for k1, k2, m1, m2 in itertools.product(CORR_DEGREES, CORR_DEGREES, CORR_EXPONENTS, CORR_EXPONENTS):
        params = {"k1": k1, "m1": m1, "k2": k2, "m2": m2}
        instances.append(("semimono", params, partial(_semimono_instance, k1, m1, k2, m2)))
    for k1, k2 in itertools.product(CORR_DEGREES, CORR_DEGREES):
        for m, power in ((k1, k2), (-k1, -k2)):
            # r^m, φ and their product must stay integrable
            if m < -1 or power < -1 or m + power < -1:
                continue
            instances.append(("semicom", {"k1": k1, "k2": k2, "m": m}, partial(_semicom_instance, k1, k2, m)))
    for k1, k2, part in itertools.product((-1, 1, 2, 3), range(-3, 4), ("a", "b")):
        power, product = (k2, k1 + k2) if part == "a" else (-k2, k1 - k2)
        if power < -1 or product < -1:
            continue
        instances.append(("semianaly", {"part": part, "k1": k1, "k2": k2}, partial(_semianaly_instance, part, k1, k2)))
    radial = RadialSymbol.parse("1 + r^2")
    pairing = h_commute.pairing_symbol(1.0)
    r, r_inverse, one = RadialSymbol.monomial(1), RadialSymbol.monomial(-1), RadialSymbol.constant(1.0)
    for k in (-2, -1, 0, 1, 2):
        instances.append(
            ("cradial", {"part": "a", "k": k}, partial(_radial_instance, "cradial", "a", k, radial, pairing))
        )
        if not k:
            continue
        instances.append(
            ("cradial", {"part": "b", "k": k},
             partial(_radial_instance, "cradial", "b", k, radial, radial * 3.0, expected=True))
        )
        instances.append(
            ("cradial", {"part": "c", "k": k},
             partial(_radial_instance, "cradial", "c", k, r, r_inverse, expected=abs(k) == 1))
        )
        instances.append(
            ("pradial", {"part": "b", "k": k},
             partial(_radial_instance, "pradial", "b", k, r, r_inverse, one, expected=abs(k) == 1))
        )
    return instances


def _corollary_check(name, params, build, options):
    verdict, expected = build()
    checks = []
    if expected is not None:
        checks.append(
            CheckResult("agreement", verdict.finite == expected, {"corollary": verdict.finite, "expected": expected})
        )
    if verdict.finite:
        checks.extend(cross_validate(verdict, margin=options.margin, tolerance=options.tolerance).checks)
    failed = [check for check in checks if not check.passed]
    details = dict(params, corollary=name, condition=verdict.condition_id)
    if failed:
        details["failures"] = [check.to_dict() for check in failed]
    row = dict(params, corollary=name, finite=verdict.finite, status="pass" if not failed else "fail")
    return CheckResult("corollary-%s" % name, not failed, details), row


def suite_corollaries(options):
    report = SuiteReport("corollaries")
    instances = _corollary_instances()

    def run(instance):
        name, params, build = instance
        return _corollary_check(name, params, build, options)

    for instance, result in zip(instances, run_parallel(run, instances, options.workers)):
        if isinstance(result, TaskFailure):
            report.add(_error_check("corollary-%s" % instance[0], instance[1], result.error))
            continue
        report.add(*result)
    return report


# Cross-space, parity, rank equivalence


def _pair_checks(k1, k2, phi1, phi2, psi, options):
    return cross_space.cross_space_checks(k1, k2, phi1, phi2, psi, margin=options.margin, tolerance=options.tolerance)


def _cross_space_cell(cell, options):
    k1, k2, m = cell["k1"], cell["k2"], cell["m"]
    phi1 = RadialSymbol.monomial(m)
    commute = h_commute.classify(k1, k2, m)
    phi2 = commute.symbols["phi2"] if commute.constructible else FREE_WITNESS
    checks = _pair_checks(k1, k2, phi1, phi2, None, options)[:1]
    gensemi = h_gensemi.classify(k1, k2, m)
    if gensemi.finite and gensemi.constructible and "psi" in gensemi.symbols:
        checks.append(
            _pair_checks(k1, k2, phi1, gensemi.symbols["phi2"], gensemi.symbols["psi"], options)[1]
        )
    verdict = cross_space.classify(k1, k2, m)
    if verdict.finite:
        checks.extend(cross_validate(verdict, margin=options.margin, tolerance=options.tolerance).checks)
    return commute.finite, checks


def suite_cross_space(options):
    report = SuiteReport("cross-space")
    cells = grid_cells(options, "cross-space", ("k1", "k2", "m"))
    results = run_parallel(lambda cell: _cross_space_cell(cell, options), cells, options.workers)
    for cell, result in zip(cells, results):
        if isinstance(result, TaskFailure):
            report.add(_error_check("cross-space", cell, result.error), dict(cell, status="error"))
            continue
        finite, checks = result
        failed = [check for check in checks if not check.passed]
        details = dict(cell)
        if failed:
            details["failures"] = [check.to_dict() for check in failed]
        report.add(
            CheckResult("cross-space", not failed, details),
            dict(cell, finite=finite, status="pass" if not failed else "fail: %s" % failed[0].name),
        )
    for m in sorted({cell["m"] for cell in cells if cell["m"] >= -1}):
        check = cross_space.rank_gap_instance(m, margin=options.margin, tolerance=options.tolerance)
        report.add(check, {"m": m, "instance": "rank-gap", "status": "pass" if check.passed else "fail"})
    return report


def suite_parity(options):
    """No harmonic commutator of the grid has odd rank"""
    report = SuiteReport("parity")
    cells = grid_cells(options, "parity", ("k1", "k2", "m"))

    def rank_of(cell):
        verdict = h_commute.classify(**cell)
        if not verdict.finite:
            return None
        first, second = verdict.operators()
        return detect_rank(commutator_map(first, second, margin=options.margin), tolerance=options.tolerance).rank

    for cell, result in zip(cells, run_parallel(rank_of, cells, options.workers)):
        if isinstance(result, TaskFailure):
            report.add(_error_check("parity", cell, result.error), dict(cell, status="error"))
        elif result is not None:
            report.add(CheckResult("parity", result % 2 == 0, dict(cell, rank=result)), dict(cell, rank=result))
    return report


def suite_rank_equivalence(options):
    """T1T2 - T_ψ and T2T1 - T_ψ share their rank on every finite gensemi cell"""
    report = SuiteReport("rank-equivalence")
    cells = grid_cells(options, "rank-equivalence", ("k1", "k2", "m"))

    def equivalence(cell):
        verdict = h_gensemi.classify(**cell)
        if not verdict.finite or "psi" not in verdict.symbols or not verdict.constructible:
            return None
        first, second = verdict.operators()
        return rank_equivalence_check(
            first, second, verdict.symbols["psi"], margin=options.margin, tolerance=options.tolerance
        )

    for cell, result in zip(cells, run_parallel(equivalence, cells, options.workers)):
        if isinstance(result, TaskFailure):
            report.add(_error_check("rank-equivalence", cell, result.error), dict(cell, status="error"))
        elif result is not None:
            result.details.update(cell)
            report.add(result, dict(cell, **result.details))
    return report


# Oracle, identities, monotonicity


def random_symbol(rng, floor=-1.5, top=4.0, log_share=0.3):
    """1 to 3 terms with half-integer powers in [floor, top]"""
    terms = []
    for _ in range(int(rng.integers(1, 4))):
        power = float(rng.integers(int(2 * floor), int(2 * top) + 1)) / 2
        coeff = float(rng.uniform(-2.0, 2.0))
        logexp = int(rng.random() < log_share)
        terms.append((coeff, power, logexp))
    return RadialSymbol(terms)


def _oracle_mellin_checks(rng, report):
    for draw in range(ORACLE_MELLIN_DRAWS):
        symbol = random_symbol(rng)
        if symbol.is_zero:
            continue
        z = float(rng.uniform(2.0, 12.0))
        closed = mellin_of_symbol(symbol)(z)
        quad = quad_mellin(symbol, z)
        error = relative_error(quad, closed)
        report.add(
            CheckResult(
                "oracle-mellin",
                error <= ORACLE_TOLERANCE,
                {"draw": draw, "symbol": symbol.as_text(), "z": z, "closed": closed, "quadrature": quad},
            )
        )


def _oracle_projection_checks(rng, report):
    for draw in range(ORACLE_PROJECTION_DRAWS):
        symbol = random_symbol(rng)
        k = int(rng.integers(-6, 7))
        if draw % ORACLE_BERGMAN_SHARE == 0:
            space = Space.BERGMAN
            l = int(rng.integers(0, 9))
            image = apply_bergman(QHOperator(space, k, symbol), l)
            closed = 0.0 if image.annihilated else image.coefficient
        else:
            space = Space.HARMONIC
            l = int(rng.integers(-8, 9))
            closed = harmonic_lambda(k, as_transform(symbol), l)
        quad = quad_projection_coeff(k, symbol, l, space)
        error = relative_error(quad, closed)
        report.add(
            CheckResult(
                "oracle-projection",
                error <= ORACLE_TOLERANCE,
                {"draw": draw, "space": space.value, "k": k, "l": l, "symbol": symbol.as_text(), "error": error},
            )
        )


def suite_oracle(options):
    report = SuiteReport("oracle")
    rng = options.rng()
    _oracle_mellin_checks(rng, report)
    _oracle_projection_checks(rng, report)
    for point in REPRODUCING_POINTS:
        for index in range(-3, 4):
            report.add(reproducing_check(index, point, Space.HARMONIC))
            if index >= 0:
                report.add(reproducing_check(index, point, Space.BERGMAN))
    return report


def suite_lamre(options):
    """(|l|+1)·λ_{k,l} = (|l+k|+1)·λ_{k,-l-k} on the grid, for several radial parts"""
    report = SuiteReport("lamre")
    radials = [("r^%d" % power, RadialSymbol.monomial(power)) for power in LAMRE_POWERS]
    radials.extend((text, RadialSymbol.parse(text)) for text in LAMRE_SYMBOLS)
    ratio = GammaRatioTransform.commutator_family(2, 1, 3, prefactor=0.5)
    radials.append((repr(ratio), ratio))
    for cell in grid_cells(options, "lamre", ("k", "l")):
        for name, radial in radials:
            check = lamre_check(cell["k"], radial, cell["l"], tolerance=LAMRE_TOLERANCE)
            check.details["phi"] = name
            report.add(check)
    return report


# Parameter ranges and sample intervals inside the monotonicity domains
MONOTONICITY_CASES = (
    (MonotoneKind.F, (0.2, 3.0), lambda a: (a + 0.1, a + 10.0)),
    (MonotoneKind.F, (-3.0, -0.2), lambda a: (0.1, 10.0)),
    (MonotoneKind.G, (0.1, 0.9), lambda a: (-8.0, a - 0.05)),
    (MonotoneKind.G, (1.2, 4.0), lambda a: (-8.0, 0.95)),
)


def suite_monotonicity(options):
    report = SuiteReport("monotonicity")
    rng = options.rng()
    for kind, (low, high), interval in MONOTONICITY_CASES:
        for _draw in range(MONOTONICITY_DRAWS):
            a = float(rng.uniform(low, high))
            b = float(rng.uniform(0.3, 3.0))
            check = monotonicity_certificate(kind, (a, b), interval(a), samples=MONOTONICITY_SAMPLES)
            report.add(check, {"kind": kind.value, "a": a, "b": b, "status": "pass" if check.passed else "fail"})
    return report


def negative_candidates(options):
    """Commutator cells whose finite-rank φ is fully determined.

    Cells where the bump is proportional to φ itself are left out: there the
    perturbed symbol stays inside the finite-rank family.
    """
    candidates = []
    for cell in grid_cells(options, "negative-control", ("k1", "k2", "m")):
        verdict = h_commute.classify(**cell)
        if not verdict.finite or verdict.free_roles or {1, 3} & set(verdict.conditions):
            continue
        if proportionality(perturbed_symbol(verdict), verdict.symbols["phi2"]) is not None:
            logger.debug("Bump keeps φ in its family at %s", cell)
            continue
        candidates.append(verdict)
    return candidates


def perturbed_symbol(verdict, bump=NEGATIVE_BUMP):
    """φ + bump·r^(m+1), off the finite-rank family"""
    shift = RadialSymbol.monomial(verdict.params["m"] + 1, bump)
    phi = verdict.symbols["phi2"]
    if isinstance(phi, RadialSymbol):
        return phi + shift
    return as_transform(phi) + shift


def suite_negative_control(options):
    """A perturbed φ must fail the margin check, or at least the classifier"""
    report = SuiteReport("negative-control")
    candidates = negative_candidates(options)
    if not candidates:
        report.add(CheckResult("negative-control", False, {"reason": "no candidate cells in the grid"}))
        return report
    rng = options.rng()
    margin_failures = 0
    for draw in range(NEGATIVE_DRAWS):
        verdict = candidates[int(rng.integers(len(candidates)))]
        k1, k2 = verdict.degrees
        m = verdict.params["m"]
        perturbed = perturbed_symbol(verdict)
        first = monomial_operator(Space.HARMONIC, k1, m)
        second = QHOperator(Space.HARMONIC, k2, perturbed)
        coeff_map = commutator_map(first, second, margin=options.margin)
        row = {"draw": draw, "k1": k1, "k2": k2, "m": m}
        if finite_rank_or_none(coeff_map, options.tolerance) is None:
            margin_failures += 1
            margin = settings.WINDOW_MARGIN if options.margin is None else options.margin
            row["max_residual"] = residual_summary(first, second, margin)["max_residual"]
            report.add(CheckResult("negative-margin", True, row), dict(row, status="margin"))
            continue
        rejected = not h_commute.classify(k1, k2, m, phi=perturbed).finite
        report.add(CheckResult("negative-classifier", rejected, row), dict(row, status="classifier"))
    share = margin_failures / NEGATIVE_DRAWS
    report.add(
        CheckResult(
            "negative-share",
            share >= NEGATIVE_MARGIN_SHARE,
            {"margin_failures": margin_failures, "draws": NEGATIVE_DRAWS, "required": NEGATIVE_MARGIN_SHARE},
        )
    )
    return report


SUITES = {
    "examples": suite_examples,
    "h-commute": suite_h_commute,
    "h-gensemi": suite_h_gensemi,
    "b-commute": suite_b_commute,
    "b-gensemi": suite_b_gensemi,
    "corollaries": suite_corollaries,
    "cross-space": suite_cross_space,
    "parity": suite_parity,
    "rank-equivalence": suite_rank_equivalence,
    "oracle": suite_oracle,
    "lamre": suite_lamre,
    "monotonicity": suite_monotonicity,
    "negative-control": suite_negative_control,
}


def run_suite(name, options=None):
    """Run one named suite, or every suite for "all" """
    options = options or VerifyOptions()
    if name == "all":
        if options.grid:
            logger.warning("--grid is ignored by the 'all' suite")
        report = SuiteReport("all")
        for suite_name in SUITES:
            report.extend(run_suite(suite_name, VerifyOptions(None, options.margin, options.tolerance,
                                                              options.workers, options.seed)))
        return report
    try:
        suite = SUITES[name]
    except KeyError as ex:
        raise InvalidTheorem("Unknown verification suite '%s'" % name) from ex
    report = suite(options)
    summary = report.summary
    logger.info("%s: %d passed, %d failed, %d skipped", name, summary["passed"], summary["failed"], summary["skipped"])
    return report
