"""Compare a verdict's predictions with the operators it describes"""
# qhtoeplitz Modules
from qhtoeplitz import settings
from qhtoeplitz.checks import CheckResult, relative_error
from qhtoeplitz.exceptions import MarginViolation, ValidationMismatch
from qhtoeplitz.operators import Space, commutator_map, gen_semicommutator_map, semicommutator_map
from qhtoeplitz.rank import (
    COMMUTATOR, detect_rank, pairing_check, parity_and_bounds, reconstruction_check, svd_rank
)
from qhtoeplitz.theorems.verdict import GENSEMI, SEMICOMMUTATOR
from qhtoeplitz.util.log import logger


class ValidationReport:

    """Predicted vs computed rank, range and canonical coefficients"""

    def __init__(self, verdict, checks, rank_report=None):
        self.verdict = verdict
        self.checks = list(checks)
        self.rank_report = rank_report

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self):
        for check in self.checks:
            if not check.passed:
                return check
        return None

    def raise_for_mismatch(self):
        failure = self.first_failure
        if failure is None:
            return
        raise ValidationMismatch(
            "%s: %s check failed" % (self.verdict.theorem_id, failure.name),
            field=failure.name,
            expected=failure.details.get("expected"),
            found=failure.details.get("found"),
        )

    def __repr__(self):
        return "ValidationReport(%s, %s)" % (self.verdict.theorem_id, "pass" if self.passed else "fail")

    def to_dict(self):
        return {
            "verdict": self.verdict.to_dict(),
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "computed": self.rank_report.to_dict() if self.rank_report else None,
        }


def build_map(verdict, window=None, margin=None):
    """Coefficient map of the operator a verdict talks about"""
    first, second = verdict.operators()
    if verdict.kind == GENSEMI:
        return gen_semicommutator_map(first, second, verdict.symbols["psi"], window, margin)
    if verdict.kind == SEMICOMMUTATOR:
        return semicommutator_map(first, second, window, margin)
    return commutator_map(first, second, window, margin)


def _margin_only(verdict):
    """Whether a negative verdict shows up as a margin violation.

    On L²ₐ the paired ψ always satisfies the coefficient identity; the
    generalized semicommutator fails only because ψ is not a T-function.
    """
    return not (verdict.space is Space.BERGMAN and verdict.kind == GENSEMI)


def compare_canonical(predicted, canonical, tolerance):
    """First index where predicted and computed C_j differ, as a CheckResult"""
    computed = {term.index: term.coefficient for term in canonical}
    for index in sorted(set(predicted) | set(computed)):
        expected = predicted.get(index, 0.0)
        found = computed.get(index, 0.0)
        if relative_error(found, expected) > tolerance:
            return CheckResult("canonical", False, {"index": index, "expected": expected, "found": found})
    return CheckResult("canonical", True, {"terms": len(computed)})


def cross_validate(verdict, window=None, margin=None, tolerance=None, match_tolerance=None):
    """Build the operators of a verdict and check every prediction it makes"""
    match_tolerance = settings.MATCH_TOLERANCE if match_tolerance is None else match_tolerance
    if not verdict.constructible or (verdict.kind == GENSEMI and "psi" not in verdict.symbols):
        return ValidationReport(verdict, [CheckResult.skipped("construct", "no symbols to build operators from")])
    coeff_map = build_map(verdict, window, margin)

    if not verdict.finite:
        if not _margin_only(verdict):
            return ValidationReport(verdict, [CheckResult.skipped("not-finite", "ψ is not a T-function")])
        try:
            report = detect_rank(coeff_map, tolerance=tolerance)
        except MarginViolation as ex:
            return ValidationReport(
                verdict, [CheckResult("not-finite", True, {"index": ex.index, "coefficient": ex.coefficient})]
            )
        logger.warning("%s %s: no condition holds but the map looks finite", verdict.theorem_id, verdict.params)
        return ValidationReport(
            verdict, [CheckResult("not-finite", False, {"expected": None, "found": report.rank})], report
        )

    try:
        report = detect_rank(coeff_map, tolerance=tolerance)
    except MarginViolation as ex:
        check = CheckResult(
            "finite-rank", False, {"expected": "finite", "found": "margin violation", "index": ex.index}
        )
        return ValidationReport(verdict, [check])

    k1, k2 = verdict.degrees
    kind = COMMUTATOR if verdict.kind == COMMUTATOR else GENSEMI
    checks = [CheckResult("finite-rank", True, {"margin": report.margin})]
    if verdict.predicted_rank is not None:
        checks.append(
            CheckResult(
                "rank",
                verdict.predicted_rank == report.rank,
                {"expected": verdict.predicted_rank, "found": report.rank},
            )
        )
    if verdict.predicted_range is not None:
        checks.append(
            CheckResult(
                "range",
                set(verdict.predicted_range) == set(report.range_indices),
                {"expected": list(verdict.predicted_range), "found": list(report.range_indices)},
            )
        )
    if verdict.predicted_canonical is not None:
        checks.append(compare_canonical(verdict.predicted_canonical, report.canonical, match_tolerance))
    if verdict.space is Space.HARMONIC and kind == COMMUTATOR:
        checks.append(pairing_check(report.canonical))
    checks.append(parity_and_bounds(report, k1, k2, kind, verdict.space))
    report.svd_rank = svd_rank(coeff_map)
    checks.append(
        CheckResult("svd-rank", report.svd_rank == report.rank, {"expected": report.rank, "found": report.svd_rank})
    )
    checks.append(reconstruction_check(coeff_map, report.canonical))
    validation = ValidationReport(verdict, checks, report)
    logger.debug("%r: %s", validation, [check.name for check in checks if not check.passed])
    return validation
