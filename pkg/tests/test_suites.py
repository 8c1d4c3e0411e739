from unittest import TestCase

from qhtoeplitz.checks import CheckResult
from qhtoeplitz.exceptions import InvalidTheorem, SymbolParseError
from qhtoeplitz.suites import (
    SUITES, SuiteReport, VerifyOptions, expected_canonical, grid_cells, load_examples, negative_candidates, run_example,
    run_suite
)


def example_named(name):
    for example in load_examples():
        if example["name"] == name:
            return example
    raise KeyError(name)


class TestExamples(TestCase):
    def test_packaged_examples(self):
        examples = load_examples()
        self.assertEqual(len(examples), 18)
        self.assertEqual(len({example["name"] for example in examples}), 18)

    def test_expected_canonical(self):
        self.assertEqual(expected_canonical(example_named("h-commute-r3")), {0: 0.5, -2: -0.5})

    def test_single_examples(self):
        for name in ("h-commute-r3", "h-gensemi-r3", "b-commute-rank-gap", "b-gensemi-constant", "b-gensemi-r4"):
            rank_report, checks = run_example(example_named(name))
            self.assertIsNotNone(rank_report, name)
            self.assertEqual([check.name for check in checks], ["rank", "canonical", "classifier"])
            for check in checks:
                self.assertTrue(check.passed, (name, check.to_dict()))

    def test_examples_suite(self):
        report = run_suite("examples", VerifyOptions(workers=1))
        self.assertTrue(report.passed, [check.to_dict() for check in report.failures])
        self.assertEqual(report.summary["total"], 18)
        self.assertEqual(len(report.rows), 18)


class TestSweeps(TestCase):
    def test_grid_cells(self):
        cells = grid_cells(VerifyOptions(grid="k1=1..2,k2=-1,m=0|1"), "h-commute", ("k1", "k2", "m"))
        self.assertEqual(len(cells), 4)
        self.assertEqual(cells[0], {"k1": 1, "k2": -1, "m": 0})

    def test_grid_needs_every_axis(self):
        with self.assertRaises(SymbolParseError):
            grid_cells(VerifyOptions(grid="k1=1..2"), "h-commute", ("k1", "k2", "m"))

    def test_small_commutator_sweep(self):
        options = VerifyOptions(grid="k1=1,k2=-3..-1,m=-1|0", workers=2)
        report = run_suite("b-commute", options)
        self.assertTrue(report.passed, [check.to_dict() for check in report.failures])
        self.assertEqual(len(report.rows), 6)
        self.assertEqual(report.summary["skipped"], 2)

    def test_unknown_suite(self):
        with self.assertRaises(InvalidTheorem):
            run_suite("nothing")

    def test_every_suite_is_registered(self):
        self.assertIn("negative-control", SUITES)
        self.assertIn("examples", SUITES)


SMALL_GRID = "k1=-3..3,k2=-3..3,m=-1|0|1|2"


class TestAcceptanceSuites(TestCase):
    def assertSuitePasses(self, name, grid=None):
        report = run_suite(name, VerifyOptions(grid=grid, workers=2))
        self.assertTrue(report.passed, [check.to_dict() for check in report.failures[:5]])
        self.assertGreater(report.summary["passed"], 0)
        return report

    def test_harmonic_classifier_sweeps(self):
        self.assertSuitePasses("h-commute", SMALL_GRID)
        self.assertSuitePasses("h-gensemi", SMALL_GRID)

    def test_cross_space(self):
        self.assertSuitePasses("cross-space", SMALL_GRID)

    def test_parity(self):
        self.assertSuitePasses("parity", SMALL_GRID)

    def test_rank_equivalence(self):
        self.assertSuitePasses("rank-equivalence", SMALL_GRID)

    def test_oracle(self):
        self.assertSuitePasses("oracle")

    def test_lamre_covers_power_symbols(self):
        report = self.assertSuitePasses("lamre")
        self.assertIn("r^6", {check.details["phi"] for check in report.checks})
        self.assertIn((-8, 12), {(check.details["k"], check.details["l"]) for check in report.checks})

    def test_monotonicity(self):
        self.assertSuitePasses("monotonicity")

    def test_negative_control_on_the_default_grid(self):
        report = self.assertSuitePasses("negative-control")
        margin_rows = [row for row in report.rows if row["status"] == "margin"]
        self.assertGreaterEqual(len(margin_rows), 95)
        self.assertTrue(all(row["max_residual"] > 0 for row in margin_rows))

    def test_bump_inside_the_family_is_not_a_candidate(self):
        options = VerifyOptions(grid="k1=1|-4,k2=0,m=-1")
        self.assertEqual(negative_candidates(options), [])
        self.assertEqual(negative_candidates(VerifyOptions(grid="k1=-3,k2=-4,m=3")), [])


class TestSuiteReport(TestCase):
    def test_summary(self):
        report = SuiteReport("demo")
        report.add(CheckResult("a", True), {"status": "pass"})
        report.add(CheckResult("b", False))
        report.add(CheckResult.skipped("c", "nothing to build"))
        self.assertFalse(report.passed)
        self.assertEqual(report.summary, {"total": 3, "passed": 1, "failed": 1, "skipped": 1})
        self.assertEqual(report.to_dict()["failures"][0]["name"], "b")

    def test_extend_tags_rows(self):
        first, second = SuiteReport("all"), SuiteReport("lamre")
        second.add(CheckResult("a", True), {"k": 1})
        first.extend(second)
        self.assertEqual(first.rows, [{"k": 1, "suite": "lamre"}])
