from unittest import TestCase

from qhtoeplitz.mellin import RadialSymbol
from qhtoeplitz.theorems.b_commute import classify, holding_conditions, rank_one_term
from qhtoeplitz.theorems.validation import cross_validate

PHI = RadialSymbol.parse("3*r^-1 - r^3")


class TestHoldingConditions(TestCase):
    def test_conditions(self):
        self.assertEqual(holding_conditions(0, 0, 1), [2, 3])
        self.assertEqual(holding_conditions(1, 2, 1), [4])
        self.assertEqual(holding_conditions(1, 6, 3), [5])
        self.assertEqual(holding_conditions(1, -3, -1), [6])
        self.assertEqual(holding_conditions(2, -1, 6), [7])
        self.assertEqual(holding_conditions(1, 6, 2), [])

    def test_equal_degrees_are_covered_by_the_gamma_family(self):
        self.assertEqual(holding_conditions(2, 2, 1), [4])


class TestRankOne(TestCase):
    def test_monomial_term(self):
        self.assertEqual(rank_one_term(6, 1, -3, -1, RadialSymbol.monomial(3)), (0, -1.0))

    def test_gamma_term(self):
        index, coefficient = rank_one_term(7, 2, -1, 6, PHI)
        self.assertEqual(index, 1)
        self.assertAlmostEqual(coefficient, -1.5)

    def test_adjoint_side(self):
        index, coefficient = rank_one_term(6, -1, 3, -1, RadialSymbol.monomial(3))
        self.assertEqual((index, coefficient), (2, 1.0))


class TestClassify(TestCase):
    def test_rank_one_commutator(self):
        verdict = classify(2, -1, 6, phi=PHI)
        self.assertEqual(verdict.condition_id, 7)
        self.assertEqual(verdict.predicted_rank, 1)
        self.assertEqual(verdict.predicted_range, (1,))
        self.assertAlmostEqual(verdict.predicted_canonical[1], -1.5)

    def test_canonical_scales_with_the_symbol(self):
        verdict = classify(1, -3, -1, phi=RadialSymbol.parse("2*r^3"))
        self.assertAlmostEqual(verdict.predicted_canonical[0], -2.0)

    def test_commuting_pair(self):
        verdict = classify(1, 2, 1)
        self.assertEqual(verdict.predicted_rank, 0)
        self.assertEqual(verdict.predicted_canonical, {})
        self.assertTrue(verdict.symbols["phi2"].almost_equal(RadialSymbol.monomial(2)))

    def test_not_finite(self):
        self.assertFalse(classify(1, 6, 2).finite)
        self.assertFalse(classify(2, -1, 6, phi=RadialSymbol.monomial(3)).finite)


class TestAgainstOperators(TestCase):
    def test_finite_verdicts_validate(self):
        for verdict in (
            classify(2, -1, 6, phi=PHI),
            classify(1, -3, -1),
            classify(-1, 3, -1),
            classify(1, 2, 1),
            classify(1, -1, 0),
        ):
            report = cross_validate(verdict)
            self.assertTrue(report.passed, (verdict, report.first_failure))

    def test_rank_gap_pair(self):
        report = cross_validate(classify(1, -1, 0))
        self.assertEqual(report.rank_report.rank, 1)
        self.assertEqual(report.rank_report.canonical[0].index, 0)
        self.assertAlmostEqual(report.rank_report.canonical[0].coefficient, -1.0)
