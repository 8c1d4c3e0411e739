from unittest import TestCase

from qhtoeplitz.mellin import RadialSymbol
from qhtoeplitz.theorems.h_gensemi import classify, holding_conditions, predicted_rank, product_symbol
from qhtoeplitz.theorems.validation import cross_validate


class TestHoldingConditions(TestCase):
    def test_conditions(self):
        self.assertEqual(holding_conditions(0, 0, 1), [2, 3])
        self.assertEqual(holding_conditions(1, -1, 0), [4])
        self.assertEqual(holding_conditions(1, -3, -1), [5])
        self.assertEqual(holding_conditions(2, -1, 6), [6])
        self.assertEqual(holding_conditions(1, 2, 2), [7])
        self.assertEqual(holding_conditions(1, 6, 3), [8])
        self.assertEqual(holding_conditions(1, 6, 2), [])

    def test_predicted_rank(self):
        self.assertEqual(predicted_rank(1, -3), 2)
        self.assertEqual(predicted_rank(2, -1), 1)
        self.assertEqual(predicted_rank(1, 6), 6)


class TestClassify(TestCase):
    def test_monomial_pair(self):
        verdict = classify(1, -3, -1)
        self.assertEqual(verdict.condition_id, 5)
        self.assertTrue(verdict.symbols["psi"].almost_equal(RadialSymbol.monomial(2)))
        self.assertEqual(verdict.predicted_rank, 2)
        self.assertEqual(verdict.predicted_range, (-1, 0))

    def test_product_symbol_inverts(self):
        self.assertTrue(product_symbol(2, -1, 6).almost_equal(RadialSymbol.parse("r + r^5")))
        self.assertTrue(product_symbol(1, 2, 1).almost_equal(RadialSymbol.monomial(3)))

    def test_admits_scaled_pair(self):
        verdict = classify(1, 2, 1)
        self.assertTrue(verdict.admits(phi2=RadialSymbol.parse("2*r^2"), psi=RadialSymbol.parse("2*r^3")))
        self.assertFalse(verdict.admits(phi2=RadialSymbol.parse("2*r^2"), psi=RadialSymbol.parse("3*r^3")))

    def test_admits_family_with_three_terms(self):
        verdict = classify(1, 2, 2)
        self.assertTrue(
            verdict.admits(
                phi2=RadialSymbol.parse("3*r^3 - r"),
                psi=RadialSymbol.parse("-1/4 - 3/2*r^2 + 15/4*r^4"),
            )
        )

    def test_radial_pair_builds_psi_from_phi(self):
        verdict = classify(0, 0, 1, phi=RadialSymbol.parse("1 + r"))
        self.assertTrue(verdict.finite)
        self.assertEqual(verdict.free_roles, ("phi2",))
        self.assertTrue(verdict.symbols["psi"].almost_equal(RadialSymbol.parse("2*r + r*log")))

    def test_wrong_psi(self):
        verdict = classify(1, -3, -1, psi=RadialSymbol.monomial(3))
        self.assertFalse(verdict.finite)
        self.assertTrue(verdict.symbols["psi"].almost_equal(RadialSymbol.monomial(3)))


class TestAgainstOperators(TestCase):
    def test_finite_verdicts_validate(self):
        for args in ((1, -3, -1), (2, -1, 6), (1, 2, 1), (1, 6, 3)):
            report = cross_validate(classify(*args))
            self.assertTrue(report.passed, (args, report.first_failure))

    def test_radial_pair_vanishes(self):
        report = cross_validate(classify(0, 0, 1, phi=RadialSymbol.parse("1 + r")))
        self.assertTrue(report.passed, report.first_failure)
        self.assertEqual(report.rank_report.rank, 0)
