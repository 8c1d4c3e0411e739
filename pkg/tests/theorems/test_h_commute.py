from unittest import TestCase

from qhtoeplitz.exceptions import SymbolDomainError
from qhtoeplitz.mellin import RadialSymbol
from qhtoeplitz.theorems.h_commute import classify, holding_conditions, pairing_symbol
from qhtoeplitz.theorems.validation import cross_validate
from qhtoeplitz.theorems.verdict import FREE_WITNESS


class TestHoldingConditions(TestCase):
    def test_conditions(self):
        self.assertEqual(holding_conditions(0, 3, 0), [1])
        self.assertEqual(holding_conditions(0, 0, 1), [2, 3])
        self.assertEqual(holding_conditions(2, 2, 1), [4])
        self.assertEqual(holding_conditions(1, -1, 2), [5])
        self.assertEqual(holding_conditions(1, -3, -1), [6])
        self.assertEqual(holding_conditions(2, -1, 6), [7])
        self.assertEqual(holding_conditions(1, 2, 1), [8])
        self.assertEqual(holding_conditions(1, 6, 3), [9])

    def test_no_condition(self):
        self.assertEqual(holding_conditions(1, 6, 2), [])
        self.assertEqual(holding_conditions(1, -3, 0), [])

    def test_pairing_symbol(self):
        self.assertTrue(pairing_symbol(2).almost_equal(RadialSymbol.parse("3/2*r^-1 - 1/2*r")))
        self.assertTrue(pairing_symbol(1).almost_equal(RadialSymbol.monomial(-1)))


class TestClassify(TestCase):
    def test_monomial_pair(self):
        verdict = classify(1, -3, -1)
        self.assertTrue(verdict.finite)
        self.assertEqual(verdict.condition_id, 6)
        self.assertEqual(verdict.predicted_rank, 2)
        self.assertEqual(verdict.predicted_range, (-2, 0))
        self.assertTrue(verdict.symbols["phi2"].almost_equal(RadialSymbol.monomial(3)))

    def test_negative_first_degree(self):
        verdict = classify(-1, 3, -1)
        self.assertEqual(verdict.condition_id, 6)
        self.assertEqual(verdict.predicted_rank, 2)

    def test_gamma_family_symbols(self):
        self.assertTrue(classify(1, 2, 1).symbols["phi2"].almost_equal(RadialSymbol.monomial(2)))
        verdict = classify(1, 6, 3)
        self.assertEqual(verdict.predicted_rank, 6)
        self.assertTrue(verdict.symbols["phi2"].almost_equal(RadialSymbol.parse("6*r^8 - 5*r^6")))

    def test_free_radial_part(self):
        verdict = classify(0, 3, 0)
        self.assertEqual(verdict.free_roles, ("phi2",))
        self.assertIs(verdict.symbols["phi2"], FREE_WITNESS)
        self.assertEqual(verdict.predicted_rank, 0)

    def test_given_symbol_that_fits(self):
        verdict = classify(1, 2, 1, phi=RadialSymbol.parse("2*r^2"))
        self.assertTrue(verdict.finite)
        self.assertEqual(verdict.symbols["phi2"], RadialSymbol.parse("2*r^2"))

    def test_given_symbol_that_does_not_fit(self):
        verdict = classify(1, 2, 1, phi=RadialSymbol.monomial(3))
        self.assertFalse(verdict.finite)
        self.assertIsNone(verdict.predicted_rank)
        self.assertIn("given radial parts do not fit any condition", verdict.notes)

    def test_given_symbol_prefers_a_free_condition(self):
        phi = RadialSymbol.parse("1 + r")
        verdict = classify(0, 0, 1, phi=phi)
        self.assertTrue(verdict.finite)
        self.assertEqual(verdict.conditions, (2, 3))
        self.assertIs(verdict.symbols["phi2"], phi)

    def test_admits(self):
        verdict = classify(1, 2, 1)
        self.assertTrue(verdict.admits(phi2=RadialSymbol.parse("2*r^2")))
        self.assertFalse(verdict.admits(phi2=RadialSymbol.monomial(3)))
        self.assertFalse(classify(1, 6, 2).admits(phi2=RadialSymbol.monomial(6)))

    def test_exponent_below_minus_one(self):
        with self.assertRaises(SymbolDomainError):
            classify(1, 2, -2)

    def test_boundary_note(self):
        self.assertTrue(classify(1, -3, -1).notes)
        self.assertEqual(classify(1, 2, 1).notes, [])

    def test_to_dict(self):
        data = classify(1, -3, -1).to_dict()
        self.assertEqual(data["theorem"], "h-commute")
        self.assertEqual(data["condition"], 6)
        self.assertEqual(data["predicted_range"], [-2, 0])
        self.assertIsNone(data["predicted_canonical"])


class TestAgainstOperators(TestCase):
    def test_finite_verdicts_validate(self):
        for args in ((1, -3, -1), (1, 2, 1), (2, -1, 6), (1, 6, 3)):
            report = cross_validate(classify(*args))
            self.assertTrue(report.passed, (args, report.first_failure))

    def test_non_fitting_symbol_is_not_finite(self):
        report = cross_validate(classify(1, 2, 1, phi=RadialSymbol.monomial(3)))
        self.assertTrue(report.passed)
        self.assertEqual(report.checks[0].name, "not-finite")

    def test_no_symbol_to_build(self):
        report = cross_validate(classify(1, 6, 2))
        self.assertTrue(report.checks[0].is_skipped)
