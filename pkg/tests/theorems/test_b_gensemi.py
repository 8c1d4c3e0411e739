from unittest import TestCase

from qhtoeplitz.exceptions import UnsupportedTermError
from qhtoeplitz.mellin import RadialSymbol, mellin_of_symbol
from qhtoeplitz.theorems.b_gensemi import (
    bergman_psi, classify, classify_general, holding_conditions, is_t_function, monomial_psi_transform,
    monomial_rank
)
from qhtoeplitz.theorems.validation import cross_validate


class TestPsi(TestCase):
    def test_monomial_psi(self):
        psi = bergman_psi(2, 1, -2, RadialSymbol.monomial(2))
        self.assertTrue(psi.almost_equal(RadialSymbol.parse("4 - 3*r^-1")))
        self.assertTrue(bergman_psi(3, 5, -1, RadialSymbol.monomial(-1)).almost_equal(RadialSymbol.monomial(4)))

    def test_closed_form_transform_agrees(self):
        psi = bergman_psi(2, 1, -2, RadialSymbol.monomial(2))
        transform = monomial_psi_transform(2, 1, -2, 2)
        for z in (2.0, 3.0, 6.5):
            self.assertAlmostEqual(transform(z), mellin_of_symbol(psi)(z), places=12)

    def test_resonant_term_picks_up_a_logarithm(self):
        # q = p - m - k1 - k2 vanishes for p = 2 at k = (1, 0), m = 1
        psi = bergman_psi(1, 1, 0, RadialSymbol.monomial(2))
        self.assertTrue(psi.almost_equal(RadialSymbol.parse("r + 2*r*log")))

    def test_resonant_log_term(self):
        with self.assertRaises(UnsupportedTermError):
            bergman_psi(1, 1, 0, RadialSymbol.parse("r^2*log"))

    def test_t_functions(self):
        self.assertTrue(is_t_function(RadialSymbol.parse("4 - 3*r^-1")))
        self.assertFalse(is_t_function(RadialSymbol.parse("r^-1.5 + r")))


class TestMonomialClassify(TestCase):
    def test_conditions(self):
        self.assertEqual(holding_conditions(2, 1, -2, 2), [1])
        self.assertEqual(holding_conditions(3, 5, -1, -1), [3])
        self.assertEqual(holding_conditions(1, -1, -3, 3), [2])
        self.assertEqual(holding_conditions(1, 0, -3, 0), [])

    def test_monomial_rank(self):
        self.assertEqual(monomial_rank(2, -2, [1]), (1, (0,)))
        self.assertEqual(monomial_rank(3, -1, [3]), (1, (2,)))
        self.assertEqual(monomial_rank(3, -4, [1]), (2, (0, 1)))
        self.assertEqual(monomial_rank(1, -3, [2]), (1, (0,)))
        self.assertEqual(monomial_rank(2, 1, [1]), (0, ()))

    def test_constant_psi(self):
        verdict = classify(2, 1, -2, 2)
        self.assertEqual(verdict.predicted_rank, 1)
        self.assertEqual(set(verdict.predicted_canonical), {0})
        self.assertAlmostEqual(verdict.predicted_canonical[0], 2.0)

    def test_single_term(self):
        verdict = classify(3, 5, -1, -1)
        self.assertEqual(verdict.predicted_range, (2,))
        self.assertAlmostEqual(verdict.predicted_canonical[2], -0.75)

    def test_vanishing_weight(self):
        verdict = classify(1, -1, -3, 3)
        self.assertTrue(verdict.symbols["psi"].almost_equal(RadialSymbol.monomial(2)))
        self.assertEqual(list(verdict.predicted_canonical), [0])
        self.assertAlmostEqual(verdict.predicted_canonical[0], -1.0)

    def test_non_integrable_psi(self):
        verdict = classify(1, 0, -3, 0)
        self.assertFalse(verdict.finite)
        self.assertIsNone(verdict.predicted_rank)

    def test_validates_against_operators(self):
        for args in ((2, 1, -2, 2), (3, 5, -1, -1), (3, 5, -4, 3), (1, -1, -3, 3)):
            report = cross_validate(classify(*args))
            self.assertTrue(report.passed, (args, report.first_failure))


class TestGeneralClassify(TestCase):
    def test_monomial_phi_matches_the_monomial_case(self):
        verdict = classify_general(2, 1, -2, RadialSymbol.monomial(2))
        self.assertTrue(verdict.finite)
        self.assertEqual(verdict.predicted_rank, 1)
        self.assertAlmostEqual(verdict.predicted_canonical[0], 2.0)

    def test_sufficient_test_is_noted(self):
        verdict = classify_general(2, 1, -2, RadialSymbol.monomial(2))
        self.assertIn("sufficient test holds", verdict.notes)

    def test_psi_outside_the_symbol_floor(self):
        verdict = classify_general(1, 0, -3, RadialSymbol.constant(1.0))
        self.assertFalse(verdict.finite)
        self.assertNotIn("psi", verdict.symbols)
