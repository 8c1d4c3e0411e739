from unittest import TestCase

from qhtoeplitz.exceptions import InvalidTheorem
from qhtoeplitz.mellin import RadialSymbol
from qhtoeplitz.operators import Space
from qhtoeplitz.theorems import corollaries
from qhtoeplitz.theorems.validation import cross_validate

R = RadialSymbol.monomial(1)
R_INV = RadialSymbol.monomial(-1)
ONE = RadialSymbol.constant(1.0)


class TestRadialCommutators(TestCase):
    def test_radial_symbol_commutes(self):
        verdict = corollaries.cradial("a", 0, R, RadialSymbol.parse("1 + r"))
        self.assertTrue(verdict.finite)
        self.assertEqual(verdict.predicted_rank, 0)
        self.assertTrue(corollaries.cradial("a", 3, ONE, R).finite)
        self.assertFalse(corollaries.cradial("a", 3, R, R).finite)

    def test_same_degree(self):
        self.assertTrue(corollaries.cradial("b", 2, RadialSymbol.parse("2*r"), R).finite)
        self.assertFalse(corollaries.cradial("b", 2, R, RadialSymbol.monomial(2)).finite)

    def test_opposite_degrees(self):
        self.assertTrue(corollaries.cradial("c", 1, R, R_INV).finite)
        self.assertFalse(corollaries.cradial("c", 2, R, R_INV).finite)

    def test_bad_parts(self):
        with self.assertRaises(ValueError):
            corollaries.cradial("b", 0, R, R)
        with self.assertRaises(InvalidTheorem):
            corollaries.cradial("d", 1, R, R)


class TestRadialProducts(TestCase):
    def test_radial_factor(self):
        self.assertTrue(corollaries.pradial("a", 0, R, ONE, R).finite)
        self.assertFalse(corollaries.pradial("a", 0, R, ONE, RadialSymbol.monomial(2)).finite)
        with self.assertRaises(ValueError):
            corollaries.pradial("a", 0, ONE, R, R)

    def test_opposite_degrees(self):
        self.assertTrue(corollaries.pradial("b", 1, R, R_INV, ONE).finite)
        self.assertFalse(corollaries.pradial("b", 1, R, R_INV, RadialSymbol.constant(2.0)).finite)


class TestMonomialCommutators(TestCase):
    def test_analytic_side(self):
        verdict = corollaries.commonial("a", 1, 2, RadialSymbol.parse("3*r^2"))
        self.assertTrue(verdict.finite)
        self.assertEqual(verdict.predicted_rank, 2)

    def test_antianalytic_side(self):
        verdict = corollaries.commonial("b", 1, 1, R_INV)
        self.assertTrue(verdict.finite)
        self.assertEqual(verdict.predicted_rank, 0)

    def test_degree_and_part(self):
        with self.assertRaises(ValueError):
            corollaries.commonial("a", 0, 2, R)
        with self.assertRaises(InvalidTheorem):
            corollaries.commonial("c", 1, 2, R)

    def test_comr(self):
        verdict = corollaries.comr(1, 1, 2, 2)
        self.assertEqual(verdict.conditions, (2,))
        self.assertEqual(verdict.predicted_rank, 2)
        self.assertFalse(corollaries.comr(1, 1, -1, 1).finite)
        with self.assertRaises(ValueError):
            corollaries.comr(0, 1, 2, 2)

    def test_comr_on_the_bergman_space(self):
        verdict = corollaries.comr(1, 1, 2, 2, space=Space.BERGMAN)
        self.assertIs(verdict.space, Space.BERGMAN)
        self.assertEqual(verdict.predicted_rank, 0)


class TestMonomialProducts(TestCase):
    def test_semianaly(self):
        phi, psi = RadialSymbol.parse("2*r^2"), RadialSymbol.parse("2*r^3")
        self.assertTrue(corollaries.semianaly("a", 1, 2, phi, psi).finite)
        self.assertFalse(corollaries.semianaly("a", 1, 2, phi, RadialSymbol.monomial(3)).finite)
        with self.assertRaises(InvalidTheorem):
            corollaries.semianaly("c", 1, 2, phi, psi)

    def test_semimono(self):
        verdict = corollaries.semimono(1, 1, 2, 2)
        self.assertEqual(verdict.conditions, (2,))
        self.assertTrue(verdict.symbols["psi"].almost_equal(RadialSymbol.monomial(3)))
        self.assertEqual(verdict.predicted_rank, 2)

    def test_semimono_psi(self):
        psi = corollaries.semimono_psi(1, 1, 2, 1)
        self.assertTrue(psi.almost_equal(RadialSymbol.parse("3/2*r^3 - 1/2*r")))

    def test_semicommutator(self):
        verdict = corollaries.semicom(1, 2, 1, RadialSymbol.monomial(2))
        self.assertEqual(verdict.kind, "semicommutator")
        self.assertEqual(verdict.conditions, (1,))
        self.assertEqual(verdict.predicted_rank, 2)
        report = cross_validate(verdict)
        self.assertTrue(report.passed, report.first_failure)


class TestDispatch(TestCase):
    def test_by_name(self):
        self.assertEqual(corollaries.classify("comr", 1, 1, 2, 2).theorem_id, "cor-comr")
        with self.assertRaises(InvalidTheorem):
            corollaries.classify("nothing")

    def test_every_classifier_is_listed(self):
        self.assertEqual(
            sorted(corollaries.CLASSIFIERS),
            ["commonial", "comr", "cradial", "pradial", "semianaly", "semicom", "semimono"],
        )
