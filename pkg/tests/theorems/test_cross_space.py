from unittest import TestCase

from qhtoeplitz.mellin import RadialSymbol
from qhtoeplitz.operators import Space
from qhtoeplitz.theorems import cross_space
from qhtoeplitz.theorems.validation import cross_validate


class TestCrossSpaceChecks(TestCase):
    def test_finite_on_both_spaces(self):
        commutator, gensemi = cross_space.cross_space_checks(
            1, -3, RadialSymbol.monomial(-1), RadialSymbol.monomial(3), psi=RadialSymbol.monomial(2)
        )
        self.assertTrue(commutator.passed)
        self.assertEqual(commutator.details["harmonic_rank"], 2)
        self.assertEqual(commutator.details["bergman_rank"], 1)
        self.assertTrue(gensemi.passed)
        self.assertEqual(gensemi.details["harmonic_rank"], 2)

    def test_infinite_on_both_spaces(self):
        commutator, gensemi = cross_space.cross_space_checks(
            1, -1, RadialSymbol.monomial(1), RadialSymbol.monomial(1)
        )
        self.assertTrue(commutator.passed)
        self.assertIsNone(commutator.details["harmonic_rank"])
        self.assertIsNone(commutator.details["bergman_rank"])
        self.assertTrue(gensemi.is_skipped)

    def test_rank_gap(self):
        check = cross_space.rank_gap_instance()
        self.assertTrue(check.passed, check.details)
        self.assertEqual(check.details["harmonic_commutator"], 0)
        self.assertEqual(check.details["bergman_commutator"]["rank"], 1)
        self.assertEqual(cross_space.rank_gap_instance(2).name, "cross-space-rank-gap")
        self.assertTrue(cross_space.rank_gap_instance(2).passed)


class TestClassify(TestCase):
    def test_harmonic_condition_with_bergman_rank(self):
        verdict = cross_space.classify(1, -3, -1)
        self.assertIs(verdict.space, Space.BERGMAN)
        self.assertEqual(verdict.condition_id, 6)
        self.assertEqual(verdict.predicted_rank, 1)
        self.assertEqual(verdict.predicted_canonical, {0: -1.0})
        self.assertTrue(cross_validate(verdict).passed)

    def test_commuting_harmonic_pair_is_rank_one_on_bergman(self):
        verdict = cross_space.classify(1, -1, 0)
        self.assertEqual(verdict.condition_id, 5)
        self.assertEqual(verdict.predicted_rank, 1)
        self.assertAlmostEqual(verdict.predicted_canonical[0], -1.0)
        self.assertTrue(cross_validate(verdict).passed)

    def test_no_harmonic_symbol(self):
        verdict = cross_space.classify(1, 6, 2)
        self.assertFalse(verdict.finite)
        self.assertIn("no finite-rank symbol on L²ₕ", verdict.notes)
