from unittest import TestCase

from qhtoeplitz.exceptions import MarginViolation, WindowTooSmall
from qhtoeplitz.mellin import RadialSymbol
from qhtoeplitz.operators import (
    CoeffMap, QHOperator, Space, apply_bergman, apply_harmonic, commutator_map, compose, dense_matrix,
    finite_rank_residuals, gen_semicommutator_map, lamre_check, monomial_operator, required_window,
    semicommutator_map, support_numbers
)
from qhtoeplitz.rank import detect_rank

PHI = RadialSymbol.parse("3*r^-1 - r^3")


class TestBasisImages(TestCase):
    def test_multiplication_by_z_on_bergman(self):
        shift = monomial_operator(Space.BERGMAN, 1, 1)
        image = apply_bergman(shift, 3)
        self.assertEqual(image.target, 4)
        self.assertAlmostEqual(image.coefficient, 1.0)

    def test_multiplication_by_conj_z_on_bergman(self):
        backward = monomial_operator(Space.BERGMAN, -1, 1)
        self.assertTrue(apply_bergman(backward, 0).annihilated)
        image = apply_bergman(backward, 3)
        self.assertEqual(image.target, 2)
        self.assertAlmostEqual(image.coefficient, 0.75)

    def test_bergman_rejects_negative_indices(self):
        with self.assertRaises(ValueError):
            apply_bergman(monomial_operator(Space.BERGMAN, 1, 1), -1)

    def test_space_mismatch(self):
        with self.assertRaises(ValueError):
            apply_harmonic(monomial_operator(Space.BERGMAN, 1, 1), 0)
        with self.assertRaises(ValueError):
            commutator_map(monomial_operator(Space.BERGMAN, 1, 1), monomial_operator(Space.HARMONIC, 1, 1))

    def test_harmonic_projection_of_antianalytic_monomials(self):
        shift = monomial_operator(Space.HARMONIC, 1, 1)
        image = apply_harmonic(shift, -1)
        self.assertEqual(image.target, 0)
        self.assertAlmostEqual(image.coefficient, 0.5)
        image = apply_harmonic(shift, -3)
        self.assertEqual(image.target, -2)
        self.assertAlmostEqual(image.coefficient, 0.75)

    def test_analytic_indices_agree_on_both_spaces(self):
        for k in (-2, 1, 3):
            for n in range(max(0, -k), 8):
                harmonic = apply_harmonic((k, PHI), n)
                bergman = apply_bergman((k, PHI), n)
                self.assertEqual(harmonic.target, bergman.target)
                self.assertAlmostEqual(harmonic.coefficient, bergman.coefficient, places=12)

    def test_pair_argument(self):
        operator = QHOperator(Space.HARMONIC, 2, PHI)
        self.assertEqual(apply_harmonic(operator, 4), apply_harmonic((2, PHI), 4))

    def test_compose(self):
        first = monomial_operator(Space.BERGMAN, -1, 1)
        second = monomial_operator(Space.BERGMAN, 1, 1)
        image = compose(first, second, 2)
        self.assertEqual(image.target, 2)
        self.assertAlmostEqual(image.coefficient, 0.75)
        self.assertTrue(compose(second, first, 0).annihilated)

    def test_adjoint_flips_the_degree(self):
        operator = QHOperator(Space.HARMONIC, 2, PHI)
        self.assertEqual(operator.adjoint().degree, -2)
        self.assertIs(operator.adjoint().radial, operator.radial)


class TestWindows(TestCase):
    def test_support_numbers(self):
        self.assertEqual(support_numbers(1, -3), (3, 3, 0))
        self.assertEqual(support_numbers(2, 3), (0, 0, 5))

    def test_required_window(self):
        self.assertEqual(required_window(Space.HARMONIC, 1, -3, margin=5), (-10, 8))
        self.assertEqual(required_window(Space.BERGMAN, 1, -3, margin=5), (0, 8))

    def test_window_too_small(self):
        first = QHOperator(Space.HARMONIC, 1, RadialSymbol.parse("r^-1"))
        second = QHOperator(Space.HARMONIC, -3, RadialSymbol.parse("r^3"))
        with self.assertRaises(WindowTooSmall) as context:
            commutator_map(first, second, window=(0, 2))
        self.assertEqual(context.exception.requested, (0, 2))


class TestCoeffMaps(TestCase):
    def test_shift_commutator_is_not_finite_rank(self):
        shift = monomial_operator(Space.BERGMAN, 1, 1)
        backward = monomial_operator(Space.BERGMAN, -1, 1)
        coeff_map = commutator_map(shift, backward, margin=5)
        self.assertEqual(coeff_map.window, (0, 6))
        self.assertAlmostEqual(coeff_map.coefficient(0), -0.5)
        self.assertAlmostEqual(coeff_map.coefficient(1), 0.5 - 2 / 3)
        with self.assertRaises(MarginViolation):
            detect_rank(coeff_map)

    def test_nonzero_and_images(self):
        coeff_map = CoeffMap(Space.HARMONIC, 1, (0, 2), {0: 1.0, 1: 0.0, 2: 1e-14})
        self.assertEqual(coeff_map.nonzero(), {0: 1.0})
        self.assertEqual(coeff_map.images(), {1: 1.0})
        self.assertEqual(len(coeff_map), 3)
        self.assertEqual(coeff_map.to_dict()["nonzero"], [[0, 1, 1.0]])

    def test_semicommutator_uses_the_product_symbol(self):
        first = monomial_operator(Space.HARMONIC, 1, 2)
        second = monomial_operator(Space.HARMONIC, 2, 1)
        semi = semicommutator_map(first, second, margin=4)
        general = gen_semicommutator_map(first, second, RadialSymbol.monomial(3), margin=4)
        self.assertEqual(semi.kind, "semicommutator")
        for source in semi.sources:
            self.assertEqual(semi.coefficient(source), general.coefficient(source))

    def test_dense_matrix_shape(self):
        shift = monomial_operator(Space.BERGMAN, 1, 1)
        backward = monomial_operator(Space.BERGMAN, -1, 1)
        matrix, rows, columns = dense_matrix(commutator_map(shift, backward, margin=2))
        self.assertEqual(columns, [0, 1, 2, 3])
        self.assertEqual(rows, [0, 1, 2, 3])
        self.assertEqual(matrix.shape, (4, 4))
        self.assertAlmostEqual(matrix[0, 0], -0.5)


class TestIdentities(TestCase):
    def test_lamre_identity(self):
        for k in range(-3, 4):
            for l in range(-5, 6):
                self.assertTrue(lamre_check(k, PHI, l).passed, (k, l))

    def test_residuals_vanish_for_a_finite_rank_pair(self):
        first = QHOperator(Space.HARMONIC, 2, RadialSymbol.monomial(6))
        second = QHOperator(Space.HARMONIC, -1, PHI)
        residuals = finite_rank_residuals(first, second, range(1, 12))
        self.assertEqual(len(residuals), 11)
        self.assertLess(max(abs(residuals)), 1e-12)

    def test_residuals_of_a_generic_pair(self):
        first = monomial_operator(Space.HARMONIC, 1, 1)
        second = monomial_operator(Space.HARMONIC, -1, 1)
        residuals = finite_rank_residuals(first, second, range(1, 5))
        self.assertGreater(max(abs(residuals)), 1e-3)

    def test_vanishing_indices_come_in_symmetric_pairs(self):
        for k1 in range(-4, 5):
            for k2 in range(-4, 5):
                for m in (-1, 0, 1, 3):
                    first = monomial_operator(Space.HARMONIC, k1, m)
                    second = QHOperator(Space.HARMONIC, k2, PHI)
                    coeff_map = commutator_map(first, second, margin=4)
                    k = k1 + k2
                    nonzero = coeff_map.nonzero()
                    low, high = coeff_map.window
                    for source in range(low, high + 1):
                        partner = -source - k
                        if low <= partner <= high:
                            self.assertEqual(source in nonzero, partner in nonzero, (k1, k2, m, source))
                    if k % 2 == 0:
                        self.assertNotIn(-k // 2, nonzero, (k1, k2, m))
