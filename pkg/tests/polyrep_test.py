# This import fixes sys.path issues
import parentpath

import unittest
from flagwright.algebra.laurent import LaurentPoly
from flagwright.algebra.qcoeff import Q, Q_DIFF, Q_INV, QRat, qint, qrat_det
from flagwright.algebra.symmetrize import is_invariant
from flagwright.combinatorics.flagcomb import compositions, segments
from flagwright.representation.polyrep import (
    MINUS, PLUS, CartanData, Mode, WeightVector,
    H_from_log, H_poly, K_coeff, K_mode, act, apply_E, apply_F, power_sum_matrix, psi,
    sample_polynomials, segment_power_sum, theta_sum, weight_scalar)

def x(d, index, power=1):
    return LaurentPoly.variable(d, index, power)

class CartanDataTest(unittest.TestCase):
    def test_matrices(self):
        cartan = CartanData(3)
        self.assertEqual(cartan.c(1, 1), -1)
        self.assertEqual(cartan.c(1, 2), 1)
        self.assertEqual(cartan.c(2, 1), 0)
        self.assertEqual(cartan.m(1, 1), 2)
        self.assertEqual(cartan.m(1, 2), -1)
        self.assertEqual(cartan.m(2, 1), -1)
        self.assertEqual(cartan.m(1, 3), 0)

class GeneratorTest(unittest.TestCase):
    def test_apply_E(self):
        self.assertEqual(apply_E(1, 0, (1, 1), LaurentPoly.one(2)),
                         ((2, 0), LaurentPoly.constant(2, Q * Q - Q_INV * Q_INV)))
        for mode in (-1, 0, 2):
            self.assertEqual(apply_E(1, mode, (0, 1), LaurentPoly.one(1)),
                             ((1, 0), x(1, 1, mode).scale(Q_DIFF)))
        self.assertIsNone(apply_E(1, 0, (1, 0), LaurentPoly.one(1)))

    def test_apply_E_symmetrizes(self):
        target, value = apply_E(1, 1, (1, 1), LaurentPoly.one(2))
        self.assertEqual(target, (2, 0))
        self.assertEqual(value, (x(2, 1) + x(2, 2)).scale(Q * Q_DIFF))
        self.assertTrue(is_invariant(value, segments(target)))

    def test_apply_F(self):
        self.assertEqual(apply_F(1, 0, (2, 0), LaurentPoly.one(2)),
                         ((1, 1), LaurentPoly.constant(2, Q_DIFF)))
        for mode in (-2, 0, 1):
            self.assertEqual(apply_F(1, mode, (1, 0), LaurentPoly.one(1)),
                             ((0, 1), x(1, 1, mode).scale(Q_DIFF)))
        self.assertIsNone(apply_F(1, 0, (0, 1), LaurentPoly.one(1)))

    def test_apply_F_to_full_segment(self):
        # [2] (q - q^-1) from the symmetrization onto a single segment
        target, value = apply_F(1, 0, (1, 1), LaurentPoly.one(2))
        self.assertEqual(target, (0, 2))
        self.assertEqual(value, LaurentPoly.constant(2, qint(2) * Q_DIFF))

class CartanCurrentTest(unittest.TestCase):
    def test_K_constants(self):
        self.assertEqual(K_coeff(1, PLUS, 0, (1, 0)), LaurentPoly.one(1))
        self.assertEqual(K_coeff(2, PLUS, 0, (1, 0)), LaurentPoly.constant(1, Q))
        self.assertEqual(K_coeff(2, MINUS, 0, (1, 0)), LaurentPoly.constant(1, Q_INV))
        self.assertRaises(ValueError, K_coeff, 1, PLUS, -1, (1, 0))
        self.assertRaises(ValueError, K_coeff, 1, '*', 0, (1, 0))

    def test_K_modes(self):
        self.assertEqual(K_coeff(2, PLUS, 1, (1, 0)), x(1, 1).scale(Q_DIFF))
        self.assertEqual(K_mode(2, PLUS, 1, (1, 0)), x(1, 1).scale(Q_DIFF))
        self.assertEqual(K_mode(2, MINUS, -1, (1, 0)), x(1, 1, -1).scale(-Q_DIFF))
        self.assertEqual(K_mode(2, PLUS, -1, (1, 0)), LaurentPoly.zero(1))
        self.assertEqual(K_mode(2, MINUS, 1, (1, 0)), LaurentPoly.zero(1))

    def test_weight_scalar(self):
        for n in range(1, 4):
            for d in range(1, 5):
                for v in compositions(n, d):
                    for i in range(1, n + 1):
                        self.assertEqual(K_coeff(i, PLUS, 0, v), LaurentPoly.constant(d, weight_scalar(i, v)))
                        self.assertEqual(K_coeff(i, MINUS, 0, v),
                                         LaurentPoly.constant(d, QRat.q_power(v[i - 1] - d)))

    def test_psi(self):
        self.assertEqual(psi(1, PLUS, 0, (1, 0)), LaurentPoly.constant(1, Q))
        self.assertEqual(psi(1, MINUS, 0, (1, 0)), LaurentPoly.constant(1, Q_INV))
        self.assertEqual(psi(1, PLUS, -1, (1, 0)), LaurentPoly.zero(1))
        self.assertEqual(psi(1, PLUS, 1, (1, 1)), (x(2, 1).scale(Q_INV) - x(2, 2).scale(Q)).scale(Q_DIFF))

class HeisenbergTest(unittest.TestCase):
    def test_example(self):
        self.assertEqual(H_poly(2, 1, (1, 0)), x(1, 1).scale(-Q_INV))
        self.assertEqual(H_poly(1, 1, (2, 0)), LaurentPoly.zero(2))
        self.assertRaises(ValueError, H_poly, 1, 0, (1, 0))
        self.assertRaises(ValueError, H_from_log, 1, 0, (1, 0))

    def test_closed_form_matches_logarithm(self):
        '''
        H_poly keeps the sign of the printed closed form. The mode read off
        log K^+(z) or log K^-(z) is its negative, for positive and negative k
        alike; operator words apply H_poly.
        '''
        for n in range(1, 4):
            for d in range(1, 4):
                for v in compositions(n, d):
                    for i in range(1, n + 1):
                        for k in (1, 2, 3, -1, -2, -3):
                            self.assertEqual(H_poly(i, k, v), -H_from_log(i, k, v), (i, k, v))

    def test_power_sums(self):
        for n in range(2, 4):
            for k in (1, 2, -1, -2):
                rows = power_sum_matrix(n, k)
                self.assertNotEqual(qrat_det(rows), 0)
                for v in compositions(n, 2):
                    for i in range(1, n + 1):
                        total = LaurentPoly.zero(2)
                        for j in range(1, n + 1):
                            total = total + segment_power_sum(j, k, v).scale(rows[i - 1][j - 1])
                        self.assertEqual(H_poly(i, k, v), total)
        self.assertRaises(ValueError, power_sum_matrix, 2, 0)

    def test_theta_sum(self):
        for m in range(1, 6):
            self.assertEqual(theta_sum(m), LaurentPoly.constant(m, qint(m)))

class ActionTest(unittest.TestCase):
    def test_samples(self):
        samples = sample_polynomials((1, 2), 6, 0)
        self.assertEqual(len(samples), 6)
        self.assertEqual(samples[0], LaurentPoly.one(3))
        self.assertEqual(samples, sample_polynomials((1, 2), 6, 0))
        for sample in samples:
            self.assertTrue(is_invariant(sample, segments((1, 2))))

    def test_weight_vector(self):
        self.assertRaises(ValueError, WeightVector, {(2,): x(2, 1)})
        vector = WeightVector.single((1, 1), x(2, 1))
        self.assertTrue((vector - vector).is_zero())
        self.assertEqual(vector + vector, vector.scale(2))
        self.assertNotEqual(vector, WeightVector.single((1, 1), x(2, 2)))

    def test_commutator_one_variable(self):
        vector = WeightVector.single((1, 0), LaurentPoly.one(1))
        e, f = Mode('E', 1, 0), Mode('F', 1, 0)
        commutator = act([e, f], vector) - act([f, e], vector)
        expected = WeightVector.single((1, 0), LaurentPoly.constant(1, Q_DIFF * Q_DIFF))
        self.assertEqual(commutator, expected)
        rhs = act([Mode('psi', 1, 0, PLUS)], vector) - act([Mode('psi', 1, 0, MINUS)], vector)
        self.assertEqual(commutator, rhs.scale(Q_DIFF))

    def test_multiplication_modes(self):
        vector = WeightVector.single((1, 0), x(1, 1))
        self.assertEqual(act([Mode('K', 2, 0, PLUS)], vector), vector.scale(Q))
        self.assertEqual(act([Mode('H', 2, 1)], vector), WeightVector.single((1, 0), x(1, 1, 2).scale(-Q_INV)))
        self.assertTrue(act([Mode('E', 1, 0)], vector).is_zero())
        self.assertRaises(ValueError, act, [Mode('X', 1, 0)], vector)

if __name__ == "__main__":
    unittest.main()
