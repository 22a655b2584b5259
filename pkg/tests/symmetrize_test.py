# This import fixes sys.path issues
import parentpath

import unittest
from flagwright.algebra.laurent import BinomialFactor, LaurentPoly, StructuredFraction, to_poly
from flagwright.algebra.qcoeff import ONE, Q
from flagwright.algebra.symmetrize import (InvarianceError, coset_reps, is_invariant, orbit_sum,
                                           symmetrize)
from flagwright.combinatorics.flagcomb import segments

def x(d, index, power=1):
    return LaurentPoly.variable(d, index, power)

class SymmetrizeTest(unittest.TestCase):
    def test_coset_counts(self):
        self.assertEqual(sorted(coset_reps(segments((1, 1)), segments((2,)))), [(1, 2), (2, 1)])
        self.assertEqual(len(coset_reps(segments((1, 1, 1)), segments((3,)))), 6)
        self.assertEqual(len(coset_reps(segments((2, 1)), segments((3,)))), 3)
        self.assertEqual(len(coset_reps(segments((2, 1)), segments((1, 2)))), 2)
        self.assertEqual(coset_reps(segments((2,)), segments((2,))), [(1, 2)])

    def test_invariance(self):
        self.assertTrue(is_invariant(x(2, 1) + x(2, 2), segments((2,))))
        self.assertFalse(is_invariant(x(2, 1), segments((2,))))
        self.assertTrue(is_invariant(x(2, 1), segments((1, 1))))

    def test_symmetrize(self):
        value = symmetrize(x(2, 1), segments((1, 1)), segments((2,)))
        self.assertEqual(to_poly(value), x(2, 1) + x(2, 2))
        self.assertRaises(InvarianceError, symmetrize, x(2, 1), segments((2,)), segments((2,)))

    def test_alternative_representatives(self):
        source, target = segments((2, 1)), segments((3,))
        value = x(3, 1) + x(3, 2)
        reps = coset_reps(source, target)
        swapped = [(sigma[1], sigma[0], sigma[2]) for sigma in reps]
        expected = (x(3, 1) + x(3, 2) + x(3, 3)).scale(2)
        self.assertEqual(to_poly(symmetrize(value, source, target)), expected)
        self.assertEqual(to_poly(symmetrize(value, source, target, reps=swapped)), expected)

    def test_refinement_chain(self):
        fine, middle, coarse = segments((1, 1, 2)), segments((2, 2)), segments((4,))
        values = [x(4, 1, 2) * x(4, 2) * (x(4, 3) + x(4, 4)),
                  x(4, 1) - x(4, 2, -1).scale(Q) + x(4, 3) * x(4, 4)]
        for value in values:
            staged = to_poly(symmetrize(to_poly(symmetrize(value, fine, middle)), middle, coarse))
            self.assertEqual(staged, to_poly(symmetrize(value, fine, coarse)))

    def test_refinement_chain_with_denominator(self):
        # x1 / (x1 - x2) * x3^2
        scalar, factor = BinomialFactor.make(ONE, 1, ONE, 2)
        kernel = StructuredFraction((x(3, 1) * x(3, 3, 2)).scale(ONE / scalar), denom_binomials=[factor])
        fine, middle, coarse = segments((1, 1, 1)), segments((2, 1)), segments((3,))
        staged = to_poly(symmetrize(kernel, fine, middle, check=False))
        self.assertEqual(staged, x(3, 3, 2))
        expected = x(3, 1, 2) + x(3, 2, 2) + x(3, 3, 2)
        self.assertEqual(to_poly(symmetrize(staged, middle, coarse)), expected)
        self.assertEqual(to_poly(symmetrize(kernel, fine, coarse, check=False)), expected)

    def test_orbit_sum(self):
        self.assertEqual(orbit_sum((1, 0), segments((2,))), x(2, 1) + x(2, 2))
        self.assertEqual(orbit_sum((1, 1), segments((2,))), x(2, 1) * x(2, 2))
        self.assertEqual(orbit_sum((2, 0), segments((1, 1)), Q), x(2, 1, 2).scale(Q))
        self.assertTrue(is_invariant(orbit_sum((2, -1, 0), segments((1, 2))), segments((1, 2))))

if __name__ == "__main__":
    unittest.main()
