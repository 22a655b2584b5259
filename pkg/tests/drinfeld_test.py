# This import fixes sys.path issues
import parentpath

import unittest
from fractions import Fraction
from flagwright.algebra.qcoeff import PoleError, RootOfUnityError
from flagwright.combinatorics.drinfeld import (
    DrinfeldPolys, JordanData, PartitionError, SemisimpleParam,
    build_semisimple, check_conjugation, dominance, drinfeld_polys, dual_from_nilpotent,
    dual_partition, fundamental_factors, jordan_matrix)

def partitions(d, largest=None):
    largest = d if largest is None else largest
    if d == 0:
        yield ()
        return
    for part in range(min(d, largest), 0, -1):
        for rest in partitions(d - part, part):
            yield (part,) + rest

class JordanDataTest(unittest.TestCase):
    def test_validation(self):
        self.assertEqual(JordanData((2, 1), 3).d, 3)
        self.assertEqual(len(JordanData((2, 1, 1), 3)), 3)
        self.assertRaises(PartitionError, JordanData, (1, 2), 3)
        self.assertRaises(PartitionError, JordanData, (1, 0), 3)
        self.assertRaises(PartitionError, JordanData, (4,), 3)
        self.assertRaises(PartitionError, JordanData, (), 3)

    def test_semisimple_param(self):
        self.assertEqual(SemisimpleParam(("1/2", 3), 5).alphas, (Fraction(1, 2), Fraction(3)))
        self.assertRaises(RootOfUnityError, SemisimpleParam, (2,), -1)
        self.assertRaises(RootOfUnityError, SemisimpleParam, (2,), 1)
        self.assertRaises(PoleError, SemisimpleParam, (2,), 0)
        self.assertRaises(PartitionError, SemisimpleParam, (2, 0), 5)

class DualPartitionTest(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(dual_partition(JordanData((2, 1), 3)), (2, 1, 0))
        self.assertEqual(dual_partition(JordanData((1, 1, 1), 3)), (3, 0, 0))
        self.assertEqual(dual_partition(JordanData((3,), 4)), (1, 1, 1, 0))

    def test_involution(self):
        for d in range(1, 7):
            for lam in partitions(d):
                dual = tuple(part for part in dual_partition(JordanData(lam, 6)) if part)
                again = tuple(part for part in dual_partition(JordanData(dual, 6)) if part)
                self.assertEqual(again, lam)

    def test_nullities(self):
        for d in range(1, 6):
            for lam in partitions(d):
                jordan = JordanData(lam, d)
                self.assertEqual(dual_from_nilpotent(jordan_matrix(jordan), d), dual_partition(jordan))
        self.assertEqual(dual_from_nilpotent(jordan_matrix(JordanData((3,), 3))), (1, 1, 1))

    def test_dominance(self):
        self.assertTrue(dominance((1, 1), (2, 0)))
        self.assertFalse(dominance((2, 0), (1, 1)))
        self.assertTrue(dominance((1, 2, 0), (1, 2, 0)))
        self.assertRaises(PartitionError, dominance, (1, 1), (1, 0))
        self.assertRaises(PartitionError, dominance, (1, 1), (2,))

class DrinfeldPolysTest(unittest.TestCase):
    def setUp(self):
        self.jordan = JordanData((2, 1), 3)
        self.param = SemisimpleParam((2, 3), 5)

    def test_example(self):
        polys = drinfeld_polys(self.jordan, self.param)
        self.assertEqual(polys, DrinfeldPolys([(Fraction(-1, 15), 1), (Fraction(-1, 2), 1)]))
        self.assertEqual(polys.to_json(), [['-1/15', '1'], ['-1/2', '1']])
        self.assertEqual(polys.roots, [(Fraction(1, 15),), (Fraction(1, 2),)])

    def test_single_block(self):
        polys = drinfeld_polys(JordanData((3,), 4), SemisimpleParam((2,), 5))
        self.assertEqual(polys.to_json(), [['1'], ['1'], ['-5/2', '1']])
        self.assertEqual(polys.degrees(), [0, 0, 1])

    def test_fundamental_factors(self):
        self.assertEqual(fundamental_factors(self.jordan, self.param),
                         [(2, Fraction(1, 2)), (1, Fraction(1, 15))])
        self.assertEqual(fundamental_factors(JordanData((3,), 4), SemisimpleParam((2,), 5)),
                         [(3, Fraction(5, 2))])
        self.assertRaises(PartitionError, fundamental_factors, JordanData((3,), 3), SemisimpleParam((2,), 5))

    def test_degrees(self):
        param = SemisimpleParam((2, 3, 5, 7), 3)
        for lam in ((1, 1, 1, 1), (2, 2), (3, 1), (2, 1, 1)):
            jordan = JordanData(lam, 4)
            polys = drinfeld_polys(jordan, SemisimpleParam(param.alphas[:len(lam)], 3))
            self.assertEqual(sum(polys.degrees()), len(lam))
            for poly in polys.polys:
                self.assertEqual(poly[-1], 1)

    def test_length_mismatch(self):
        self.assertRaises(PartitionError, drinfeld_polys, self.jordan, SemisimpleParam((2,), 5))

    def test_semisimple(self):
        diagonal = build_semisimple(self.jordan, self.param)
        self.assertEqual(diagonal, (Fraction(2), Fraction(2, 25), Fraction(3)))
        self.assertTrue(check_conjugation(self.jordan, self.param, diagonal))
        self.assertFalse(check_conjugation(self.jordan, self.param, (1, 1, 1)))

if __name__ == "__main__":
    unittest.main()
