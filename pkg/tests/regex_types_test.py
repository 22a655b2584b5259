# This import fixes sys.path issues
import parentpath

import unittest
import re
from flagwright.regex import allregex
from flagwright.algebra.laurent import LaurentPoly
from flagwright.algebra.qcoeff import Q, Q_DIFF, Q_INV, ONE, ZERO

def prefix_suffix_whitespace(prefix, suffix):
    '''
    Helper to identify when prefix and suffix are whitespace or empty
    '''
    return (not prefix or prefix.isspace()) and (not suffix or suffix.isspace())

class RegexTypesTest(unittest.TestCase):
    '''
    Tests the regular expressions of the text formats for consistent
    matching.
    '''
    def setUp(self):
        self.false_checks = ["", " \t \n ", "a", "a ", " a", " a ", ".", " . ", "-", "+", "/"]
        self.prefixes = ["", " ", "a", "abcd", "two words", " space sep "]
        self.suffixes = self.prefixes
        self.integer_strs = ["0", "1", "-1", "12345", "-12345", "+7"]
        self.rational_strs = ["1/2", "-3/4", "12/345", "+5/6"]
        self.qrat_strs = [str(ONE), str(ZERO), str(Q_DIFF), str(Q_INV), str(ONE / (Q + 1)),
                          str(Q * Q / 7 - 2)]

    def run_anchored_test(self, regex, matching):
        for check_str in self.false_checks:
            self.assertIsNone(re.search(regex, check_str),
                              "String '"+check_str+"' should have returned None")
        for prefix in self.prefixes:
            for suffix in self.suffixes:
                for test_str in matching:
                    combined = prefix+test_str+suffix
                    if prefix_suffix_whitespace(prefix, suffix):
                        self.assertIsNotNone(regex.match(combined),
                                             "String '"+combined+"' should have matched")
                    else:
                        self.assertIsNone(regex.match(combined),
                                          "String '"+combined+"' should not have matched")

    def test_contains_integer_regex(self):
        for check_str in self.false_checks:
            self.assertIsNone(allregex.contains_integer_regex.search(check_str))
        for prefix in self.prefixes:
            for suffix in self.suffixes:
                for int_str in self.integer_strs:
                    self.assertIsNotNone(allregex.contains_integer_regex.search(prefix+int_str+suffix))

    def test_integer_regex(self):
        self.run_anchored_test(allregex.integer_regex, self.integer_strs)
        for rational_str in self.rational_strs:
            self.assertIsNone(allregex.integer_regex.match(rational_str))

    def test_rational_regex(self):
        self.run_anchored_test(allregex.rational_regex, self.integer_strs + self.rational_strs)
        for bad in ["1/-2", "1.5", "1/", "/2", "1//2"]:
            self.assertIsNone(allregex.rational_regex.match(bad), bad)

    def test_natural_list_regex(self):
        self.run_anchored_test(allregex.natural_list_regex, ["4", "1,2,0", "1, 2 ,3", "0,0"])
        for bad in ["1,-2", "1,,2", ",1", "1,", "1 2", "1/2,3"]:
            self.assertIsNone(allregex.natural_list_regex.match(bad), bad)

    def test_rational_list_regex(self):
        self.run_anchored_test(allregex.rational_list_regex, ["2,-3/4", "1/2", "-1, 5/3"])
        for bad in ["1/-2", "1.5,2", "2,,3"]:
            self.assertIsNone(allregex.rational_list_regex.match(bad), bad)
        self.assertEqual(allregex.list_sep_regex.split("1, 2 ,3"), ["1", "2", "3"])

    def test_qrat_regex(self):
        self.run_anchored_test(allregex.qrat_regex, self.qrat_strs)
        for bad in ["1*q^2", "(q)/(1)", "(1*q^2 -1*q^0)/(1*q^0)", "(1*q^2)", "(1*q^0)/(1*q^0) * x1^1"]:
            self.assertIsNone(allregex.qrat_regex.match(bad), bad)
        match = allregex.qrat_regex.match(str(ONE / (Q + 1)))
        self.assertEqual(match.group(1), "1*q^0")
        self.assertEqual(match.group(2), "1*q^1 + 1*q^0")

    def test_contains_qrat_regex(self):
        for qrat_str in self.qrat_strs:
            self.assertIsNotNone(allregex.contains_qrat_regex.search("value "+qrat_str+" here"))

    def test_poly_regex(self):
        x1, x2 = LaurentPoly.variable(2, 1), LaurentPoly.variable(2, 2, -1)
        polys = [str(LaurentPoly.zero(2)), str(LaurentPoly.constant(1, Q)), str(x1 + x2.scale(Q_DIFF)),
                 str((x1 + x2) * (x1 - x2))]
        self.run_anchored_test(allregex.poly_regex, polys)
        for bad in ["x1 + x2", "(1*q^0)/(1*q^0) * x1", "(1*q^0)/(1*q^0) * x1^1 +"]:
            self.assertIsNone(allregex.poly_regex.match(bad), bad)

    def test_poly_terms(self):
        text = str(LaurentPoly.variable(2, 1).scale(Q) + LaurentPoly.one(2))
        terms = list(allregex.poly_term_regex.finditer(text))
        self.assertEqual(len(terms), 2)
        self.assertEqual(allregex.variable_power_regex.findall(terms[1].group(2)), [("1", "1"), ("2", "0")])

if __name__ == "__main__":
    unittest.main()
