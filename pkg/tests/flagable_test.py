# This import fixes sys.path issues
import parentpath

import unittest
from flagwright.representation.flagable import Flagable

class FlagableTest(unittest.TestCase):
    def setUp(self):
        self.flagable = Flagable()
        self.flags = {}

    def test_codes_use_their_levels(self):
        self.flagable.flag_code(self.flags, 'vacuous-relation', component='j', detail='n=3')
        self.flagable.flag_code(self.flags, 'relation-failed', location=((1, 1),), component='e')
        self.assertEqual(sorted(self.flags), ['error', 'minor'])
        minor = self.flags['minor'][0]
        self.assertEqual(minor.location, ())
        self.assertEqual(minor.component, 'j')
        self.assertTrue(minor.message.endswith(': n=3'))
        self.assertEqual(self.flags['error'][0].location, ((1, 1),))

    def test_unknown_code(self):
        self.flagable.flag_code(self.flags, 'no-such-code')
        self.assertEqual(self.flags['warning'][0].message, "Unrecognized flag code")

    def test_numeric_levels(self):
        self.flagable.flag_change(self.flags, 3, message='a')
        self.flagable.flag_change(self.flags, 42, message='b')
        self.assertEqual(sorted(self.flags), ['fatal', 'interpreted'])

    def test_worst_level(self):
        self.assertEqual(self.flagable.get_worst_flag_level({}), 'minor')
        self.flagable.flag_code(self.flags, 'commuting-operators')
        self.assertEqual(self.flagable.get_worst_flag_level(self.flags), 'interpreted')
        self.assertFalse(Flagable.is_blocking('interpreted'))
        self.flagable.flag_code(self.flags, 'not-polynomial', detail='x1 - q^2*x2')
        self.assertEqual(self.flagable.get_worst_flag_level(self.flags), 'fatal')
        self.assertTrue(Flagable.is_blocking('fatal'))
        self.assertTrue(Flagable.is_blocking('error'))

    def test_json(self):
        self.flagable.flag_code(self.flags, 'cleared-denominator')
        self.flagable.flag_code(self.flags, 'printed-form-unverifiable')
        self.assertEqual(Flagable.flags_to_json(self.flags), {
            'interpreted': [Flagable.FLAGS['printed-form-unverifiable']],
            'minor': [Flagable.FLAGS['cleared-denominator']]})

if __name__ == "__main__":
    unittest.main()
