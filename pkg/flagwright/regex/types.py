'''
Regular expressions for matching the scalar types of the text formats.
'''
import re

from flagwright.regex.location import _list_sep_impl, _not_followed_impl, _not_prefixed_impl

'''
This matches any integer based number with a possible '+-' prepended.
'''
_contains_integer_impl = r"(?:[-+]?(?:[0-9]+))"
_contains_natural_impl = r"(?:[0-9]+)"

contains_integer_regex = re.compile(_contains_integer_impl)

'''
Like contains_integer but also doesn't allow for trailing or following characters
other than whitespace
'''
_integer_impl = (
    r"(?:"+_not_prefixed_impl+
    _contains_integer_impl+
    _not_followed_impl+r")")

integer_regex = re.compile(_integer_impl)

'''
A rational number as Fraction prints it: an integer with an optional
'/denominator'.
'''
_contains_rational_impl = (
    r"(?:"+_contains_integer_impl+
    # Denominator is unsigned
    r"(?:/"+_contains_natural_impl+r")?)")

contains_rational_regex = re.compile(_contains_rational_impl)

_rational_impl = (
    r"(?:"+_not_prefixed_impl+
    _contains_rational_impl+
    _not_followed_impl+r")")

rational_regex = re.compile(_rational_impl)

'''
Comma separated lists, as given on the command line: compositions are
lists of naturals, block scalars lists of rationals.
'''
_natural_list_impl = (
    r"(?:"+_not_prefixed_impl+
    _contains_natural_impl+
    r"(?:"+_list_sep_impl+_contains_natural_impl+r")*"+
    _not_followed_impl+r")")
_rational_list_impl = (
    r"(?:"+_not_prefixed_impl+
    _contains_rational_impl+
    r"(?:"+_list_sep_impl+_contains_rational_impl+r")*"+
    _not_followed_impl+r")")

natural_list_regex = re.compile(_natural_list_impl)
rational_list_regex = re.compile(_rational_list_impl)
list_sep_regex = re.compile(_list_sep_impl)
