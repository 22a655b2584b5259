'''
Regular expressions for the printed forms of QRat values and Laurent
polynomials.
'''
import re

from flagwright.regex.location import _not_followed_impl, _not_prefixed_impl
from flagwright.regex.types import _contains_integer_impl, _contains_natural_impl

_unsigned_rational_impl = r"(?:"+_contains_natural_impl+r"(?:/"+_contains_natural_impl+r")?)"

'''
One term c*q^e of a polynomial in q. The leading term carries its sign,
later terms are joined by ' + ' or ' - '.
'''
_q_term_impl = (
    r"(?:"+_unsigned_rational_impl+
    r"\*q\^"+_contains_integer_impl+r")")

# Groups: sign, coefficient, exponent
signed_q_term_regex = re.compile(
    r"([-+]?)\s*("+_unsigned_rational_impl+r")\*q\^("+_contains_integer_impl+r")")

_q_poly_impl = (
    r"(?:0|(?:[-]?"+_q_term_impl+
    r"(?:\s+[-+]\s+"+_q_term_impl+r")*))")

q_poly_regex = re.compile(r"(?:"+_not_prefixed_impl+_q_poly_impl+_not_followed_impl+r")")

'''
A QRat prints as (numerator)/(denominator).
'''
_contains_qrat_impl = r"(?:\("+_q_poly_impl+r"\)/\("+_q_poly_impl+r"\))"

contains_qrat_regex = re.compile(_contains_qrat_impl)

# Groups: numerator, denominator
qrat_regex = re.compile(
    r"(?:"+_not_prefixed_impl+
    r"\(("+_q_poly_impl+r")\)/\(("+_q_poly_impl+r")\)"+
    _not_followed_impl+r")")

'''
A variable power xK^E and a Laurent polynomial term
(num)/(den) * x1^e1 ... xd^ed.
'''
# Groups: variable index, exponent
variable_power_regex = re.compile(r"x("+_contains_natural_impl+r")\^("+_contains_integer_impl+r")")

_variable_powers_impl = (
    r"(?:x"+_contains_natural_impl+r"\^"+_contains_integer_impl+
    r"(?:\s+x"+_contains_natural_impl+r"\^"+_contains_integer_impl+r")*)")

# Groups: coefficient, variable powers (absent for a constant)
poly_term_regex = re.compile(
    r"("+_contains_qrat_impl+r")(?:\s*\*\s*("+_variable_powers_impl+r"))?")

_poly_impl = (
    r"(?:"+_not_prefixed_impl+
    r"(?:0|(?:"+_contains_qrat_impl+r"(?:\s*\*\s*"+_variable_powers_impl+r")?"
    r"(?:\s+\+\s+"+_contains_qrat_impl+r"(?:\s*\*\s*"+_variable_powers_impl+r")?)*))"+
    _not_followed_impl+r")")

poly_regex = re.compile(_poly_impl)
