'''
Exact arithmetic in the rational function field Q(q) plus quantum integers.

A QRat keeps its numerator and denominator as univariate sympy polynomials
over QQ in canonical form: no common factor and a monic denominator. Values
that are Laurent polynomials in q (denominator a power of q) take a fast path
that never runs a gcd.
'''
import functools
import logging
from fractions import Fraction

from sympy import Matrix, Symbol, cancel, cyclotomic_poly
from sympy.polys import QQ, ring

from flagwright import settings

log = logging.getLogger(__name__)

_RING, _Q = ring('q', QQ)
_SYMBOL = Symbol('q')


class PoleError(ZeroDivisionError):
    '''
    Indicator for a vanishing denominator (division by zero or a pole at q=t).
    '''
    pass


class RootOfUnityError(ValueError):
    '''
    Indicator for a specialization value that is a root of unity.
    '''
    pass


def _ground(value):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def _to_fraction(coeff):
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _coerce_poly(value):
    if isinstance(value, QRat):
        raise TypeError("QRat is not a polynomial; use arithmetic instead")
    if hasattr(value, 'ring') and value.ring == _RING:
        return value
    return _RING.ground_new(_ground(value))


def _canonical(num, den):
    if not den:
        raise PoleError("zero denominator")
    if not num:
        return _RING.zero, _RING.one
    if len(den) == 1:
        # Laurent case: den = c*q^s, strip the common power of q
        ((shift,), lead), = den.terms()
        low = min(monom[0] for monom in num.itermonoms())
        cut = min(low, shift)
        num = _RING.from_dict({(exp - cut,): coeff / lead for (exp,), coeff in num.terms()})
        den = _RING.from_dict({(shift - cut,): QQ.one})
        return num, den
    _, num, den = num.cofactors(den)
    lead = den.LC
    if lead != QQ.one:
        num = num.quo_ground(lead)
        den = den.quo_ground(lead)
    return num, den


def _format_poly(poly):
    if not poly:
        return "0"
    pieces = []
    for (exp,), coeff in sorted(poly.terms(), key=lambda term: -term[0][0]):
        value = _to_fraction(coeff)
        if not pieces:
            pieces.append("{}*q^{}".format(value, exp))
        elif value < 0:
            pieces.append("- {}*q^{}".format(-value, exp))
        else:
            pieces.append("+ {}*q^{}".format(value, exp))
    return " ".join(pieces)


def _horner(poly, t):
    total = Fraction(0)
    for (exp,), coeff in poly.terms():
        total += _to_fraction(coeff) * t ** exp
    return total


class QRat(object):
    '''
    An exact element of Q(q) in canonical form. Instances are immutable.
    '''
    __slots__ = ('num', 'den')

    def __init__(self, num=0, den=1):
        num, den = _canonical(_coerce_poly(num), _coerce_poly(den))
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    @classmethod
    def _make(cls, num, den):
        num, den = _canonical(num, den)
        value = object.__new__(cls)
        object.__setattr__(value, 'num', num)
        object.__setattr__(value, 'den', den)
        return value

    @classmethod
    def q_power(cls, exp):
        if exp >= 0:
            return cls._make(_Q ** exp, _RING.one)
        return cls._make(_RING.one, _Q ** (-exp))

    @classmethod
    def from_polys(cls, num, den):
        '''
        Builds a value from polynomials of the q-ring (used by parsers).
        '''
        return cls._make(_coerce_poly(num), _coerce_poly(den))

    @classmethod
    def from_terms(cls, terms):
        '''
        Builds a Laurent polynomial in q from {exponent: rational}.
        '''
        terms = {exp: _ground(coeff) for exp, coeff in terms.items() if coeff}
        if not terms:
            return ZERO
        low = min(terms)
        num = _RING.from_dict({(exp - low,): coeff for exp, coeff in terms.items()})
        if low >= 0:
            return cls._make(num * _Q ** low, _RING.one)
        return cls._make(num, _Q ** (-low))

    @classmethod
    def from_expr(cls, expr):
        '''
        Converts a sympy expression in the symbol q.
        '''
        from sympy import fraction, together
        num, den = fraction(together(expr))
        return cls._make(_RING(num), _RING(den))

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    def _lift(self, other):
        if isinstance(other, QRat):
            return other
        if isinstance(other, (int, Fraction)):
            return QRat(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return QRat._make(self.num + other.num, self.den)
        return QRat._make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        value = object.__new__(QRat)
        object.__setattr__(value, 'num', -self.num)
        object.__setattr__(value, 'den', self.den)
        return value

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        return QRat._make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise PoleError("division by zero in Q(q)")
        return QRat._make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exp):
        if exp < 0:
            return ONE / (self ** (-exp))
        return QRat._make(self.num ** exp, self.den ** exp)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((tuple(self.num.terms()), tuple(self.den.terms())))

    def __bool__(self):
        return bool(self.num)

    def cross_equal(self, other):
        '''
        Equality by cross-multiplication; agrees with == on canonical values.
        '''
        return self.num * other.den == other.num * self.den

    def is_laurent(self):
        return len(self.den) == 1

    def laurent_terms(self):
        '''
        Returns {exponent: Fraction} when the value is a Laurent polynomial in q.
        '''
        if not self.is_laurent():
            raise ValueError("{} is not a Laurent polynomial in q".format(self))
        shift = self.den.degree()
        return {exp - shift: _to_fraction(coeff) for (exp,), coeff in self.num.terms()}

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("{} depends on q".format(self))
        return _to_fraction(self.num.LC) if self.num else Fraction(0)

    def to_expr(self):
        return self.num.as_expr(_SYMBOL) / self.den.as_expr(_SYMBOL)

    def __str__(self):
        return "({})/({})".format(_format_poly(self.num), _format_poly(self.den))

    def __repr__(self):
        return "QRat{}".format(self)


ZERO = QRat(0)
ONE = QRat(1)
Q = QRat.q_power(1)
Q_INV = QRat.q_power(-1)
Q_DIFF = Q - Q_INV


def qrat_arith(a, b, op):
    '''
    Applies one of the field operations 'add', 'sub', 'mul', 'div'.
    '''
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise ValueError("Unknown operation {!r}".format(op))


@functools.lru_cache(maxsize=None)
def qint(k):
    '''
    The quantum integer [k] = (q^k - q^-k)/(q - q^-1).
    '''
    if k == 0:
        return ZERO
    if k < 0:
        return -qint(-k)
    return QRat.from_terms({k - 1 - 2 * j: 1 for j in range(k)})


@functools.lru_cache(maxsize=None)
def qfact(k):
    if k < 0:
        raise ValueError("qfact requires k >= 0, got {}".format(k))
    result = ONE
    for j in range(1, k + 1):
        result = result * qint(j)
    return result


@functools.lru_cache(maxsize=None)
def gauss_p(a, b):
    '''
    q^(ab) [a+b]! / ([a]! [b]!), a polynomial in q.
    '''
    if a < 0 or b < 0:
        raise ValueError("gauss_p requires a, b >= 0")
    return QRat.q_power(a * b) * qfact(a + b) / (qfact(a) * qfact(b))


@functools.lru_cache(maxsize=None)
def _cyclotomic(order):
    return _RING(cyclotomic_poly(order, _SYMBOL))


def cyclotomic_order(t, bound=None):
    '''
    Returns the smallest m <= bound with Phi_m(t) = 0, or None.
    '''
    bound = settings.CYCLOTOMIC_BOUND if bound is None else bound
    t = Fraction(t)
    for order in range(1, bound + 1):
        if _horner(_cyclotomic(order), t) == 0:
            return order
    return None


def guard_specialization(t, bound=None):
    '''
    Rejects t = 0 and roots of unity of order up to the bound.
    '''
    t = Fraction(t)
    if t == 0:
        raise PoleError("pole at q=0: specialization requires q != 0")
    order = cyclotomic_order(t, bound)
    if order is not None:
        raise RootOfUnityError("q={} is a root of unity (root of the {}-th cyclotomic polynomial)"
                               .format(t, order))
    return t


def _pole_message(den, t, bound):
    for order in range(1, bound + 1):
        factor = _cyclotomic(order)
        if _horner(factor, t) == 0 and not den.rem(factor):
            return "pole at q={}: denominator factor {} vanishes".format(t, factor.as_expr(_SYMBOL))
    return "pole at q={}: denominator factor q - ({}) vanishes".format(t, t)


def eval_q(value, t, bound=None):
    '''
    Specializes q to the nonzero rational t.
    '''
    t = Fraction(t)
    if t == 0:
        raise PoleError("pole at q=0: specialization requires q != 0")
    denominator = _horner(value.den, t)
    if denominator == 0:
        bound = settings.CYCLOTOMIC_BOUND if bound is None else bound
        raise PoleError(_pole_message(value.den, t, bound))
    return _horner(value.num, t) / denominator


def qrat_det(rows):
    '''
    Determinant of a square matrix of QRat, computed by sympy over Q(q).
    '''
    entries = [[(entry if isinstance(entry, QRat) else QRat(entry)).to_expr() for entry in row] for row in rows]
    return QRat.from_expr(cancel(Matrix(entries).det(method='berkowitz')))
