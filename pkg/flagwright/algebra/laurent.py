'''
Multivariate Laurent polynomials in x_1..x_d over Q(q).

Variables are labelled 1..d; a monomial is the tuple of its exponents.
StructuredFraction carries a numerator over a product of binomials
(x_i - c x_j), which is every denominator the theta factors and pushforward
kernels produce. Exact division by one binomial at a time is enough to clear
them after symmetrization.
'''
import collections
import logging
from fractions import Fraction

from flagwright.algebra.qcoeff import QRat, ONE, ZERO, Q, eval_q

log = logging.getLogger(__name__)


class VariableCountError(ValueError):
    '''
    Indicator for arithmetic between polynomials in different numbers of variables.
    '''
    pass


class InvalidPermutationError(ValueError):
    '''
    Indicator for a permutation that is not a bijection of [d].
    '''
    pass


class NotPolynomialError(ArithmeticError):
    '''
    Indicator for a fraction whose denominator does not divide its numerator.
    '''
    def __init__(self, factor, message=None):
        self.factor = factor
        ArithmeticError.__init__(self, message or "not polynomial: remainder modulo {}".format(factor))


class ZeroDenominatorError(ZeroDivisionError):
    '''
    Indicator for a theta factor whose denominator vanishes identically.
    '''
    pass


def _scalar(value):
    if isinstance(value, QRat):
        return value
    return QRat(value)


def unit_monomial(d, index, power=1):
    exps = [0] * d
    exps[index - 1] = power
    return tuple(exps)


def check_permutation(sigma, d):
    if len(sigma) != d or sorted(sigma) != list(range(1, d + 1)):
        raise InvalidPermutationError("{} is not a permutation of 1..{}".format(sigma, d))


class LaurentPoly(object):
    '''
    A Laurent polynomial stored as {monomial: QRat} without zero coefficients.
    '''
    __slots__ = ('d', 'terms', '_hash')

    def __init__(self, d, terms=None):
        self.d = d
        self.terms = {}
        self._hash = None
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != d:
                raise VariableCountError("monomial {} has {} exponents, expected {}".format(mono, len(mono), d))
            coeff = _scalar(coeff)
            if coeff:
                self.terms[mono] = coeff

    @classmethod
    def _raw(cls, d, terms):
        poly = object.__new__(cls)
        poly.d = d
        poly.terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, d):
        return cls._raw(d, {})

    @classmethod
    def constant(cls, d, value):
        value = _scalar(value)
        return cls._raw(d, {(0,) * d: value} if value else {})

    @classmethod
    def one(cls, d):
        return cls.constant(d, ONE)

    @classmethod
    def monomial(cls, d, exps, coeff=ONE):
        return cls(d, {tuple(exps): coeff})

    @classmethod
    def variable(cls, d, index, power=1):
        return cls._raw(d, {unit_monomial(d, index, power): ONE})

    def _check(self, other):
        if self.d != other.d:
            raise VariableCountError("polynomials in {} and {} variables".format(self.d, other.d))

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, (QRat, int, Fraction)):
            return LaurentPoly.constant(self.d, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            total = terms.get(mono, ZERO) + coeff
            if total:
                terms[mono] = total
            else:
                terms.pop(mono, None)
        return LaurentPoly._raw(self.d, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.d, {mono: -coeff for mono, coeff in self.terms.items()})

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

    def scale(self, value):
        value = _scalar(value)
        if not value:
            return LaurentPoly.zero(self.d)
        return LaurentPoly._raw(self.d, {mono: coeff * value for mono, coeff in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (QRat, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        terms = collections.defaultdict(lambda: ZERO)
        for mono_a, coeff_a in self.terms.items():
            for mono_b, coeff_b in other.terms.items():
                mono = tuple(a + b for a, b in zip(mono_a, mono_b))
                terms[mono] = terms[mono] + coeff_a * coeff_b
        return LaurentPoly._raw(self.d, {mono: coeff for mono, coeff in terms.items() if coeff})

    __rmul__ = __mul__

    def __pow__(self, exp):
        if exp < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have inverses in the Laurent ring")
            (mono, coeff), = self.terms.items()
            return LaurentPoly._raw(self.d, {tuple(-e * (-exp) for e in mono): (ONE / coeff) ** (-exp)})
        result = LaurentPoly.one(self.d)
        for _ in range(exp):
            result = result * self
        return result

    def shift(self, mono):
        '''
        Multiplies by the monomial x^mono.
        '''
        return LaurentPoly._raw(self.d, {tuple(a + b for a, b in zip(key, mono)): coeff
                                         for key, coeff in self.terms.items()})

    def permute(self, sigma):
        '''
        Substitutes x_k <- x_sigma(k); sigma lists the images of 1..d.
        '''
        check_permutation(sigma, self.d)
        terms = {}
        for mono, coeff in self.terms.items():
            image = [0] * self.d
            for index, exp in enumerate(mono):
                image[sigma[index] - 1] = exp
            terms[tuple(image)] = coeff
        return LaurentPoly._raw(self.d, terms)

    def collect(self, index):
        '''
        Splits by the exponent of x_index: {exponent: coefficient polynomial}.
        '''
        slices = collections.defaultdict(dict)
        for mono, coeff in self.terms.items():
            rest = list(mono)
            exp = rest[index - 1]
            rest[index - 1] = 0
            slices[exp][tuple(rest)] = coeff
        return {exp: LaurentPoly._raw(self.d, terms) for exp, terms in slices.items()}

    def is_constant(self):
        return all(not any(mono) for mono in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.d, ZERO)

    def evaluate(self, point, t):
        '''
        Exact value at x = point (nonzero rationals) and q = t.
        '''
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            value = eval_q(coeff, t)
            for x, exp in zip(point, mono):
                value *= Fraction(x) ** exp
            total += value
        return total

    def __eq__(self, other):
        if isinstance(other, (QRat, int, Fraction)):
            other = LaurentPoly.constant(self.d, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.d, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            powers = " ".join("x{}^{}".format(index + 1, exp) for index, exp in enumerate(mono))
            pieces.append("{} * {}".format(coeff, powers) if powers else str(coeff))
        return " + ".join(pieces)

    def __repr__(self):
        return "LaurentPoly({})".format(self)


def poly_arith(p, r, op):
    '''
    Applies one of the ring operations 'add', 'sub', 'mul'.
    '''
    if op == 'add':
        return p + r
    if op == 'sub':
        return p - r
    if op == 'mul':
        return p * r
    raise ValueError("Unknown operation {!r}".format(op))


def permute_vars(poly, sigma):
    return poly.permute(sigma)


class BinomialFactor(object):
    '''
    The factor (x_i - ratio * x_j)^multiplicity with i < j.
    '''
    __slots__ = ('i', 'j', 'ratio', 'multiplicity')

    def __init__(self, i, j, ratio, multiplicity=1):
        if i >= j:
            raise ValueError("binomial indices must satisfy i < j, got {} and {}".format(i, j))
        if not ratio:
            raise ValueError("binomial ratio must be nonzero")
        self.i = i
        self.j = j
        self.ratio = _scalar(ratio)
        self.multiplicity = multiplicity

    @classmethod
    def make(cls, left, i, right, j):
        '''
        Normalizes left*x_i - right*x_j into (scalar, factor).
        '''
        left, right = _scalar(left), _scalar(right)
        if i == j:
            raise ValueError("binomial needs two distinct variables, got x{} twice".format(i))
        if i < j:
            return left, cls(i, j, right / left)
        return -right, cls(j, i, left / right)

    @property
    def key(self):
        return (self.i, self.j, self.ratio)

    def with_multiplicity(self, multiplicity):
        return BinomialFactor(self.i, self.j, self.ratio, multiplicity)

    def as_poly(self, d):
        return LaurentPoly.variable(d, self.i) - LaurentPoly.variable(d, self.j).scale(self.ratio)

    def permute(self, sigma):
        '''
        Returns (scalar, factor) for the image under x_k <- x_sigma(k).
        '''
        scalar, factor = BinomialFactor.make(ONE, sigma[self.i - 1], self.ratio, sigma[self.j - 1])
        return scalar, factor.with_multiplicity(self.multiplicity)

    def __eq__(self, other):
        return isinstance(other, BinomialFactor) and self.key == other.key \
            and self.multiplicity == other.multiplicity

    def __hash__(self):
        return hash((self.key, self.multiplicity))

    def __str__(self):
        base = "(x{} - {} * x{})".format(self.i, self.ratio, self.j)
        return base if self.multiplicity == 1 else "{}^{}".format(base, self.multiplicity)

    __repr__ = __str__


def divide_by_binomial(poly, factor):
    '''
    Exact quotient of poly by (x_i - c x_j), or None when a remainder is left.
    '''
    d = poly.d
    if not poly:
        return poly
    slices = poly.collect(factor.i)
    top, bottom = max(slices), min(slices)
    zero = LaurentPoly.zero(d)
    step = unit_monomial(d, factor.j)
    quotient = LaurentPoly.zero(d)
    carry = zero
    for exp in range(top, bottom, -1):
        carry = slices.get(exp, zero) + carry.shift(step).scale(factor.ratio)
        quotient = quotient + carry.shift(unit_monomial(d, factor.i, exp - 1))
    remainder = slices.get(bottom, zero) + carry.shift(step).scale(factor.ratio)
    if remainder:
        return None
    return quotient


class StructuredFraction(object):
    '''
    numerator / (x^denom_monomial * product of binomial factors).

    The monomial part is folded into the numerator on construction, so
    denom_monomial is always the unit monomial afterwards.
    '''
    __slots__ = ('numerator', 'denom_monomial', 'denom_binomials')

    def __init__(self, numerator, denom_monomial=None, denom_binomials=()):
        d = numerator.d
        if denom_monomial is not None and any(denom_monomial):
            numerator = numerator.shift(tuple(-e for e in denom_monomial))
        merged = collections.OrderedDict()
        for factor in denom_binomials:
            if factor.key in merged:
                merged[factor.key] = merged[factor.key].with_multiplicity(
                    merged[factor.key].multiplicity + factor.multiplicity)
            else:
                merged[factor.key] = factor
        self.numerator = numerator
        self.denom_monomial = (0,) * d
        self.denom_binomials = tuple(sorted(merged.values(), key=_factor_order))

    @property
    def d(self):
        return self.numerator.d

    @classmethod
    def from_poly(cls, poly):
        return cls(poly)

    @classmethod
    def one(cls, d):
        return cls(LaurentPoly.one(d))

    def _lift(self, other):
        if isinstance(other, StructuredFraction):
            return other
        if isinstance(other, LaurentPoly):
            return StructuredFraction(other)
        if isinstance(other, (QRat, int, Fraction)):
            return StructuredFraction(LaurentPoly.constant(self.d, other))
        return None

    def _factors(self):
        return {factor.key: factor for factor in self.denom_binomials}

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return StructuredFraction(self.numerator * other.numerator,
                                  denom_binomials=self.denom_binomials + other.denom_binomials)

    __rmul__ = __mul__

    def __neg__(self):
        return StructuredFraction(-self.numerator, denom_binomials=self.denom_binomials)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return frac_sum([self, other])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return frac_sum([self, -other])

    def permute(self, sigma):
        check_permutation(sigma, self.d)
        numerator = self.numerator.permute(sigma)
        factors = []
        scalar = ONE
        for factor in self.denom_binomials:
            unit, image = factor.permute(sigma)
            scalar = scalar * unit ** factor.multiplicity
            factors.append(image)
        return StructuredFraction(numerator.scale(ONE / scalar), denom_binomials=factors)

    def reduce(self):
        '''
        Cancels binomial factors that divide the numerator exactly.
        '''
        numerator = self.numerator
        remaining = []
        for factor in self.denom_binomials:
            left = factor.multiplicity
            while left and numerator:
                quotient = divide_by_binomial(numerator, factor)
                if quotient is None:
                    break
                numerator = quotient
                left -= 1
            if not numerator:
                return StructuredFraction(numerator)
            if left:
                remaining.append(factor.with_multiplicity(left))
        return StructuredFraction(numerator, denom_binomials=remaining)

    def is_zero(self):
        return not self.numerator

    def evaluate(self, point, t):
        value = self.numerator.evaluate(point, t)
        for factor in self.denom_binomials:
            value /= factor.as_poly(self.d).evaluate(point, t) ** factor.multiplicity
        return value

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __str__(self):
        if not self.denom_binomials:
            return str(self.numerator)
        return "({}) / ({})".format(self.numerator, " * ".join(str(f) for f in self.denom_binomials))

    __repr__ = __str__


def _factor_order(factor):
    return (factor.i, factor.j, str(factor.ratio))


def frac_sum(fractions):
    '''
    Sums over the least common structured denominator.
    '''
    fractions = list(fractions)
    if not fractions:
        raise ValueError("frac_sum needs at least one term to know d")
    d = fractions[0].d
    common = {}
    for frac in fractions:
        for factor in frac.denom_binomials:
            held = common.get(factor.key)
            if held is None or held.multiplicity < factor.multiplicity:
                common[factor.key] = factor
    numerator = LaurentPoly.zero(d)
    for frac in fractions:
        if frac.is_zero():
            continue
        own = frac._factors()
        term = frac.numerator
        for key, factor in common.items():
            missing = factor.multiplicity - (own[key].multiplicity if key in own else 0)
            if missing:
                term = term * factor.as_poly(d) ** missing
        numerator = numerator + term
    if not numerator:
        return StructuredFraction(numerator)
    return StructuredFraction(numerator, denom_binomials=list(common.values()))


def frac_product(fractions, d):
    result = StructuredFraction.one(d)
    for frac in fractions:
        result = result * frac
    return result


def frac_combine(fractions, d, op='mul'):
    '''
    Product ('mul') or sum ('add') of fractions, polynomials and scalars.
    '''
    lifted = [StructuredFraction.one(d)._lift(frac) for frac in fractions]
    if op == 'mul':
        return frac_product(lifted, d)
    if op == 'add':
        return frac_sum(lifted) if lifted else StructuredFraction(LaurentPoly.zero(d))
    raise ValueError("Unknown operation {!r}".format(op))


def to_poly(frac):
    '''
    Clears the denominator, raising NotPolynomialError on a remainder.
    '''
    if isinstance(frac, LaurentPoly):
        return frac
    reduced = frac.reduce()
    if reduced.denom_binomials:
        raise NotPolynomialError(reduced.denom_binomials[0])
    return reduced.numerator


def theta_ratio(m, left, i, right, j, d):
    '''
    theta_m(left*x_i / (right*x_j)) = (q^m A - B) / (A - q^m B).

    With i == j the argument is the constant left/right and the value is a
    scalar fraction.
    '''
    left, right = _scalar(left), _scalar(right)
    if m == 0:
        return StructuredFraction.one(d)
    qm = Q ** m
    if i == j:
        denominator = left - qm * right
        if not denominator:
            raise ZeroDenominatorError("theta_{} argument {} makes the denominator vanish"
                                       .format(m, left / right))
        return StructuredFraction(LaurentPoly.constant(d, (qm * left - right) / denominator))
    numerator = LaurentPoly.variable(d, i).scale(qm * left) - LaurentPoly.variable(d, j).scale(right)
    scalar, factor = BinomialFactor.make(left, i, qm * right, j)
    return StructuredFraction(numerator.scale(ONE / scalar), denom_binomials=[factor])


class ThetaFactor(collections.namedtuple('ThetaFactor', ['m', 'coeff', 'monomial', 'z_side'])):
    '''
    theta_m(coeff * x^monomial * z^z_side) with z_side in (+1, -1).
    '''
    __slots__ = ()


def _theta_series(factor, d, direction, order):
    inverted = (direction == 'at_infinity') == (factor.z_side == 1)
    coeff = _scalar(factor.coeff)
    if inverted:
        eps = Q ** factor.m
        step = LaurentPoly.monomial(d, tuple(-e for e in factor.monomial), ONE / coeff)
    else:
        eps = Q ** (-factor.m)
        step = LaurentPoly.monomial(d, factor.monomial, coeff)
    series = [LaurentPoly.constant(d, eps)]
    power = LaurentPoly.one(d)
    for level in range(1, order + 1):
        power = power * step
        series.append(power.scale(eps ** (level + 1) - eps ** (level - 1)))
    return series


def series_mul(a, b, order):
    d = a[0].d
    result = []
    for level in range(order + 1):
        total = LaurentPoly.zero(d)
        for low in range(level + 1):
            if a[low] and b[level - low]:
                total = total + a[low] * b[level - low]
        result.append(total)
    return result


def expand_theta_series(d, factors, direction, order):
    '''
    Coefficients of z^-l (at_infinity) or z^l (at_zero), l = 0..order, of a
    product of theta factors.
    '''
    if direction not in ('at_infinity', 'at_zero'):
        raise ValueError("direction must be 'at_infinity' or 'at_zero'")
    result = [LaurentPoly.one(d)] + [LaurentPoly.zero(d)] * order
    for factor in factors:
        result = series_mul(result, _theta_series(factor, d, direction, order), order)
    return result


def series_log(series):
    '''
    Truncated logarithm of a series with constant term 1.
    '''
    d = series[0].d
    order = len(series) - 1
    if series[0] != LaurentPoly.one(d):
        raise ValueError("series_log needs constant term 1, got {}".format(series[0]))
    tail = [LaurentPoly.zero(d)] + list(series[1:])
    result = [LaurentPoly.zero(d)] * (order + 1)
    power = list(tail)
    for count in range(1, order + 1):
        sign = 1 if count % 2 else -1
        weight = Fraction(sign, count)
        result = [acc + term.scale(weight) for acc, term in zip(result, power)]
        power = series_mul(power, tail, order)
    return result
