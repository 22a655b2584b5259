'''
The polynomial representation of the quantum loop algebra of gl(n) on
K = sum over compositions v of R^(v), one Fourier mode at a time.

E and F modes move a polynomial between neighbouring weights through a
symmetrizer; K and H modes act on each R^(v) by multiplication.
'''
import collections
import functools
import logging
import random
from fractions import Fraction

import numpy as np

from flagwright import settings
from flagwright.algebra.laurent import (LaurentPoly, StructuredFraction, ThetaFactor, frac_sum,
                                        expand_theta_series, series_log, theta_ratio, to_poly,
                                        unit_monomial)
from flagwright.algebra.qcoeff import ONE, Q, Q_DIFF, Q_INV, QRat, qint
from flagwright.algebra.symmetrize import is_invariant, orbit_sum, symmetrize
from flagwright.combinatorics.flagcomb import Composition, segments

log = logging.getLogger(__name__)

PLUS, MINUS = '+', '-'


class CartanData(object):
    '''
    C has -1 on the diagonal and +1 on the superdiagonal; M = -C - C^t.
    '''
    def __init__(self, n):
        self.n = n
        self.c_matrix = -np.eye(n, dtype=int) + np.eye(n, k=1, dtype=int)
        self.m_matrix = -self.c_matrix - self.c_matrix.T

    def c(self, i, j):
        return int(self.c_matrix[i - 1, j - 1])

    def m(self, i, j):
        return int(self.m_matrix[i - 1, j - 1])


class WeightVector(object):
    '''
    A finitely supported element of K: {Composition: LaurentPoly}.
    '''
    def __init__(self, components=None, check=True):
        self.components = {}
        for v, f in (components or {}).items():
            v = Composition(v)
            if not f:
                continue
            if check and not is_invariant(f, segments(v)):
                raise ValueError("{} is not invariant under the segments of {}".format(f, list(v)))
            self.components[v] = f

    @classmethod
    def single(cls, v, f):
        return cls({v: f})

    def __add__(self, other):
        merged = dict(self.components)
        for v, f in other.components.items():
            merged[v] = merged[v] + f if v in merged else f
        return WeightVector(merged, check=False)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, value):
        return WeightVector({v: f.scale(value) for v, f in self.components.items()}, check=False)

    def is_zero(self):
        return not self.components

    def __eq__(self, other):
        return isinstance(other, WeightVector) and (self - other).is_zero()

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __str__(self):
        if not self.components:
            return "0"
        return "; ".join("{}: {}".format(list(v), f) for v, f in sorted(self.components.items()))

    __repr__ = __str__


def _raise_weight(v, i):
    return Composition(v).moved(i, i + 1)


def _lower_weight(v, i):
    return Composition(v).moved(i + 1, i)


@functools.lru_cache(maxsize=4096)
def apply_E(i, k, v, f):
    '''
    Mode k of E_i on f in R^(v). Returns (v + e_i - e_(i+1), value), or None
    when the target weight has a negative part or the value vanishes.
    '''
    v = Composition(v)
    target = _raise_weight(v, i)
    if target is None:
        return None
    d = v.d
    p = v.prefix(i) + 1
    kernel = StructuredFraction.from_poly(f.shift(unit_monomial(d, p, k)))
    for m in range(v.prefix(i - 1) + 1, v.prefix(i) + 1):
        kernel = kernel * theta_ratio(1, Q, p, ONE, m, d)
    value = to_poly(symmetrize(kernel, segments(v), segments(target), check=False)).scale(Q_DIFF)
    if not value:
        return None
    return target, value


@functools.lru_cache(maxsize=4096)
def apply_F(i, k, v, f):
    '''
    Mode k of F_i on f in R^(v). Returns (v - e_i + e_(i+1), value), or None.
    '''
    v = Composition(v)
    target = _lower_weight(v, i)
    if target is None:
        return None
    d = v.d
    r = v.prefix(i)
    kernel = StructuredFraction.from_poly(f.shift(unit_monomial(d, r, k)))
    for m in range(v.prefix(i) + 1, v.prefix(i + 1) + 1):
        kernel = kernel * theta_ratio(-1, ONE, r, Q, m, d)
    value = to_poly(symmetrize(kernel, segments(v), segments(target), check=False)).scale(Q_DIFF)
    if not value:
        return None
    return target, value


def _k_factors(i, v):
    d = v.d
    factors = [ThetaFactor(1, Q, unit_monomial(d, m, -1), 1) for m in range(1, v.prefix(i - 1) + 1)]
    factors += [ThetaFactor(1, Q_INV, unit_monomial(d, m, -1), 1) for m in range(v.prefix(i) + 1, d + 1)]
    return factors


def _direction(sign):
    if sign == PLUS:
        return 'at_infinity'
    if sign == MINUS:
        return 'at_zero'
    raise ValueError("sign must be '+' or '-', got {!r}".format(sign))


@functools.lru_cache(maxsize=1024)
def _k_series(i, sign, order, v):
    return tuple(expand_theta_series(v.d, _k_factors(i, v), _direction(sign), order))


def K_coeff(i, sign, l, v):
    '''
    Coefficient of z^-l (sign '+', expansion at infinity) or z^l (sign '-',
    expansion at zero) of K_i on R^(v).
    '''
    if l < 0:
        raise ValueError("K_coeff needs l >= 0, got {}".format(l))
    return _k_series(i, sign, l, Composition(v))[l]


def K_mode(i, sign, b, v):
    '''
    The operator K^sign_(i,b), coefficient of w^-b; zero for b < 0 when sign
    is '+' and for b > 0 when sign is '-'.
    '''
    v = Composition(v)
    if (sign == PLUS and b < 0) or (sign == MINUS and b > 0):
        return LaurentPoly.zero(v.d)
    return K_coeff(i, sign, abs(b), v)


def weight_scalar(i, v):
    v = Composition(v)
    return QRat.q_power(v.d - v[i - 1])


def _psi_factors(i, v):
    d = v.d
    factors = [ThetaFactor(1, Q, unit_monomial(d, m, -1), 1) for m in range(v.prefix(i - 1) + 1, v.prefix(i) + 1)]
    factors += [ThetaFactor(-1, Q_INV, unit_monomial(d, m, -1), 1)
                for m in range(v.prefix(i) + 1, v.prefix(i + 1) + 1)]
    return factors


@functools.lru_cache(maxsize=1024)
def _psi_series(i, sign, order, v):
    return tuple(expand_theta_series(v.d, _psi_factors(i, v), _direction(sign), order))


def psi(i, sign, m, v):
    '''
    Mode m of K_(i+1)(z)/K_i(z) on R^(v), expanded at infinity for '+'
    (m >= 0) and at zero for '-' (m <= 0).
    '''
    v = Composition(v)
    if (sign == PLUS and m < 0) or (sign == MINUS and m > 0):
        return LaurentPoly.zero(v.d)
    return _psi_series(i, sign, abs(m), v)[abs(m)]


def H_poly(i, k, v):
    '''
    The closed form -[|k|]/|k| (q^-k sum_{l <= vbar_(i-1)} x_l^k
    + q^k sum_{l > vbar_i} x_l^k).
    '''
    if k == 0:
        raise ValueError("H_poly needs k != 0")
    v = Composition(v)
    d = v.d
    low = sum((LaurentPoly.variable(d, l, k) for l in range(1, v.prefix(i - 1) + 1)), LaurentPoly.zero(d))
    high = sum((LaurentPoly.variable(d, l, k) for l in range(v.prefix(i) + 1, d + 1)), LaurentPoly.zero(d))
    scalar = -qint(abs(k)) * Fraction(1, abs(k))
    return (low.scale(QRat.q_power(-k)) + high.scale(QRat.q_power(k))).scale(scalar)


def H_from_log(i, k, v):
    '''
    H_(i,k) read off the logarithm of the normalized K series:
    K^+(z) = K exp((q - q^-1) sum H_k z^-k), K^-(z) = K^-1 exp(-(q - q^-1) sum H_-k z^k).
    '''
    if k == 0:
        raise ValueError("H_from_log needs k != 0")
    v = Composition(v)
    order = abs(k)
    sign = PLUS if k > 0 else MINUS
    series = _k_series(i, sign, order, v)
    unit = weight_scalar(i, v)
    normalized = [term.scale(ONE / unit if k > 0 else unit) for term in series]
    coefficient = series_log(normalized)[order]
    if k < 0:
        coefficient = -coefficient
    return coefficient.scale(ONE / Q_DIFF)


def power_sum_matrix(n, k):
    '''
    Rows i = 1..n express H_(i,k) in the segment power sums p_1..p_n.
    '''
    if k == 0:
        raise ValueError("power_sum_matrix needs k != 0")
    scalar = -qint(abs(k)) * Fraction(1, abs(k))
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j < i:
                row.append(scalar * QRat.q_power(-k))
            elif j > i:
                row.append(scalar * QRat.q_power(k))
            else:
                row.append(QRat(0))
        rows.append(row)
    return rows


def theta_sum(m):
    '''
    sum over h in J of prod over l in J - {h} of theta_1(q x_h / x_l), J = [1, m];
    the constant [m].
    '''
    terms = []
    for h in range(1, m + 1):
        term = StructuredFraction.one(m)
        for l in range(1, m + 1):
            if l != h:
                term = term * theta_ratio(1, Q, h, ONE, l, m)
        terms.append(term)
    return to_poly(frac_sum(terms))


def segment_power_sum(j, k, v):
    v = Composition(v)
    d = v.d
    return sum((LaurentPoly.variable(d, l, k) for l in range(v.prefix(j - 1) + 1, v.prefix(j) + 1)),
               LaurentPoly.zero(d))


def sample_polynomials(v, count, seed, bound=None):
    '''
    count invariant polynomials in R^(v): 1, then alternating orbit sums of
    random monomials and sparse random combinations of two orbit sums.
    '''
    v = Composition(v)
    d = v.d
    bound = settings.SAMPLE_EXPONENT_BOUND if bound is None else bound
    rng = random.Random("{}:{}".format(seed, list(v)))
    layout = segments(v)
    samples = [LaurentPoly.one(d)]
    while len(samples) < count:
        mono = tuple(rng.randint(-bound, bound) for _ in range(d))
        if len(samples) % 2:
            samples.append(orbit_sum(mono, layout))
            continue
        other = tuple(rng.randint(-bound, bound) for _ in range(d))
        left = QRat.from_terms({rng.randint(-1, 1): rng.randint(1, 3)})
        right = QRat(rng.choice((-2, -1, 1, 2)))
        sample = orbit_sum(mono, layout, left) + orbit_sum(other, layout, right)
        samples.append(sample if sample else LaurentPoly.one(d))
    return samples[:count]


Mode = collections.namedtuple('Mode', ['kind', 'index', 'mode', 'sign'], defaults=(None,))


def _act_single(step, v, f):
    if step.kind == 'E':
        return apply_E(step.index, step.mode, v, f)
    if step.kind == 'F':
        return apply_F(step.index, step.mode, v, f)
    if step.kind == 'K':
        value = K_mode(step.index, step.sign, step.mode, v) * f
    elif step.kind == 'psi':
        value = psi(step.index, step.sign, step.mode, v) * f
    elif step.kind == 'H':
        value = H_poly(step.index, step.mode, v) * f
    else:
        raise ValueError("unknown operator kind {!r}".format(step.kind))
    return (v, value) if value else None


def act(word, vector):
    '''
    Applies a product of modes to a WeightVector, rightmost mode first.
    '''
    current = vector.components
    for step in reversed(word):
        image = {}
        for v, f in current.items():
            result = _act_single(step, v, f)
            if result is None:
                continue
            target, value = result
            image[target] = image[target] + value if target in image else value
        current = {v: f for v, f in image.items() if f}
        if not current:
            break
    return WeightVector(current, check=False)
