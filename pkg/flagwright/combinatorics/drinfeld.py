'''
Jordan types of nilpotent matrices and the Drinfeld polynomials of the
simple modules attached to a nilpotent x and a semisimple s with
s x s^-1 = t^2 x.
'''
import logging
from fractions import Fraction

import numpy as np
from sympy import Matrix

from flagwright.algebra.qcoeff import guard_specialization

log = logging.getLogger(__name__)


class PartitionError(ValueError):
    '''
    Indicator for invalid Jordan data or mismatched block parameters.
    '''
    pass


class JordanData(object):
    '''
    A partition lambda of d with at most n rows per part (x^n = 0).
    '''
    def __init__(self, lam, n):
        lam = tuple(int(part) for part in lam)
        if not lam or any(part <= 0 for part in lam):
            raise PartitionError("partition parts must be positive: {}".format(list(lam)))
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise PartitionError("partition must be weakly decreasing: {}".format(list(lam)))
        if lam[0] > n:
            raise PartitionError("part {} exceeds n = {}".format(lam[0], n))
        self.lam = lam
        self.n = n

    @property
    def d(self):
        return sum(self.lam)

    def __len__(self):
        return len(self.lam)

    def __repr__(self):
        return "JordanData({}, n={})".format(list(self.lam), self.n)


class SemisimpleParam(object):
    '''
    One nonzero scalar per Jordan block and a value t of q that is neither
    zero nor a root of unity of order up to the cyclotomic bound.
    '''
    def __init__(self, alphas, t, bound=None):
        self.alphas = tuple(Fraction(alpha) for alpha in alphas)
        if any(alpha == 0 for alpha in self.alphas):
            raise PartitionError("block scalars must be nonzero: {}".format([str(a) for a in self.alphas]))
        self.t = guard_specialization(t, bound)

    def __len__(self):
        return len(self.alphas)


class DrinfeldPolys(object):
    '''
    P_1..P_(n-1) as coefficient lists, lowest degree first, monic.
    '''
    def __init__(self, polys, roots=None):
        self.polys = [tuple(Fraction(c) for c in poly) for poly in polys]
        self.roots = [tuple(root) for root in roots] if roots is not None else None

    def degrees(self):
        return [len(poly) - 1 for poly in self.polys]

    def to_json(self):
        return [[str(c) for c in poly] for poly in self.polys]

    def __eq__(self, other):
        return isinstance(other, DrinfeldPolys) and self.polys == other.polys

    def __repr__(self):
        return "DrinfeldPolys({})".format(self.to_json())


def _check_lengths(jordan, s):
    if len(jordan) != len(s):
        raise PartitionError("{} Jordan blocks but {} block scalars".format(len(jordan), len(s)))


def dual_partition(jordan):
    '''
    lambda^v_i = #{j : lambda_j >= i} for i = 1..n.
    '''
    return tuple(sum(1 for part in jordan.lam if part >= i) for i in range(1, jordan.n + 1))


def _product_of_roots(roots):
    poly = np.array([Fraction(1)], dtype=object)
    for root in roots:
        poly = np.convolve(poly, np.array([-root, Fraction(1)], dtype=object))
    return tuple(poly.tolist())


def drinfeld_polys(jordan, s):
    '''
    P_i(z) = prod over lambda^v_(i+1) < k <= lambda^v_i of (z - t^(i-2) / s_k).
    '''
    _check_lengths(jordan, s)
    dual = dual_partition(jordan) + (0,)
    polys, roots = [], []
    for i in range(1, jordan.n):
        block = [s.t ** (i - 2) / s.alphas[k - 1] for k in range(dual[i] + 1, dual[i - 1] + 1)]
        roots.append(tuple(block))
        polys.append(_product_of_roots(block))
    return DrinfeldPolys(polys, roots)


def fundamental_factors(jordan, s):
    '''
    The tensor factors (lambda_i, t^(lambda_i - 2) / alpha_i) of the
    Grothendieck-ring factorization; requires every lambda_i < n.
    '''
    _check_lengths(jordan, s)
    for part in jordan.lam:
        if part >= jordan.n:
            raise PartitionError("factorization needs every part below n = {}, got {}".format(jordan.n, part))
    return [(part, s.t ** (part - 2) / alpha) for part, alpha in zip(jordan.lam, s.alphas)]


def dominance(v, mu):
    '''
    True when every prefix sum of v is at most that of mu.
    '''
    v, mu = np.asarray(v, dtype=int), np.asarray(mu, dtype=int)
    if len(v) != len(mu) or v.sum() != mu.sum():
        raise PartitionError("dominance needs vectors of equal length and total: {} and {}"
                             .format(v.tolist(), mu.tolist()))
    return bool(np.all(np.cumsum(v) <= np.cumsum(mu)))


def build_semisimple(jordan, s):
    '''
    Diagonal of the sum of alpha_i D(lambda_i), D(k) = diag(1, t^-2, ..., t^-2(k-1)).
    '''
    _check_lengths(jordan, s)
    diagonal = []
    for part, alpha in zip(jordan.lam, s.alphas):
        diagonal.extend(alpha * s.t ** (-2 * j) for j in range(part))
    assert check_conjugation(jordan, s, diagonal), "s x s^-1 != t^2 x for {}".format(jordan)
    return tuple(diagonal)


def jordan_matrix(jordan):
    '''
    The nilpotent sum of Jordan blocks J(lambda_i), ones on the superdiagonal.
    '''
    d = jordan.d
    x = np.zeros((d, d), dtype=int)
    start = 0
    for part in jordan.lam:
        for k in range(start, start + part - 1):
            x[k, k + 1] = 1
        start += part
    return x


def dual_from_nilpotent(y, n=None):
    '''
    dim Ker(y^i) - dim Ker(y^(i-1)) for i = 1..n.
    '''
    y = np.asarray(y, dtype=int)
    size = y.shape[0]
    n = size if n is None else n
    nullities = [0]
    power = np.eye(size, dtype=int)
    for _ in range(n):
        power = power.dot(y)
        nullities.append(size - Matrix(power.tolist()).rank())
    return tuple(nullities[i] - nullities[i - 1] for i in range(1, n + 1))


def check_conjugation(jordan, s, diagonal=None):
    '''
    Verifies s x s^-1 = t^2 x entrywise for x = jordan_matrix(jordan).
    '''
    if diagonal is None:
        diagonal = build_semisimple(jordan, s)
    x = jordan_matrix(jordan)
    square = s.t ** 2
    for a, b in zip(*np.nonzero(x)):
        entry = int(x[a, b])
        if diagonal[a] * entry / diagonal[b] != square * entry:
            log.debug("conjugation fails at (%d, %d)", a + 1, b + 1)
            return False
    return True
