'''
Combinatorics of pairs of partial flags: compositions, segment partitions,
matrices with prescribed margins, 3-arrays and the generic composition of
matrices.

Matrix positions (h, l) and variable labels are 1-based in every public
function, as they are written in the formulas; rows of stored tuples are
0-based.
'''
import itertools
import logging
from math import comb

import numpy as np

log = logging.getLogger(__name__)


class InvalidCompositionError(ValueError):
    '''
    Indicator for a composition with negative or non-integer parts.
    '''
    pass


class MarginError(ValueError):
    '''
    Indicator for matrices whose margins cannot be composed.
    '''
    pass


class NonUniqueMaximumError(AssertionError):
    '''
    Indicator that the marginals of T(A, B) have no unique maximum.
    '''
    pass


class ElementaryFormError(ValueError):
    '''
    Indicator for a matrix that is not diag(v) + a E_{h,h+-1}.
    '''
    pass


class Composition(tuple):
    '''
    An ordered tuple of n non-negative integers summing to d.
    '''
    def __new__(cls, parts):
        parts = tuple(parts)
        for part in parts:
            if not isinstance(part, (int, np.integer)) or part < 0:
                raise InvalidCompositionError("composition parts must be non-negative integers: {}".format(parts))
        return tuple.__new__(cls, (int(part) for part in parts))

    @property
    def n(self):
        return len(self)

    @property
    def d(self):
        return sum(self)

    def prefix(self, i):
        '''
        v_1 + ... + v_i, with prefix(0) = 0.
        '''
        return sum(self[:i])

    def moved(self, gain, lose):
        '''
        v + e_gain - e_lose, or None when a part would go negative.
        '''
        if self[lose - 1] == 0:
            return None
        parts = list(self)
        parts[gain - 1] += 1
        parts[lose - 1] -= 1
        return Composition(parts)

    def add(self, index, amount):
        parts = list(self)
        parts[index - 1] += amount
        return Composition(parts)


def compositions(n, d):
    '''
    Every composition of d into n parts, in lexicographic order.
    '''
    if n == 1:
        yield Composition((d,))
        return
    for first in range(d + 1):
        for rest in compositions(n - 1, d - first):
            yield Composition((first,) + tuple(rest))


class SegPartition(object):
    '''
    An ordered list of disjoint subsets of [d] covering [d]. Pieces may be
    empty and may carry labels, such as the (i, j) positions of a matrix.
    '''
    def __init__(self, pieces, labels=None, d=None):
        self.pieces = tuple(frozenset(piece) for piece in pieces)
        self.labels = tuple(labels) if labels is not None else tuple(range(1, len(self.pieces) + 1))
        covered = [item for piece in self.pieces for item in piece]
        self.d = d if d is not None else len(covered)
        if len(covered) != len(set(covered)) or set(covered) != set(range(1, self.d + 1)):
            raise ValueError("pieces {} do not partition 1..{}".format(self.pieces, self.d))

    @classmethod
    def from_sizes(cls, sizes, labels=None):
        pieces = []
        start = 1
        for size in sizes:
            pieces.append(range(start, start + size))
            start += size
        return cls(pieces, labels=labels, d=start - 1)

    def piece(self, label):
        return self.pieces[self.labels.index(label)]

    def nonempty(self):
        return [piece for piece in self.pieces if piece]

    def meet(self, other):
        '''
        The common refinement; its pieces are the nonempty intersections.
        '''
        pieces = [a & b for a in self.pieces for b in other.pieces if a & b]
        return SegPartition(pieces, d=self.d)

    def refines(self, other):
        return all(any(piece <= big for big in other.pieces) for piece in self.nonempty())

    def group_order(self):
        order = 1
        for piece in self.pieces:
            for k in range(2, len(piece) + 1):
                order *= k
        return order

    def __eq__(self, other):
        return isinstance(other, SegPartition) and self.d == other.d and \
            set(self.nonempty()) == set(other.nonempty())

    def __hash__(self):
        return hash((self.d, frozenset(self.nonempty())))

    def __repr__(self):
        return "SegPartition({})".format([sorted(piece) for piece in self.pieces])


def segments(v):
    '''
    The partition of [d] into the intervals [1 + v_1+..+v_{i-1}, v_1+..+v_i].
    '''
    return SegPartition.from_sizes(Composition(v))


class IntMatrix(tuple):
    '''
    An n x n matrix of non-negative integers stored as a tuple of row tuples.
    '''
    def __new__(cls, rows):
        rows = tuple(tuple(int(entry) for entry in row) for row in rows)
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise ValueError("matrix must be square: {}".format(rows))
        if any(entry < 0 for row in rows for entry in row):
            raise ValueError("matrix entries must be non-negative: {}".format(rows))
        return tuple.__new__(cls, rows)

    @classmethod
    def from_array(cls, array):
        return cls(np.asarray(array).tolist())

    @classmethod
    def diag(cls, v):
        n = len(v)
        return cls([[v[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n, i, j):
        array = np.zeros((n, n), dtype=int)
        array[i - 1, j - 1] = 1
        return cls.from_array(array)

    @classmethod
    def elementary(cls, v, h, a, lower=False):
        '''
        E_{h,h+1}(v, a) = diag(v) + a E_{h,h+1}, or E_{h,h-1}(v, a) when lower.
        '''
        array = np.diag(np.asarray(v, dtype=int))
        partner = h - 1 if lower else h + 1
        array[h - 1, partner - 1] += a
        return cls.from_array(array)

    @property
    def array(self):
        return np.array(self, dtype=int).reshape(len(self), len(self))

    @property
    def n(self):
        return len(self)

    @property
    def d(self):
        return int(self.array.sum())

    def row_sums(self):
        return Composition(self.array.sum(axis=1).tolist())

    def col_sums(self):
        return Composition(self.array.sum(axis=0).tolist())

    def transpose(self):
        return IntMatrix.from_array(self.array.T)

    def plus(self, other):
        return IntMatrix.from_array(self.array + np.asarray(other, dtype=int))

    def off_diagonal(self):
        return [(i + 1, j + 1) for i in range(self.n) for j in range(self.n) if i != j and self[i][j]]

    def is_diagonal(self):
        return not self.off_diagonal()

    def is_lower_triangular(self):
        return all(i > j for i, j in self.off_diagonal())

    def elementary_form(self):
        '''
        Returns (h, partner, v, a) when the matrix is diag(v) + a E_{h,partner}
        with |h - partner| = 1, else None.
        '''
        off = self.off_diagonal()
        if len(off) != 1:
            return None
        h, partner = off[0]
        if abs(h - partner) != 1:
            return None
        v = Composition(np.diag(self.array).tolist())
        return h, partner, v, self[h - 1][partner - 1]

    def to_json(self):
        return [list(row) for row in self]


class ThreeArray(tuple):
    '''
    An n x n x n array of non-negative integers, first index outermost.
    '''
    def __new__(cls, entries):
        return tuple.__new__(cls, (IntMatrix(layer) for layer in entries))

    @property
    def array(self):
        n = len(self)
        return np.array(self, dtype=int).reshape(n, n, n)

    def marginal(self, pair):
        '''
        Sums over the index not named: pair is one of '12', '23', '13'.
        '''
        axis = {'12': 2, '23': 0, '13': 1}[pair]
        return IntMatrix.from_array(self.array.sum(axis=axis))

    def to_json(self):
        return [layer.to_json() for layer in self]


def _contingency_tables(row_sums, col_sums):
    '''
    Yields every non-negative integer table with the given margins.
    '''
    if not row_sums:
        if not any(col_sums):
            yield ()
        return
    first, rest = row_sums[0], row_sums[1:]
    ranges = [range(min(bound, first) + 1) for bound in col_sums]
    for row in itertools.product(*ranges):
        if sum(row) != first:
            continue
        remaining = tuple(c - r for c, r in zip(col_sums, row))
        if sum(remaining) != sum(rest):
            continue
        for tail in _contingency_tables(rest, remaining):
            yield (row,) + tail


def perm_to_matrix(sigma, v, w):
    '''
    m_ij = number of alpha in [v]_i with sigma(alpha) in [w]_j.
    '''
    rows, cols = segments(v), segments(w)
    n = len(v)
    array = np.zeros((n, n), dtype=int)
    for i, piece in enumerate(rows.pieces):
        for alpha in piece:
            image = sigma[alpha - 1]
            j = next(j for j, target in enumerate(cols.pieces) if image in target)
            array[i, j] += 1
    return IntMatrix.from_array(array)


def bruhat_leq(sigma, tau):
    '''
    Rank-matrix criterion: #{a <= i : sigma(a) >= j} <= the same for tau.
    '''
    d = len(sigma)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            left = sum(1 for a in range(i) if sigma[a] >= j)
            right = sum(1 for a in range(i) if tau[a] >= j)
            if left > right:
                return False
    return True


def order_leq(a, b):
    '''
    a precedes-or-equals b: every upper-right corner sum (rows <= i, columns
    >= j, i < j) and every lower-left corner sum (rows >= i, columns <= j,
    j < i) of a is at most that of b. Different components are incomparable.
    '''
    if a.row_sums() != b.row_sums() or a.col_sums() != b.col_sums():
        return False
    left, right = a.array, b.array
    n = a.n
    for i in range(n):
        for j in range(n):
            if i < j and left[:i + 1, j:].sum() > right[:i + 1, j:].sum():
                return False
            if j < i and left[i:, :j + 1].sum() > right[i:, :j + 1].sum():
                return False
    return True


def enumerate_3arrays(a, b):
    '''
    All T with T_12 = a and T_23 = b; empty unless column sums of a equal
    row sums of b.
    '''
    if a.col_sums() != b.row_sums():
        return []
    n = a.n
    per_j = []
    for j in range(n):
        left = tuple(a[i][j] for i in range(n))
        right = tuple(b[j][k] for k in range(n))
        per_j.append(list(_contingency_tables(left, right)))
    arrays = []
    for choice in itertools.product(*per_j):
        entries = [[[choice[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]
        arrays.append(ThreeArray(entries))
    return arrays


def elementary_3arrays(a, b, h=None):
    '''
    For a = E_{h,h+1}(v, a_0), pairs (s, T(s)) with 0 <= s_k <= b_{h+1,k} and
    sum(s) = a_0. A diagonal a is the case a_0 = 0 (h defaults to 1).
    '''
    n = a.n
    if a.is_diagonal():
        h, amount = (h or 1), 0
    else:
        form = a.elementary_form()
        if form is None or form[1] != form[0] + 1:
            raise ElementaryFormError("{} is not of the form E_(h,h+1)(v,a)".format(a.to_json()))
        h, _, _, amount = form
    if a.col_sums() != b.row_sums():
        raise MarginError("column sums of {} differ from row sums of {}".format(a.to_json(), b.to_json()))
    if h >= n:
        return [((0,) * n, _diagonal_array(b))] if amount == 0 else []
    bounds = [b[h][k] for k in range(n)]
    tuples = [s for s in itertools.product(*(range(bound + 1) for bound in bounds)) if sum(s) == amount]
    result = []
    for s in sorted(tuples, reverse=True):
        entries = np.zeros((n, n, n), dtype=int)
        for i in range(n):
            for k in range(n):
                entries[i, i, k] = b[i][k]
        for k in range(n):
            entries[h, h, k] = b[h][k] - s[k]
            entries[h - 1, h, k] = s[k]
        result.append((s, ThreeArray(entries.tolist())))
    return result


def _diagonal_array(b):
    n = b.n
    entries = np.zeros((n, n, n), dtype=int)
    for i in range(n):
        for k in range(n):
            entries[i, i, k] = b[i][k]
    return ThreeArray(entries.tolist())


def closed_form(a, b):
    '''
    The composition of a and b when a is diagonal or elementary with the
    mass of the neighbouring row of b large enough; None otherwise.
    '''
    if a.col_sums() != b.row_sums():
        return None
    if a.is_diagonal():
        return b
    form = a.elementary_form()
    if form is None:
        return None
    h, partner, _, amount = form
    row = b[partner - 1]
    support = [k + 1 for k in range(b.n) if row[k]]
    if not support:
        return None
    l = max(support) if partner == h + 1 else min(support)
    if row[l - 1] < amount:
        return None
    shift = np.zeros((b.n, b.n), dtype=int)
    shift[h - 1, l - 1] += amount
    shift[partner - 1, l - 1] -= amount
    return b.plus(shift)


def compose(a, b, closed_forms=True):
    '''
    The unique maximum of {T_13 | T in T(a, b)} under order_leq.
    '''
    if a.col_sums() != b.row_sums():
        raise MarginError("column sums {} of A differ from row sums {} of B"
                          .format(list(a.col_sums()), list(b.row_sums())))
    if closed_forms:
        form = a.elementary_form()
        if a.is_diagonal() or (form is not None and form[1] == form[0] + 1):
            shortcut = closed_form(a, b)
            if shortcut is not None:
                return shortcut
    arrays = enumerate_3arrays(a, b)
    if not arrays:
        raise MarginError("no 3-array has marginals {} and {}".format(a.to_json(), b.to_json()))
    candidates = set(array.marginal('13') for array in arrays)
    maxima = [c for c in candidates if all(order_leq(other, c) for other in candidates)]
    if len(maxima) != 1:
        raise NonUniqueMaximumError("{} maxima among {} marginals of T({}, {})"
                                    .format(len(maxima), len(candidates), a.to_json(), b.to_json()))
    return maxima[0]


def blocks(a):
    '''
    Consecutive segments of sizes a_ij laid out in right lexicographic order:
    column by column, top to bottom. Labels are the 1-based (i, j).
    '''
    n = a.n
    labels = [(i + 1, j + 1) for j in range(n) for i in range(n)]
    sizes = [a[i - 1][j - 1] for i, j in labels]
    return SegPartition.from_sizes(sizes, labels=labels)


def row_partition(a):
    layout = blocks(a)
    return SegPartition([frozenset().union(*(layout.piece((i, j)) for j in range(1, a.n + 1)))
                         for i in range(1, a.n + 1)], d=layout.d)


def column_partition(a):
    layout = blocks(a)
    return SegPartition([frozenset().union(*(layout.piece((i, j)) for i in range(1, a.n + 1)))
                         for j in range(1, a.n + 1)], d=layout.d)


def length(c):
    return sum(comb(abs(i - j) + 1, 2) * c[i - 1][j - 1] for i, j in c.off_diagonal())


def induction_step(c):
    '''
    For c with a nonzero entry above the diagonal, returns (a, b) with
    compose(a, b) = c and length(b) < length(c).
    '''
    upper = [(i, j) for i, j in c.off_diagonal() if i < j]
    if not upper:
        raise ValueError("{} is lower triangular".format(c.to_json()))
    h, l = max(upper, key=lambda pos: (pos[1], pos[0]))
    amount = c[h - 1][l - 1]
    shift = np.zeros((c.n, c.n), dtype=int)
    shift[h, l - 1] += amount
    shift[h - 1, l - 1] -= amount
    b = c.plus(shift)
    v = c.row_sums().add(h, -amount)
    a = IntMatrix.elementary(v, h, amount)
    return a, b


def _split_upper(form):
    h, _, v, amount = form
    factors = []
    while amount > 1:
        factors.append(IntMatrix.elementary(v.add(h, amount - 1), h, 1))
        v = v.add(h + 1, 1)
        amount -= 1
    factors.append(IntMatrix.elementary(v, h, 1))
    return factors


def generator_decomposition(c):
    '''
    Factors (G_1, ..., G_m), each diagonal or E_{i,i+-1}(u, 1), with
    G_1 o (G_2 o (... o G_m)) = c.
    '''
    if c.is_diagonal():
        return [c]
    form = c.elementary_form()
    if form is not None and form[1] == form[0] + 1:
        return _split_upper(form)
    if not c.is_lower_triangular():
        a, b = induction_step(c)
        log.debug("split %s into %s o %s", c.to_json(), a.to_json(), b.to_json())
        return generator_decomposition(a) + generator_decomposition(b)
    # transposition reverses composition and preserves the order
    mirrored = generator_decomposition(c.transpose())
    return [factor.transpose() for factor in reversed(mirrored)]


def matrices(n, d):
    '''
    Every n x n non-negative integer matrix with entry total d.
    '''
    for entries in compositions(n * n, d):
        yield IntMatrix([entries[i * n:(i + 1) * n] for i in range(n)])
