'''
The graded convolution product on the rings R^(A) attached to matrices A,
in the cases with explicit formulas: pullback and pushforward along the two
projections, products with diagonal and elementary matrices, and the
Grassmannian product of two elementary matrices in the same position.
'''
import logging

from flagwright.algebra.laurent import BinomialFactor, LaurentPoly, StructuredFraction, to_poly
from flagwright.algebra.qcoeff import ONE, Q
from flagwright.algebra.symmetrize import is_invariant, symmetrize
from flagwright.combinatorics.flagcomb import (Composition, IntMatrix, blocks, closed_form,
                                               column_partition, row_partition, segments)

log = logging.getLogger(__name__)


class ConvolutionError(ValueError):
    '''
    Indicator for a violated precondition of a convolution product.
    '''
    pass


class GradedClass(object):
    '''
    A polynomial in R^(A), the invariants of S_A for the block partition [A].
    '''
    def __init__(self, matrix, value, check=True):
        self.matrix = matrix if isinstance(matrix, IntMatrix) else IntMatrix(matrix)
        self.value = value
        if value.d != self.matrix.d:
            raise ConvolutionError("value has {} variables but {} has total {}"
                                   .format(value.d, self.matrix.to_json(), self.matrix.d))
        if check and not is_invariant(value, blocks(self.matrix)):
            raise ConvolutionError("{} is not invariant under the blocks of {}"
                                   .format(value, self.matrix.to_json()))

    def __eq__(self, other):
        return isinstance(other, GradedClass) and self.matrix == other.matrix and self.value == other.value

    def __hash__(self):
        return hash((self.matrix, self.value))

    def __repr__(self):
        return "GradedClass({}, {})".format(self.matrix.to_json(), self.value)


def _side_partition(matrix, side):
    if side == 1:
        return row_partition(matrix)
    if side == 2:
        return column_partition(matrix)
    raise ValueError("side must be 1 or 2, got {}".format(side))


def order_preserving(source, target, d):
    '''
    The permutation sending each source piece onto the matching target piece
    in increasing order; pieces outside the lists stay fixed.
    '''
    sigma = list(range(1, d + 1))
    for src, dst in zip(source, target):
        if len(src) != len(dst):
            raise ConvolutionError("cannot relabel {} onto {}".format(sorted(src), sorted(dst)))
        for a, b in zip(sorted(src), sorted(dst)):
            sigma[a - 1] = b
    if sorted(sigma) != list(range(1, d + 1)):
        raise ConvolutionError("relabeling {} is not a bijection".format(sigma))
    return tuple(sigma)


def transport(value, source, target):
    '''
    Moves a polynomial invariant under source onto the labeling of target,
    piece i onto piece i.
    '''
    sigma = order_preserving(source.pieces, target.pieces, value.d)
    return value.permute(sigma)


def pullback(value, matrix, side):
    '''
    Views value in R^(A_side) as an element of R^(A).
    '''
    matrix = matrix if isinstance(matrix, IntMatrix) else IntMatrix(matrix)
    if not is_invariant(value, _side_partition(matrix, side)):
        raise ConvolutionError("{} is not invariant under side {} of {}".format(value, side, matrix.to_json()))
    return GradedClass(matrix, value, check=False)


def _couples(matrix, side):
    layout = blocks(matrix)
    n = matrix.n
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            for l in range(k + 1, n + 1):
                if side == 1:
                    later, earlier = layout.piece((j, l)), layout.piece((j, k))
                else:
                    later, earlier = layout.piece((l, j)), layout.piece((k, j))
                for s in sorted(later):
                    for t in sorted(earlier):
                        yield s, t


def pushforward(graded, side):
    '''
    Symmetrizes value * prod (1 - x_s/x_t)^-1 from [A] to A_side.
    '''
    matrix, d = graded.matrix, graded.value.d
    kernel = StructuredFraction.from_poly(graded.value)
    for s, t in _couples(matrix, side):
        # (1 - x_s/x_t)^-1 = x_t / (x_t - x_s)
        scalar, factor = BinomialFactor.make(ONE, t, ONE, s)
        numerator = LaurentPoly.variable(d, t).scale(ONE / scalar)
        kernel = kernel * StructuredFraction(numerator, denom_binomials=[factor])
    target = _side_partition(matrix, side)
    result = to_poly(symmetrize(kernel, blocks(matrix), target, check=False))
    return result


def star_diag(value, graded, v):
    '''
    Product with the diagonal matrix diag(v): value in R^(v) is moved onto
    the row partition of B and multiplied.
    '''
    matrix = graded.matrix
    if tuple(matrix.row_sums()) != tuple(v):
        raise ConvolutionError("row sums {} of B differ from v = {}".format(list(matrix.row_sums()), list(v)))
    source = segments(v)
    if not is_invariant(value, source):
        raise ConvolutionError("{} is not invariant under the segments of {}".format(value, list(v)))
    moved = transport(value, source, row_partition(matrix))
    return GradedClass(matrix, moved * graded.value)


def elementary_relabeling(a, c, h, l):
    '''
    Sends [A]_hh onto the union of [C]_hj (j != l), the off-diagonal block of
    A onto [C]_hl and every other [A]_ii onto row i of C.
    '''
    layout_a, layout_c = blocks(a), blocks(c)
    rows_c = row_partition(c)
    n, d = a.n, a.d
    sources, targets = [], []
    for i in range(1, n + 1):
        if i == h:
            continue
        sources.append(layout_a.piece((i, i)))
        targets.append(rows_c.pieces[i - 1])
    sources.append(layout_a.piece((h, h)))
    targets.append(frozenset().union(*(layout_c.piece((h, j)) for j in range(1, n + 1) if j != l)))
    partner = a.elementary_form()[1]
    sources.append(layout_a.piece((h, partner)))
    targets.append(layout_c.piece((h, l)))
    return order_preserving(sources, targets, d)


def star_elem(left, right):
    '''
    Product of a class on A = E_{h,h+-1}(v, a) with a class on B when the
    neighbouring row of B can absorb a in its extreme column l and b_hl = 0.
    '''
    a, b = left.matrix, right.matrix
    form = a.elementary_form()
    if form is None:
        raise ConvolutionError("{} is not of the form E_(h,h+-1)(v,a)".format(a.to_json()))
    h, partner, _, amount = form
    if a.col_sums() != b.row_sums():
        raise ConvolutionError("column sums {} of A differ from row sums {} of B"
                               .format(list(a.col_sums()), list(b.row_sums())))
    support = [k + 1 for k in range(b.n) if b[partner - 1][k]]
    if not support:
        raise ConvolutionError("row {} of B is zero".format(partner))
    l = max(support) if partner == h + 1 else min(support)
    if b[partner - 1][l - 1] < amount:
        raise ConvolutionError("b_({},{}) = {} is smaller than a = {}".format(partner, l, b[partner - 1][l - 1], amount))
    if b[h - 1][l - 1] != 0:
        raise ConvolutionError("b_({},{}) must vanish, got {}".format(h, l, b[h - 1][l - 1]))
    c = closed_form(a, b)
    sigma = elementary_relabeling(a, c, h, l)
    return GradedClass(c, left.value.permute(sigma) * right.value)


def grassmann_layout(a, b, v, i=1):
    '''
    The matrices A = E_{i,i+1}(v + b e_i, a), B = E_{i,i+1}(v + a e_{i+1}, b),
    their composition C and the variable sets I_1..I_4.
    '''
    v = Composition(v)
    left = IntMatrix.elementary(v.add(i, b), i, a)
    right = IntMatrix.elementary(v.add(i + 1, a), i, b)
    composed = IntMatrix.elementary(v, i, a + b)
    layout_a, layout_b = blocks(left), blocks(right)
    first = layout_b.piece((i, i))
    second = layout_b.piece((i, i + 1))
    third = layout_a.piece((i, i + 1))
    fourth = layout_a.piece((i + 1, i + 1))
    return left, right, composed, (first, second, third, fourth)


def star_grassmann(f, a, g, b, v, i=1, normalized=True):
    '''
    Product of f in R^(A) and g in R^(B) for the Grassmannian pair.

    Args:
        normalized: Use the kernel prod (q^2 x_t - x_s)/(x_t - x_s), whose
            symmetrization of 1 is q^(ab)[a+b]!/([a]![b]!). Otherwise use
            prod (1 - q^2 x_t/x_s)/(1 - x_s/x_t); s runs over I_2, t over I_3.
    '''
    left, right, composed, (_, second, third, _) = grassmann_layout(a, b, v, i)
    if not is_invariant(f, blocks(left)):
        raise ConvolutionError("{} is not invariant under the blocks of {}".format(f, left.to_json()))
    if not is_invariant(g, blocks(right)):
        raise ConvolutionError("{} is not invariant under the blocks of {}".format(g, right.to_json()))
    d = left.d
    q_squared = Q * Q
    kernel = StructuredFraction.from_poly(f * g)
    for s in sorted(second):
        for t in sorted(third):
            scalar, factor = BinomialFactor.make(ONE, t, ONE, s)
            numerator = LaurentPoly.variable(d, t).scale(q_squared) - LaurentPoly.variable(d, s)
            if not normalized:
                # (1 - q^2 x_t/x_s)/(1 - x_s/x_t) = -(x_t/x_s) (q^2 x_t - x_s)/(x_t - x_s)
                swap = [0] * d
                swap[t - 1], swap[s - 1] = 1, -1
                numerator = -numerator.shift(tuple(swap))
            kernel = kernel * StructuredFraction(numerator.scale(ONE / scalar), denom_binomials=[factor])
    source = blocks(left).meet(blocks(right))
    value = to_poly(symmetrize(kernel, source, blocks(composed), check=False))
    return GradedClass(composed, value)


def grassmann_unit(a, b, v, i=1):
    '''
    The unit splitting between the two kernels of star_grassmann:
    (f * u_A, g * u_B) under the displayed kernel equals (f, g) under the
    normalized one.
    '''
    left, _, _, (_, second, third, _) = grassmann_layout(a, b, v, i)
    d = left.d
    sign = -1 if (a * b) % 2 else 1
    u_a = [0] * d
    for t in third:
        u_a[t - 1] = -b
    u_b = [0] * d
    for s in second:
        u_b[s - 1] = a
    return LaurentPoly.monomial(d, u_a, ONE * sign), LaurentPoly.monomial(d, u_b)
