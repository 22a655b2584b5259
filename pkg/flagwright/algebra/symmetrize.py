'''
Coset symmetrizers between invariant subrings of the Laurent ring.
'''
import itertools
import logging

from flagwright.algebra.laurent import LaurentPoly, StructuredFraction, frac_sum
from flagwright.combinatorics.flagcomb import SegPartition

log = logging.getLogger(__name__)


class InvarianceError(ValueError):
    '''
    Indicator for a polynomial that is not invariant under the required group.
    '''
    pass


def _shuffles(items, sizes):
    '''
    Ordered splittings of items into consecutive groups of the given sizes.
    '''
    if not sizes:
        yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for chosen in itertools.combinations(items, first):
        remaining = [item for item in items if item not in chosen]
        for tail in _shuffles(remaining, rest):
            yield (chosen,) + tail


def coset_reps(source, target):
    '''
    One order-preserving representative for each coset of
    S_source & S_target in S_target, as tuples of images of 1..d.
    '''
    d = target.d
    per_piece = []
    for piece in target.pieces:
        members = sorted(piece)
        groups = [sorted(piece & part) for part in source.pieces if piece & part]
        sizes = [len(group) for group in groups]
        maps = []
        for split in _shuffles(members, sizes):
            mapping = {}
            for group, images in zip(groups, split):
                mapping.update(zip(group, images))
            maps.append(mapping)
        per_piece.append(maps)
    reps = []
    for choice in itertools.product(*per_piece):
        sigma = list(range(1, d + 1))
        for mapping in choice:
            for src, dst in mapping.items():
                sigma[src - 1] = dst
        reps.append(tuple(sigma))
    return reps


def _adjacent_transpositions(partition):
    d = partition.d
    for piece in partition.pieces:
        members = sorted(piece)
        for left, right in zip(members, members[1:]):
            sigma = list(range(1, d + 1))
            sigma[left - 1], sigma[right - 1] = right, left
            yield tuple(sigma)


def is_invariant(value, partition):
    '''
    True when value is fixed by every adjacent transposition inside a piece.
    '''
    for sigma in _adjacent_transpositions(partition):
        if value.permute(sigma) != value:
            return False
    return True


def symmetrize(value, source, target, check=True, reps=None):
    '''
    Sum of sigma(value) over coset representatives of S_source & S_target in
    S_target. The result is a StructuredFraction; clearing it is up to the
    caller.

    Args:
        check: Verify the S_source & S_target invariance of value first.
        reps: Explicit representatives, one per coset, instead of the
            order-preserving ones.
    '''
    if isinstance(value, LaurentPoly):
        value = StructuredFraction.from_poly(value)
    if check and not is_invariant(value, source.meet(target)):
        raise InvarianceError("{} is not invariant under the intersection of {} and {}"
                              .format(value, source, target))
    reps = coset_reps(source, target) if reps is None else reps
    return frac_sum([value.permute(sigma) for sigma in reps])


def orbit_sum(mono, partition, coeff=None):
    '''
    Sum of the distinct images of x^mono under S_partition.
    '''
    d = len(mono)
    trivial = SegPartition([[k] for k in range(1, d + 1)], d=d)
    images = set()
    for sigma in coset_reps(trivial, partition):
        image = [0] * d
        for index, exp in enumerate(mono):
            image[sigma[index] - 1] = exp
        images.add(tuple(image))
    poly = LaurentPoly(d, {image: 1 for image in images})
    return poly if coeff is None else poly.scale(coeff)
