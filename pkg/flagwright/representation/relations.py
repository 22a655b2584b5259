'''
Exact per-mode verification of the relations (a)-(j) on the polynomial
representation.

Each relation is checked in its denominator-cleared form: a relation
D(z, w) X(z) Y(w) = N(z, w) Y(w) X(z) with D = d_z z - d_w w and
N = n_z z - n_w w becomes, at every pair of modes (k, l),

    d_z X_(k+1) Y_l - d_w X_k Y_(l+1) = n_z Y_l X_(k+1) - n_w Y_(l+1) X_k.
'''
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from flagwright import settings
from flagwright.algebra.laurent import NotPolynomialError
from flagwright.algebra.qcoeff import ONE, Q_DIFF, QRat, qint
from flagwright.combinatorics.flagcomb import compositions
from flagwright.representation.flagable import Flagable
from flagwright.representation.polyrep import (MINUS, PLUS, CartanData, Mode, WeightVector, act,
                                               sample_polynomials)

log = logging.getLogger(__name__)

RELATIONS = tuple('abcdefghij')


@dataclass
class Failure:
    v: Tuple[int, ...]
    indices: Tuple
    modes: Tuple
    sample: str
    lhs: str
    rhs: str

    def to_json(self):
        return {'v': list(self.v), 'indices': list(self.indices), 'modes': list(self.modes),
                'sample': self.sample, 'lhs': self.lhs, 'rhs': self.rhs}


@dataclass
class Report:
    relation: str
    n: int
    d: int
    window: int
    samples: int
    seed: int
    checks: int = 0
    failures: List[Failure] = field(default_factory=list)
    flags: Dict[str, list] = field(default_factory=dict)
    worst_flag: str = 'minor'

    @property
    def passed(self):
        return not self.failures and not Flagable.is_blocking(self.worst_flag)

    def to_json(self):
        return {
            'relation': self.relation,
            'n': self.n,
            'd': self.d,
            'window': self.window,
            'samples': self.samples,
            'seed': self.seed,
            'checks': self.checks,
            'failures': [failure.to_json() for failure in self.failures],
            'flags': Flagable.flags_to_json(self.flags),
            'worst_flag': self.worst_flag,
        }


def _linear(terms, vector):
    '''
    sum of coeff * word(vector) over (coeff, word) pairs.
    '''
    total = WeightVector()
    for coeff, word in terms:
        image = act(word, vector)
        if not image.is_zero():
            total = total + image.scale(coeff)
    return total


def _q(exp):
    return QRat.q_power(exp)


def cleared_check(x_mode, y_mode, k, l, d_pair, n_pair):
    '''
    Left and right sides of the cleared mode identity for X(z), Y(w) given
    mode constructors x_mode(k) and y_mode(l).
    '''
    d_z, d_w = d_pair
    n_z, n_w = n_pair
    lhs = [(d_z, (x_mode(k + 1), y_mode(l))), (-d_w, (x_mode(k), y_mode(l + 1)))]
    rhs = [(n_z, (y_mode(l), x_mode(k + 1))), (-n_w, (y_mode(l + 1), x_mode(k)))]
    return lhs, rhs


class RelationVerifier(Flagable):
    '''
    Checks one relation on every weight of (n, d), every admissible index
    pair and every mode pair in [-window, window] against seeded samples.
    '''
    def __init__(self, n, d, window=None, samples=None, seed=None, threads=None):
        if n < 2 or d < 1:
            raise ValueError("verification needs n >= 2 and d >= 1, got n={} d={}".format(n, d))
        self.n = n
        self.d = d
        self.window = settings.DEFAULT_WINDOW if window is None else window
        self.samples = settings.DEFAULT_SAMPLES if samples is None else samples
        self.seed = settings.DEFAULT_SEED if seed is None else seed
        self.threads = settings.thread_cap() if threads is None else threads
        self.cartan = CartanData(n)

    def _modes(self, count):
        span = range(-self.window, self.window + 1)
        return itertools.product(span, repeat=count)

    def _cases(self, relation):
        '''
        Yields (indices, modes, lhs_terms, rhs_terms) for one relation.
        '''
        n, cartan = self.n, self.cartan
        nodes = range(1, n)
        if relation in ('a', 'b'):
            signs = [(PLUS, PLUS), (MINUS, MINUS)] if relation == 'a' else [(PLUS, MINUS), (MINUS, PLUS)]
            for i, j in itertools.product(range(1, n + 1), repeat=2):
                for s, t in signs:
                    for a, b in self._modes(2):
                        x, y = Mode('K', i, a, s), Mode('K', j, b, t)
                        yield (i, j, s, t), (a, b), [(ONE, (x, y))], [(ONE, (y, x))]
        elif relation in ('c', 'd'):
            kind = 'E' if relation == 'c' else 'F'
            for i in nodes:
                for j in range(1, n + 1):
                    pairs = self._k_pairs(kind, i, j)
                    for sign in (PLUS, MINUS):
                        for k, l in self._modes(2):
                            lhs, rhs = cleared_check(lambda m: Mode(kind, i, m), lambda m: Mode('K', j, m, sign),
                                                     k, l, *pairs)
                            yield (i, j, sign), (k, l), lhs, rhs
        elif relation == 'e':
            for i, j in itertools.product(nodes, repeat=2):
                for k, l in self._modes(2):
                    e, f = Mode('E', i, k), Mode('F', j, l)
                    lhs = [(ONE, (e, f)), (-ONE, (f, e))]
                    rhs = []
                    if i == j:
                        rhs = [(Q_DIFF, (Mode('psi', i, k + l, PLUS),)),
                               (-Q_DIFF, (Mode('psi', i, k + l, MINUS),))]
                    yield (i, j), (k, l), lhs, rhs
        elif relation in ('f', 'g'):
            kind = 'E' if relation == 'f' else 'F'
            for i, j in itertools.product(nodes, repeat=2):
                m = cartan.m(i, j) if relation == 'f' else -cartan.m(i, j)
                d_pair, n_pair = (_q(i - j), _q(m)), (_q(m + i - j), ONE)
                for k, l in self._modes(2):
                    lhs, rhs = cleared_check(lambda s: Mode(kind, i, s), lambda s: Mode(kind, j, s),
                                             k, l, d_pair, n_pair)
                    yield (i, j), (k, l), lhs, rhs
        elif relation in ('h', 'i'):
            kind = 'E' if relation == 'h' else 'F'
            two = qint(2)
            for i, j in itertools.product(nodes, repeat=2):
                if abs(i - j) != 1:
                    continue
                for a, b, c in self._modes(3):
                    lhs = []
                    for x, y in ((a, b), (b, a)):
                        ex, ey, ec = Mode(kind, i, x), Mode(kind, i, y), Mode(kind, j, c)
                        lhs += [(ONE, (ex, ey, ec)), (-two, (ex, ec, ey)), (ONE, (ec, ex, ey))]
                    yield (i, j), (a, b, c), lhs, []
        elif relation == 'j':
            for i, j in itertools.product(nodes, repeat=2):
                if abs(i - j) <= 1:
                    continue
                for kind in ('E', 'F'):
                    for k, l in self._modes(2):
                        x, y = Mode(kind, i, k), Mode(kind, j, l)
                        yield (kind, i, j), (k, l), [(ONE, (x, y))], [(ONE, (y, x))]
        else:
            raise ValueError("unknown relation {!r}; expected one of {}".format(relation, ''.join(RELATIONS)))

    def _k_pairs(self, kind, i, j):
        '''
        (D, N) coefficient pairs for E_i(z) or F_i(z) against K_j(w).
        '''
        q, q_inv = _q(1), _q(-1)
        if j == i:
            return ((q, q_inv), (ONE, ONE)) if kind == 'E' else ((ONE, ONE), (q, q_inv))
        if j == i + 1:
            return ((q_inv, q), (ONE, ONE)) if kind == 'E' else ((ONE, ONE), (q_inv, q))
        return (ONE, ONE), (ONE, ONE)

    def _vacuous(self, relation):
        nodes = range(1, self.n)
        if relation in ('h', 'i'):
            return not any(abs(i - j) == 1 for i in nodes for j in nodes)
        if relation == 'j':
            return not any(abs(i - j) > 1 for i in nodes for j in nodes)
        return False

    def _check_one(self, task):
        relation, v, sample_index, sample, indices, modes, lhs_terms, rhs_terms = task
        vector = WeightVector.single(v, sample)
        try:
            lhs = _linear(lhs_terms, vector)
            rhs = _linear(rhs_terms, vector)
        except NotPolynomialError as err:
            return task, None, None, err
        return task, lhs, rhs, None

    def _tasks(self, relation):
        for v in compositions(self.n, self.d):
            samples = sample_polynomials(v, self.samples, self.seed)
            for indices, modes, lhs, rhs in self._cases(relation):
                for index, sample in enumerate(samples):
                    yield relation, v, index, sample, indices, modes, lhs, rhs

    def verify(self, relation):
        '''
        Runs every check of one relation and returns its Report.
        '''
        report = Report(relation, self.n, self.d, self.window, self.samples, self.seed)
        flags = {}
        if self._vacuous(relation):
            self.flag_code(flags, 'vacuous-relation', (), relation, "n={}".format(self.n))
        if relation in ('b',):
            self.flag_code(flags, 'commuting-operators', (), relation)
        if relation in ('c', 'd'):
            self.flag_code(flags, 'printed-form-unverifiable', (), relation)
        if relation in ('c', 'd', 'f', 'g'):
            self.flag_code(flags, 'cleared-denominator', (), relation)

        with ThreadPoolExecutor(max_workers=max(1, self.threads)) as executor:
            results = list(executor.map(self._check_one, self._tasks(relation)))

        for task, lhs, rhs, err in results:
            _, v, sample_index, sample, indices, modes, _, _ = task
            report.checks += 1
            location = (tuple(v), tuple(indices), tuple(modes), sample_index)
            if err is not None:
                self.flag_code(flags, 'not-polynomial', location, relation, str(err))
                report.failures.append(Failure(tuple(v), tuple(indices), tuple(modes), str(sample),
                                               str(err), ''))
                continue
            if lhs != rhs:
                self.flag_code(flags, 'relation-failed', location, relation,
                               "v={} indices={} modes={}".format(list(v), list(indices), list(modes)))
                report.failures.append(Failure(tuple(v), tuple(indices), tuple(modes), str(sample),
                                               str(lhs), str(rhs)))

        report.failures.sort(key=lambda failure: (failure.v, str(failure.indices), failure.modes, failure.sample))
        report.flags = flags
        report.worst_flag = self.get_worst_flag_level(flags)
        log.info("relation %s on n=%d d=%d: %d checks, %d failures",
                 relation, self.n, self.d, report.checks, len(report.failures))
        return report

    def verify_all(self, relations=RELATIONS):
        return [self.verify(relation) for relation in relations]


def verify_relation(rel, n, d, mode_window=None, samples=None, seed=None, threads=None):
    return RelationVerifier(n, d, mode_window, samples, seed, threads).verify(rel)
