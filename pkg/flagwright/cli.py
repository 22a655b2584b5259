'''
Command-line front end. Every subcommand prints one JSON document with
sorted keys; exit status is 0 when all checks pass, 1 on a failed check and
2 on usage errors.
'''
import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from flagwright import settings
from flagwright.algebra.laurent import LaurentPoly
from flagwright.algebra.qcoeff import eval_q, gauss_p, guard_specialization, qint
from flagwright.combinatorics import drinfeld, flagcomb
from flagwright.flagwright import (drinfeld_to_json, dumps, graded_class_to_json, matrix_to_json,
                                   parse_composition, parse_matrix, parse_rationals, poly_to_json,
                                   read_poly, render_text)
from flagwright.representation import convolution, polyrep
from flagwright.representation.relations import RELATIONS, RelationVerifier

log = logging.getLogger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    d: Optional[int] = None
    relations: List[str] = field(default_factory=lambda: list(RELATIONS))
    window: int = settings.DEFAULT_WINDOW
    samples: int = settings.DEFAULT_SAMPLES
    seed: int = settings.DEFAULT_SEED
    threads: Optional[int] = None
    at_q: Optional[str] = None
    output: Optional[str] = None
    output_format: str = 'json'
    options: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_args(cls, args):
        known = {'command', 'n', 'd', 'relations', 'window', 'samples', 'seed', 'threads', 'at_q', 'output',
                 'output_format'}
        values = {key: getattr(args, key) for key in known if getattr(args, key, None) is not None}
        if isinstance(values.get('relations'), str):
            values['relations'] = [rel.strip() for rel in values['relations'].split(',') if rel.strip()]
        options = {key: value for key, value in vars(args).items()
                   if key not in known and key not in ('verbose', 'quiet')}
        return cls(options=options, **values)


def _at_q(config):
    return None if config.at_q is None else guard_specialization(config.at_q)


def _graded(matrix, text):
    value = read_poly(text, matrix.d) if text else LaurentPoly.one(matrix.d)
    return convolution.GradedClass(matrix, value)


def run_verify(config):
    unknown = [rel for rel in config.relations if rel not in RELATIONS]
    if unknown:
        raise ValueError("unknown relations {}; expected letters from {}".format(unknown, ''.join(RELATIONS)))
    verifier = RelationVerifier(config.n, config.d, config.window, config.samples, config.seed, config.threads)
    reports = verifier.verify_all(config.relations)
    passed = all(report.passed for report in reports)
    payload = {'passed': passed, 'reports': [report.to_json() for report in reports]}
    return (EXIT_PASS if passed else EXIT_FAIL), payload


def run_compose(config):
    a, b = parse_matrix(config.options['a']), parse_matrix(config.options['b'])
    return EXIT_PASS, {'a': matrix_to_json(a), 'b': matrix_to_json(b),
                       'composition': matrix_to_json(flagcomb.compose(a, b))}


def run_decompose(config):
    c = parse_matrix(config.options['c'])
    factors = flagcomb.generator_decomposition(c)
    return EXIT_PASS, {'matrix': matrix_to_json(c), 'length': flagcomb.length(c),
                       'factors': [matrix_to_json(factor) for factor in factors]}


def run_star(config):
    opts = config.options
    t = _at_q(config)
    kind = opts['kind']
    if kind == 'diag':
        b = parse_matrix(opts['b'])
        v = parse_composition(opts['v'])
        f = read_poly(opts['f'], v.d) if opts.get('f') else LaurentPoly.one(v.d)
        result = convolution.star_diag(f, _graded(b, opts.get('g')), v)
    elif kind == 'elem':
        left = _graded(parse_matrix(opts['a']), opts.get('f'))
        right = _graded(parse_matrix(opts['b']), opts.get('g'))
        result = convolution.star_elem(left, right)
    else:
        v = parse_composition(opts['v'])
        a_size, b_size, i = opts['a_size'], opts['b_size'], opts['i']
        d = v.d + a_size + b_size
        f = read_poly(opts['f'], d) if opts.get('f') else LaurentPoly.one(d)
        g = read_poly(opts['g'], d) if opts.get('g') else LaurentPoly.one(d)
        result = convolution.star_grassmann(f, a_size, g, b_size, v, i, normalized=not opts.get('displayed'))
    return EXIT_PASS, graded_class_to_json(result, t)


def run_pushforward(config):
    opts = config.options
    matrix = parse_matrix(opts['a'])
    value = convolution.pushforward(_graded(matrix, opts.get('f')), opts['side'])
    return EXIT_PASS, {'matrix': matrix_to_json(matrix), 'side': opts['side'],
                       'polynomial': poly_to_json(value, _at_q(config))}


def run_drinfeld(config):
    opts = config.options
    jordan = drinfeld.JordanData(parse_composition(opts['lambda_']), config.n)
    param = drinfeld.SemisimpleParam(parse_rationals(opts['alpha']), opts['t'])
    polys = drinfeld.drinfeld_polys(jordan, param)
    payload = drinfeld_to_json(polys)
    payload['dual'] = list(drinfeld.dual_partition(jordan))
    payload['semisimple'] = [str(value) for value in drinfeld.build_semisimple(jordan, param)]
    if all(part < config.n for part in jordan.lam):
        payload['fundamental'] = [[part, str(value)] for part, value in drinfeld.fundamental_factors(jordan, param)]
    return EXIT_PASS, payload


def run_dual(config):
    jordan = drinfeld.JordanData(parse_composition(config.options['lambda_']), config.n)
    dual = drinfeld.dual_partition(jordan)
    from_matrix = drinfeld.dual_from_nilpotent(drinfeld.jordan_matrix(jordan), config.n)
    return (EXIT_PASS if dual == from_matrix else EXIT_FAIL), \
        {'lambda': list(jordan.lam), 'dual': list(dual), 'from_nilpotent': list(from_matrix)}


def run_qid(config):
    top = config.options['m_max']
    t = _at_q(config)
    checks = []
    for m in range(1, top + 1):
        checks.append({'identity': 'qint-recursion', 'm': m,
                       'holds': qint(m + 1) + qint(m - 1) == qint(2) * qint(m)})
        theta = polyrep.theta_sum(m)
        entry = {'identity': 'theta-sum', 'm': m, 'holds': theta == LaurentPoly.constant(m, qint(m))}
        if t is not None:
            entry['value'] = str(eval_q(qint(m), t))
        checks.append(entry)
    for a in range(1, top):
        for b in range(1, top - a + 1):
            entry = {'identity': 'gauss', 'a': a, 'b': b, 'value': str(gauss_p(a, b))}
            if t is not None:
                entry['value'] = str(eval_q(gauss_p(a, b), t))
            checks.append(entry)
    passed = all(check.get('holds', True) for check in checks)
    return (EXIT_PASS if passed else EXIT_FAIL), {'passed': passed, 'checks': checks}


COMMANDS = {
    'verify': run_verify,
    'compose': run_compose,
    'decompose': run_decompose,
    'star': run_star,
    'pushforward': run_pushforward,
    'drinfeld': run_drinfeld,
    'dual': run_dual,
    'qid': run_qid,
}


def run(config):
    '''
    Dispatches one RunConfig and returns (exit status, JSON payload).
    '''
    return COMMANDS[config.command](config)


def build_parser():
    parser = argparse.ArgumentParser(prog='flagwright',
                                     description="Exact computations in the polynomial representation "
                                                 "of the quantum loop algebra of gl(n).")
    parser.add_argument('--verbose', action='store_true')
    parser.add_argument('--quiet', action='store_true')
    parser.add_argument('--output', help="write the report here instead of stdout")
    parser.add_argument('--format', dest='output_format', choices=('json', 'text'), default='json',
                        help="json (sorted keys) or plain-text tables")
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', help="check relations (a)-(j) mode by mode")
    verify.add_argument('--n', type=int, required=True)
    verify.add_argument('--d', type=int, required=True)
    verify.add_argument('--relations', default=','.join(RELATIONS))
    verify.add_argument('--window', type=int, default=settings.DEFAULT_WINDOW)
    verify.add_argument('--samples', type=int, default=settings.DEFAULT_SAMPLES)
    verify.add_argument('--seed', type=int, default=settings.DEFAULT_SEED)
    verify.add_argument('--threads', type=int)

    compose = commands.add_parser('compose', help="generic composition of two matrices")
    compose.add_argument('--a', required=True)
    compose.add_argument('--b', required=True)

    decompose = commands.add_parser('decompose', help="factor a matrix into generators")
    decompose.add_argument('--c', required=True)

    star = commands.add_parser('star', help="convolution products with explicit formulas")
    kinds = star.add_subparsers(dest='kind', required=True)
    diag = kinds.add_parser('diag')
    diag.add_argument('--v', required=True)
    diag.add_argument('--b', required=True)
    diag.add_argument('--f')
    diag.add_argument('--g')
    elem = kinds.add_parser('elem')
    elem.add_argument('--a', required=True)
    elem.add_argument('--b', required=True)
    elem.add_argument('--f')
    elem.add_argument('--g')
    grassmann = kinds.add_parser('grassmann')
    grassmann.add_argument('--a-size', dest='a_size', type=int, required=True)
    grassmann.add_argument('--b-size', dest='b_size', type=int, required=True)
    grassmann.add_argument('--v', required=True)
    grassmann.add_argument('--i', type=int, default=1)
    grassmann.add_argument('--f')
    grassmann.add_argument('--g')
    grassmann.add_argument('--displayed', action='store_true',
                           help="use the unnormalized kernel (1 - q^2 x_t/x_s)/(1 - x_s/x_t)")
    for sub in (diag, elem, grassmann):
        sub.add_argument('--at-q', dest='at_q')

    pushforward = commands.add_parser('pushforward', help="push a class on A forward to one side")
    pushforward.add_argument('--a', required=True)
    pushforward.add_argument('--f')
    pushforward.add_argument('--side', type=int, choices=(1, 2), default=1)
    pushforward.add_argument('--at-q', dest='at_q')

    drin = commands.add_parser('drinfeld', help="Drinfeld polynomials of a nilpotent orbit")
    drin.add_argument('--lambda', dest='lambda_', required=True)
    drin.add_argument('--n', type=int, required=True)
    drin.add_argument('--alpha', required=True)
    drin.add_argument('--t', required=True)

    dual = commands.add_parser('dual', help="dual partition of a Jordan type")
    dual.add_argument('--lambda', dest='lambda_', required=True)
    dual.add_argument('--n', type=int, required=True)

    qid = commands.add_parser('qid', help="quantum integer identities")
    qid.add_argument('--m-max', dest='m_max', type=int, default=5)
    qid.add_argument('--at-q', dest='at_q')
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    config = RunConfig.from_args(args)
    try:
        status, payload = run(config)
    except flagcomb.NonUniqueMaximumError as err:
        log.error("%s: %s", config.command, err)
        status, payload = EXIT_FAIL, {'command': config.command, 'passed': False, 'error': str(err)}
    except (ValueError, ArithmeticError) as err:
        log.debug("%s failed", config.command, exc_info=True)
        sys.stderr.write("flagwright {}: {}\n".format(config.command, err))
        return EXIT_USAGE
    text = render_text(payload) if config.output_format == 'text' else dumps(payload)
    if config.output:
        with open(config.output, 'w') as handle:
            handle.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return status


if __name__ == '__main__':
    sys.exit(main())
