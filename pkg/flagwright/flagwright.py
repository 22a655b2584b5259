'''
Front-facing text and JSON formats for every value type: QRat, Laurent
polynomials, compositions, matrices, graded classes and Drinfeld data.
'''
import json
import logging
from fractions import Fraction

from sympy import Add, Symbol, expand, sympify

from flagwright.algebra.laurent import LaurentPoly
from flagwright.algebra.qcoeff import QRat, eval_q
from flagwright.combinatorics.flagcomb import Composition, IntMatrix
from flagwright.regex import allregex

log = logging.getLogger(__name__)


def _parse_q_poly(text):
    text = text.strip()
    if text == '0':
        return QRat(0)
    terms = {}
    for sign, coeff, exp in allregex.signed_q_term_regex.findall(text):
        value = Fraction(coeff) * (-1 if sign == '-' else 1)
        terms[int(exp)] = terms.get(int(exp), Fraction(0)) + value
    return QRat.from_terms(terms)


def parse_qrat(text):
    '''
    Reads the printed form (num)/(den) of a QRat.
    '''
    match = allregex.qrat_regex.match(text)
    if match is None:
        raise ValueError("not a QRat: {!r}".format(text))
    return _parse_q_poly(match.group(1)) / _parse_q_poly(match.group(2))


def parse_poly(text, d=None):
    '''
    Reads the printed form of a LaurentPoly. The number of variables is taken
    from the printed monomials unless d is given; '0' needs d.
    '''
    if allregex.poly_regex.match(text) is None:
        raise ValueError("not a Laurent polynomial: {!r}".format(text))
    if text.strip() == '0':
        if d is None:
            raise ValueError("the zero polynomial needs an explicit number of variables")
        return LaurentPoly.zero(d)
    terms = []
    for match in allregex.poly_term_regex.finditer(text):
        coeff = parse_qrat(match.group(1))
        powers = {}
        for index, exp in allregex.variable_power_regex.findall(match.group(2) or ''):
            powers[int(index)] = powers.get(int(index), 0) + int(exp)
        terms.append((coeff, powers))
    width = max([max(powers) for _, powers in terms if powers] + [0])
    d = width if d is None else d
    if width > d:
        raise ValueError("x{} appears in a polynomial in {} variables".format(width, d))
    poly = LaurentPoly.zero(d)
    for coeff, powers in terms:
        mono = tuple(powers.get(index, 0) for index in range(1, d + 1))
        poly = poly + LaurentPoly.monomial(d, mono, coeff)
    return poly


def parse_expression(text, d):
    '''
    Reads a friendly expression such as 'x1 + q*x2**-1' or '(q^2-1)*x1*x2'
    in the variables x1..xd with rational-function coefficients in q.
    '''
    q = Symbol('q')
    variables = [Symbol('x{}'.format(index)) for index in range(1, d + 1)]
    scope = {'q': q}
    scope.update({str(x): x for x in variables})
    try:
        expr = sympify(text.replace('^', '**'), locals=scope)
    except Exception as err:
        raise ValueError("cannot parse {!r}: {}".format(text, err))
    stray = expr.free_symbols - set(variables) - {q}
    if stray:
        raise ValueError("unknown symbols {} in {!r}".format(sorted(str(s) for s in stray), text))
    poly = LaurentPoly.zero(d)
    for term in Add.make_args(expand(expr)):
        exps = []
        for x in variables:
            term, exp = term.as_coeff_exponent(x)
            if not exp.is_integer:
                raise ValueError("non-integer power of {} in {!r}".format(x, text))
            exps.append(int(exp))
        if term.free_symbols - {q}:
            raise ValueError("{!r} is not a Laurent polynomial in x1..x{}".format(text, d))
        poly = poly + LaurentPoly.monomial(d, exps, QRat.from_expr(term))
    return poly


def read_poly(text, d):
    '''
    Accepts either the printed form or a friendly expression.
    '''
    if allregex.poly_regex.match(text) is not None:
        return parse_poly(text, d)
    return parse_expression(text, d)


def specialize_poly(poly, t):
    '''
    {monomial: Fraction} after q = t.
    '''
    return {mono: eval_q(coeff, t) for mono, coeff in poly.sorted_terms()}


def poly_to_json(poly, t=None):
    if t is None:
        return str(poly)
    return [{'monomial': list(mono), 'coefficient': str(value)}
            for mono, value in specialize_poly(poly, t).items() if value]


def parse_composition(text):
    if allregex.natural_list_regex.match(text) is None:
        raise ValueError("not a composition: {!r}".format(text))
    return Composition(int(part) for part in allregex.list_sep_regex.split(text.strip()))


def parse_rationals(text):
    if allregex.rational_list_regex.match(text) is None:
        raise ValueError("not a list of rationals: {!r}".format(text))
    return [Fraction(part) for part in allregex.list_sep_regex.split(text.strip())]


def matrix_to_json(matrix):
    return matrix.to_json()


def parse_matrix(text):
    try:
        rows = json.loads(text)
    except ValueError:
        raise ValueError("matrix must be a JSON list of rows: {!r}".format(text))
    return IntMatrix(rows)


def graded_class_to_json(graded, t=None):
    return {'matrix': matrix_to_json(graded.matrix), 'polynomial': poly_to_json(graded.value, t)}


def drinfeld_to_json(polys):
    return {'polys': polys.to_json(), 'degrees': polys.degrees()}


def dumps(payload):
    return json.dumps(payload, sort_keys=True, indent=2)


def _plain(value):
    if isinstance(value, str):
        return value
    if isinstance(value, list):
        return "[" + ", ".join(_plain(entry) for entry in value) + "]"
    if isinstance(value, dict):
        return ", ".join("{}={}".format(key, _plain(value[key])) for key in sorted(value))
    return json.dumps(value)


def _is_matrix(value):
    return (isinstance(value, list) and bool(value) and
            all(isinstance(row, list) and all(isinstance(entry, int) and not isinstance(entry, bool)
                                              for entry in row) for row in value))


def _matrix_lines(matrix):
    width = max(len(str(entry)) for row in matrix for entry in row) if any(matrix) else 1
    return [" ".join(str(entry).rjust(width) for entry in row) for row in matrix]


def text_table(header, rows):
    '''
    Left-justified columns with a dashed rule under the header.
    '''
    cells = [[str(cell) for cell in header]] + [[_plain(cell) for cell in row] for row in rows]
    widths = [max(len(row[col]) for row in cells) for col in range(len(header))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines)


def _dict_table(entries):
    columns = sorted(set().union(*entries))
    return text_table(columns, [[entry.get(column, '') for column in columns] for entry in entries])


def _render_reports(payload):
    header = ('relation', 'n', 'd', 'window', 'samples', 'checks', 'failures', 'worst flag')
    rows = [(report['relation'], report['n'], report['d'], report['window'], report['samples'],
             report['checks'], len(report['failures']), report['worst_flag'])
            for report in payload['reports']]
    lines = [text_table(header, rows)]
    for report in payload['reports']:
        for failure in report['failures']:
            lines.append("({}) v={} indices={} modes={}: {} != {}".format(
                report['relation'], failure['v'], failure['indices'], failure['modes'],
                failure['lhs'], failure['rhs']))
    lines.append("passed: {}".format(_plain(payload['passed'])))
    return "\n".join(lines)


def render_text(payload):
    '''
    Plain-text rendering of a command payload for reading at a terminal.
    The JSON form from dumps stays the one to parse.
    '''
    if 'reports' in payload:
        return _render_reports(payload)
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if _is_matrix(value):
            lines.append("{}:".format(key))
            lines.extend("  " + line for line in _matrix_lines(value))
        elif isinstance(value, list) and value and all(_is_matrix(entry) for entry in value):
            lines.append("{}:".format(key))
            for index, matrix in enumerate(value, 1):
                lines.append("  [{}]".format(index))
                lines.extend("    " + line for line in _matrix_lines(matrix))
        elif isinstance(value, list) and value and all(isinstance(entry, dict) for entry in value):
            lines.append("{}:".format(key))
            lines.extend("  " + line for line in _dict_table(value).splitlines())
        else:
            lines.append("{}: {}".format(key, _plain(value)))
    return "\n".join(lines)
