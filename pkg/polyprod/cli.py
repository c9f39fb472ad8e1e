"""
The ``polyprod`` command line

Exit codes: 0 when a check passes, 1 when it fails or an experiment reports
a violation, 2 for usage and input errors, 3 when a search budget is
exceeded, including experiments that skipped instances over the cap.

"""
import argparse
import json
import logging
import sys

from polyprod import catalog
from polyprod import experiments
from polyprod import formats
from polyprod import generators
from polyprod import graph as graphs
from polyprod import planar
from polyprod import products
from polyprod import recognition
from polyprod import utils
from polyprod import version

LOGGER = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CHECKS = {
    'bipartite': lambda g: graphs.bipartition(g) is not None,
    'outerplanar': planar.is_outerplanar,
    'planar': planar.is_planar,
    'polyhedron': planar.is_polyhedron,
    'quadrangulation': planar.is_quadrangulation
}


class UsageError(utils.PolyprodException):
    """Raised for command line arguments that cannot be interpreted"""
    def __init__(self, reason):
        super(UsageError, self).__init__()
        self.reason = reason

    def __str__(self):
        return self.reason


def _key_values(pairs):
    result = {}
    for pair in pairs or []:
        key, separator, value = pair.partition('=')
        if not separator:
            raise UsageError('expected key=value, got %r' % pair)
        try:
            result[key] = int(value)
        except ValueError:
            result[key] = value
    return result


def load_graph(argument, stdin=None):
    """Read a graph argument: graph6 or JSON text, ``-`` for stdin or
    ``@path`` for a file

    :param str argument: The argument
    :rtype: Graph
    :raises: MalformedGraph6, MalformedJson, UsageError

    """
    if argument == '-':
        text = (stdin or sys.stdin).read()
    elif argument.startswith('@'):
        try:
            with open(argument[1:]) as handle:
                text = handle.read()
        except IOError as error:
            raise UsageError('cannot read %s: %s' % (argument[1:], error))
    else:
        text = argument
    return formats.read_graph(text)


def _generate(args):
    params = _key_values(args.param)
    family = args.family
    if family in generators.FAMILIES:
        return generators.basic(family, **params), None
    try:
        if family == 'stacked_cube_factor':
            return generators.stacked_cube_factor(params['N'],
                                                  params['M'])[0], None
        elif family == 'odd_prism_factor':
            return generators.odd_prism_factor(params['N'],
                                               params['M']), None
        elif family == 'quad_factor':
            return generators.quad_factor(params['m'], params['i'])[0], None
        elif family == 't3333':
            moves = tuple(m for m in str(params.get('moves', '')).split(',')
                          if m)
            return generators.t3333_build(generators.T3333Script(
                moves, params.get('final', 'F1'))), None
        elif family == 'cubic_build':
            return generators.cubic_build(
                generators.cube_build_demo())[0], None
        elif family == 'dou_H':
            chords = tuple(tuple(int(v) for v in chord.split('-'))
                           for chord in str(params.get('chords', ''))
                           .split(',') if chord)
            return generators.dou_H(generators.DouHSpec(params['ell'],
                                                        chords)), None
        elif family == 'c0_representative':
            return generators.c0_representative(), None
        elif family == 'c2_representative':
            return generators.c2_representative(), None
    except KeyError as error:
        raise UsageError('missing parameter %s for %s' % (error, family))
    except ValueError as error:
        raise UsageError(str(error))
    raise UsageError('unknown family %r' % family)


def _emit(args, graph, labeling=None):
    args.out.write(formats.write_graph(graph, args.format, labeling) + '\n')


def _write_report(args, document):
    if args.report:
        with open(args.report, 'w') as handle:
            json.dump(document, handle, indent=2, sort_keys=True)
            handle.write('\n')


def command_gen(args):
    graph, labeling = _generate(args)
    _emit(args, graph, labeling)
    return EXIT_PASS


def command_product(args):
    first, second = load_graph(args.first), load_graph(args.second)
    build = products.kronecker if args.kind == 'kron' else products.cartesian
    product = build(first, second)
    _emit(args, product.graph, product.labeling)
    return EXIT_PASS


def command_cover(args):
    product = products.cover(load_graph(args.graph))
    _emit(args, product.graph, product.labeling)
    return EXIT_PASS


def command_check(args):
    graph = load_graph(args.graph)
    result = CHECKS[args.what](graph)
    args.out.write('%s: %s\n' % (args.what, 'yes' if result else 'no'))
    _write_report(args, {'check': args.what, 'result': result})
    return EXIT_PASS if result else EXIT_FAIL


def command_classify(args):
    condition = recognition.classify_odd_faces(load_graph(args.graph))
    args.out.write('%s\n' % condition.tag)
    for walk in condition.odd_faces:
        args.out.write('odd face %s\n' % ' '.join(str(v) for v in walk))
    if condition.shared_vertex is not None:
        args.out.write('shared vertex %s\n' % condition.shared_vertex)
    for cut in condition.cuts:
        args.out.write('2-cut %s %s\n' % (cut.u, cut.v))
    _write_report(args, {
        'condition': condition.tag,
        'odd_faces': [list(w) for w in condition.odd_faces],
        'shared_vertex': condition.shared_vertex,
        'cuts': [[cut.u, cut.v] for cut in condition.cuts],
        'interpretations': recognition.INTERPRETATIONS})
    return EXIT_FAIL if condition.tag == 'none' else EXIT_PASS


def command_roots(args):
    roots = recognition.kronecker_roots(load_graph(args.graph),
                                        planar_only=args.planar)
    for root in roots:
        _emit(args, root.graph)
    _write_report(args, {'roots': [formats.emit_graph6(r.graph)
                                   for r in roots]})
    return EXIT_PASS if len(roots) else EXIT_FAIL


def command_cartesian_forms(args):
    forms = recognition.cartesian_forms(load_graph(args.graph))
    for text in forms.describe():
        args.out.write(text + '\n')
    _write_report(args, {'forms': forms.describe()})
    return EXIT_PASS if len(forms) else EXIT_FAIL


def command_iso(args):
    result = graphs.is_isomorphic(load_graph(args.first),
                                  load_graph(args.second))
    args.out.write('isomorphic: %s\n' % ('yes' if result else 'no'))
    return EXIT_PASS if result else EXIT_FAIL


def command_faces(args):
    graph = load_graph(args.graph)
    embedding = planar.planar_embed(graph)
    if embedding is None:
        raise planar.NonPlanarInput(graph)
    face_set = embedding.faces()
    for walk in face_set.walks:
        args.out.write(' '.join(str(v) for v in walk) + '\n')
    stats = planar.face_stats(face_set)
    args.out.write('p=%s q=%s r=%s r_k=%s\n' % (
        stats.p, stats.q, stats.r,
        ','.join('%s:%s' % item for item in sorted(stats.r_k.items()))))
    return EXIT_PASS


def command_experiment(args):
    bounds = _key_values(args.bound)
    if args.input:
        bounds['input'] = args.input
    cap = args.max_n if args.max_n else None
    report = experiments.run_experiment(args.name, bounds, args.workers, cap)
    args.out.write('%s: %s (%s instances, %s violations, %s skipped)\n' % (
        report.experiment, report.verdict, len(report.records),
        len(report.violations), len(report.skipped)))
    _write_report(args, report.as_dict(args.timing))
    if report.verdict != experiments.PASS:
        return EXIT_FAIL
    return EXIT_BUDGET if report.budget_exceeded else EXIT_PASS


def command_catalog(args):
    if args.out_path:
        entries = catalog.write_catalog(args.out_path)
    else:
        entries = catalog.build_catalog()
        args.out.write(catalog.dumps(entries) + '\n')
    LOGGER.info('Catalog has %s entries', len(entries))
    return EXIT_PASS


def build_parser():
    parser = argparse.ArgumentParser(
        prog='polyprod',
        description='Construct and recognize polyhedral graph products')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + version)
    parser.add_argument('--format', choices=('g6', 'json', 'dot'),
                        default='g6', help='Graph output format')
    parser.add_argument('--max-n', type=int, dest='max_n',
                        help='Vertex cap for exhaustive searches')
    parser.add_argument('--report', help='Write a JSON report to this path')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='Log at DEBUG level')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    sub = commands.add_parser('gen', help='Build a family member')
    sub.add_argument('family')
    sub.add_argument('--param', action='append', metavar='KEY=VALUE')
    sub.set_defaults(handler=command_gen)

    sub = commands.add_parser('product', help='Product of two graphs')
    sub.add_argument('kind', choices=('kron', 'cart'))
    sub.add_argument('first')
    sub.add_argument('second')
    sub.set_defaults(handler=command_product)

    sub = commands.add_parser('cover', help='The Kronecker cover J x K2')
    sub.add_argument('graph')
    sub.set_defaults(handler=command_cover)

    sub = commands.add_parser('check', help='Test a graph property')
    sub.add_argument('graph')
    sub.add_argument('--what', choices=sorted(CHECKS), default='polyhedron')
    sub.set_defaults(handler=command_check)

    sub = commands.add_parser('classify', help='Odd-face condition of J')
    sub.add_argument('graph')
    sub.set_defaults(handler=command_classify)

    sub = commands.add_parser('roots', help='Kronecker roots of G')
    sub.add_argument('graph')
    sub.add_argument('--planar', action='store_true',
                     help='Only planar roots, among which cancellation '
                          'holds')
    sub.set_defaults(handler=command_roots)

    sub = commands.add_parser('cartesian-forms',
                              help='Stacked prism and prism forms of G')
    sub.add_argument('graph')
    sub.set_defaults(handler=command_cartesian_forms)

    sub = commands.add_parser('iso', help='Isomorphism test')
    sub.add_argument('first')
    sub.add_argument('second')
    sub.set_defaults(handler=command_iso)

    sub = commands.add_parser('faces', help='Face walks and counts')
    sub.add_argument('graph')
    sub.set_defaults(handler=command_faces)

    sub = commands.add_parser('experiment', help='Run an experiment')
    sub.add_argument('name', choices=list(experiments.EXPERIMENTS))
    sub.add_argument('--bound', action='append', metavar='KEY=VALUE')
    sub.add_argument('--input', help='graph6 stream for ingest_classify')
    sub.add_argument('--workers', type=int, default=1)
    sub.add_argument('--timing', action='store_true',
                     help='Include the elapsed time in the report')
    sub.set_defaults(handler=command_experiment)

    sub = commands.add_parser('catalog', help='Build the catalog')
    sub.add_argument('--out', dest='out_path', help='Write to this path')
    sub.set_defaults(handler=command_catalog)
    return parser


def main(argv=None, out=None):
    """Run the command line, returning the exit code

    :param list argv: Arguments, defaults to ``sys.argv[1:]``
    :param out: Output stream, defaults to stdout
    :rtype: int

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code
    args.out = out or sys.stdout
    logging.basicConfig(level=logging.DEBUG if args.verbose
                        else logging.WARNING, stream=sys.stderr)
    if args.max_n:
        utils.set_search_cap(args.max_n)
    try:
        return args.handler(args)
    except utils.SearchBudgetExceeded as error:
        LOGGER.error('%s', error)
        return EXIT_BUDGET
    except utils.PolyprodException as error:
        LOGGER.error('%s', error)
        return EXIT_USAGE
    except IOError as error:
        LOGGER.error('%s', error)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
