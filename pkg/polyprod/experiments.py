"""
Desk-scale experiments

Each registered experiment expands its bounds into independent instances,
checks every instance and collects the outcomes in an
:class:`ExperimentReport`. Instances run in this process or, with
``workers > 1``, on a process pool; records are sorted after collection so
reports do not depend on scheduling.

"""
import collections
from concurrent import futures
import itertools
import json
import logging
import time

from polyprod import formats
from polyprod import generators
from polyprod import graph as graphs
from polyprod import planar
from polyprod import products
from polyprod import recognition
from polyprod import utils

LOGGER = logging.getLogger(__name__)

PASS = 'PASS'
FAIL = 'FAIL'

Instance = collections.namedtuple('Instance', ['name', 'check', 'args'])


class ExperimentReport(object):
    """The outcome of one experiment run

    :param str experiment: The experiment name
    :param dict parameters: The bounds in force
    :param list records: One dict per instance

    """
    def __init__(self, experiment, parameters, records, elapsed=None):
        self.experiment = experiment
        self.parameters = dict(parameters)
        self.records = sorted(records, key=lambda r: (r['certificate'],
                                                      r['instance']))
        self.elapsed = elapsed

    def __repr__(self):
        return '<polyprod.ExperimentReport %s %s instances=%s>' % (
            self.experiment, self.verdict, len(self.records))

    @property
    def violations(self):
        return [r['instance'] for r in self.records
                if not r['ok'] and not r.get('skipped')]

    @property
    def skipped(self):
        return [r['instance'] for r in self.records if r.get('skipped')]

    @property
    def verdict(self):
        return FAIL if self.violations else PASS

    @property
    def budget_exceeded(self):
        return bool(self.skipped)

    def as_dict(self, timing=False):
        """Return the report as a dict, omitting the elapsed time unless
        `timing` is set

        :param bool timing: Include ``elapsed``
        :rtype: dict

        """
        result = {
            'budget_exceeded': self.budget_exceeded,
            'experiment': self.experiment,
            'parameters': self.parameters,
            'records': self.records,
            'skipped': self.skipped,
            'verdict': self.verdict,
            'violations': self.violations
        }
        if timing:
            result['elapsed'] = self.elapsed
        return result

    def to_json(self, timing=False):
        return json.dumps(self.as_dict(timing), indent=2, sort_keys=True)


def _certificate(graph):
    try:
        return graphs.canonical_form(graph)
    except utils.SearchBudgetExceeded:
        return 'g6:' + formats.emit_graph6(graph)


def _run_instance(instance, cap):
    """Check one instance, turning budget overruns into skipped records"""
    utils.set_search_cap(cap)
    record = {'instance': instance.name}
    try:
        graph, checks, detail = instance.check(*instance.args)
    except utils.SearchBudgetExceeded as error:
        LOGGER.warning('Instance %s skipped: %s', instance.name, error)
        record.update({'certificate': '', 'checks': {}, 'ok': False,
                       'skipped': True, 'detail': {'error': str(error)}})
        return record
    record.update({'certificate': _certificate(graph), 'checks': checks,
                   'ok': all(checks.values()), 'detail': detail})
    if not record['ok']:
        LOGGER.info('Instance %s failed: %r', instance.name, checks)
    return record


def _polyhedral_cover(factor):
    """Return the cover of `factor` and whether it is a polyhedron"""
    cover = products.cover(factor).graph
    return cover, planar.is_polyhedron(cover)


def _not_polyhedral(cover):
    LOGGER.info('Cover %r is not a polyhedron', cover)
    return cover, {'cover_polyhedral': False}, {
        'reason': 'cover_not_polyhedral'}


def _bounds_checks(cover):
    degree3, quadrilaterals = products.polyhedral_bounds(cover)
    return ({'eight_degree_3': degree3 >= 8,
             'six_quadrilaterals': quadrilaterals >= 6},
            {'degree_3': degree3, 'quadrilaterals': quadrilaterals})


def generator_factors(bounds):
    """Return ``(name, J)`` for every generator output in the bounds. Checks
    over these factors fail an instance whose cover is not a polyhedron.

    :param dict bounds: ``max_N``, ``max_M``, ``max_m``, ``max_moves``
    :rtype: list

    """
    factors = []
    for N in range(1, bounds['max_N'] + 1):
        for M in range(1, bounds['max_M'] + 1):
            factors.append(('stacked_cube_factor(%s,%s)' % (N, M),
                            generators.stacked_cube_factor(N, M)[0]))
            if M >= 2:
                factors.append(('odd_prism_factor(%s,%s)' % (N, M),
                                generators.odd_prism_factor(N, M)))
    for m in range(2, bounds['max_m'] + 1):
        for i in range(1, m):
            factors.append(('quad_factor(%s,%s)' % (m, i),
                            generators.quad_factor(m, i)[0]))
    for script in generators.t3333_scripts(bounds['max_moves']):
        factors.append(('t3333(%s,%s)' % (''.join(script.moves) or '-',
                                          script.final),
                        generators.t3333_build(script)))
    factors.append(('cubic_build(cube)', generators.cubic_build(
        generators.cube_build_demo())[0]))
    return factors


def check_cancellation(factor):
    """Check cancellation over planar roots: a planar factor must be the
    only planar graph whose cover is its cover. Non-planar roots of a
    planar factor are reported but do not count against it."""
    cover, polyhedral = _polyhedral_cover(factor)
    if not polyhedral:
        return _not_polyhedral(cover)
    roots = recognition.kronecker_roots(cover)
    planar_roots = [root for root in roots if planar.is_planar(root.graph)]
    checks = {
        'cover_polyhedral': True,
        'root_is_factor': any(graphs.is_isomorphic(root.graph, factor)
                              for root in roots)
    }
    if planar.is_planar(factor):
        checks['one_planar_root'] = len(planar_roots) == 1 and \
            graphs.is_isomorphic(planar_roots[0].graph, factor)
    return cover, checks, {'roots': len(roots),
                           'planar_roots': len(planar_roots)}


def check_stacked_rule(n, m):
    graph = generators.stacked_prism(n, m)
    has_root = len(recognition.kronecker_roots(graph)) > 0
    expected = n % 4 == 2 or (n % 4 == 0 and m % 2 == 0)
    return graph, {'parity_rule': has_root == expected}, {
        'n': n, 'm': m, 'has_root': has_root}


def check_cc_rule(n, m, expected):
    graph = generators.stacked_prism(n, m)
    forms = recognition.cartesian_forms(graph)
    checks = {'variant_count': len(forms) == expected}
    if expected == 2:
        checks['ladder_base'] = len(forms.prisms) == 1 and \
            graphs.is_isomorphic(forms.prisms[0].base, generators.ladder(m))
    return graph, checks, {'forms': forms.describe()}


def check_triple(m):
    graph = generators.stacked_prism(4, 2 * m)
    forms = recognition.cartesian_forms(graph)
    roots = recognition.kronecker_roots(graph)
    factor = generators.stacked_cube_factor(1, m)[0]
    return graph, {
        'stacked': forms.stacked == [recognition.StackedPrism(4, 2 * m)],
        'prism_over_ladder': len(forms.prisms) == 1 and graphs.is_isomorphic(
            forms.prisms[0].base, generators.ladder(2 * m)),
        'one_root': len(roots) == 1 and
        graphs.is_isomorphic(roots[0].graph, factor)
    }, {'forms': forms.describe(), 'roots': len(roots)}


def check_bounds(factor):
    cover, polyhedral = _polyhedral_cover(factor)
    if not polyhedral:
        return _not_polyhedral(cover)
    checks, detail = _bounds_checks(cover)
    checks['cover_polyhedral'] = True
    return cover, checks, detail


def four_triangle_pattern(triangles):
    """Return whether there are four triangles, one of them sharing an edge
    with each of the others and any two of the others meeting in a single
    vertex

    :param list triangles: Vertex walks of the triangular faces
    :rtype: bool

    """
    sets = [frozenset(walk) for walk in triangles]
    if len(sets) != 4:
        return False
    for index, hub in enumerate(sets):
        others = sets[:index] + sets[index + 1:]
        if all(len(hub & other) == 2 for other in others) and \
                all(len(first & second) == 1
                    for first, second in itertools.combinations(others, 2)):
            return True
    return False


def check_t3333(script):
    factor = generators.t3333_build(script)
    cover = products.cover(factor).graph
    p = cover.n
    condition = recognition.classify_odd_faces(factor)
    triangles = [w for w in planar.planar_embed(factor).faces().walks
                 if len(w) == 3]
    return factor, {
        'order': factor.n % 3 == 1 and factor.n == (
            7 if script.final == 'F1' else 10) + 3 * len(script.moves),
        'condition_3': condition.tag == 'C3',
        'four_triangles': four_triangle_pattern(triangles),
        'cover_sequence': graphs.degree_sequence(cover) ==
        graphs.DegreeSequence([4] * (p - 8) + [3] * 8)
    }, {'order': factor.n,
        'cover_sequence': str(graphs.degree_sequence(cover))}


def check_quad(m, i):
    factor, witness, quad = generators.quad_factor(m, i)
    cover = products.cover(factor).graph
    return cover, {
        'witness': recognition.verify_quad_witness(factor, witness, quad),
        'quadrangulation': planar.is_quadrangulation(cover),
        'polyhedron': planar.is_polyhedron(cover),
        'witness_cover': graphs.is_isomorphic(
            recognition.witness_cover(factor, witness), cover)
    }, {'r': list(quad.r), 's': list(quad.s)}


CUBIC_MUTATIONS = ('two_splits', 'split_parity', 'order', 'non_bipartite',
                   'simple', 'even_region')


def _mutated_spec(clause):
    spec = generators.cube_build_demo()
    first, _second, third, _fourth = spec.region
    if clause == 'two_splits':
        return spec._replace(splits={first: 2})
    elif clause == 'split_parity':
        return spec._replace(splits={first: 1, third: 1})
    elif clause == 'order':
        return spec._replace(pairing=((0, 1), (2, 3)))
    elif clause == 'non_bipartite':
        return spec._replace(pairing=((0, 3), (1, 2)),
                             order_variant=recognition.ORD1)
    elif clause == 'simple':
        return spec._replace(pairing=((0, 1), (3, 2)),
                             order_variant=recognition.ORD1)
    return spec._replace(
        j2=graphs.Multigraph.from_graph(generators.tetrahedron()),
        region=(0, 1, 3))


def check_cubic():
    factor, witness = generators.cubic_build(generators.cube_build_demo())
    cover = products.cover(factor).graph
    checks = {
        'witness': recognition.verify_factor_witness(factor, witness)[0],
        'cubic_cover': set(graphs.degree_sequence(cover)) == {3},
        'polyhedron': planar.is_polyhedron(cover)
    }
    for clause in CUBIC_MUTATIONS:
        try:
            generators.cubic_build(_mutated_spec(clause))
        except generators.SpecViolation as error:
            checks['rejects_%s' % clause] = error.clause == clause
        else:
            checks['rejects_%s' % clause] = False
    expanded = generators.quad_expand(generators.stacked_prism(5, 2),
                                      (0, 2, 3, 1))
    checks['expansion_keeps_condition'] = \
        recognition.classify_odd_faces(expanded).tag == 'C1'
    return cover, checks, {'order': factor.n}


def check_dou(spec):
    H = generators.dou_H(spec)
    J = generators.dou_J(H)
    return H, {'prism_is_cover': graphs.is_isomorphic(
        products.prism(H), products.cover(J).graph)}, {
            'ell': spec.ell, 'chords': [list(c) for c in spec.chords]}


def check_ingest(factor):
    condition = recognition.classify_odd_faces(factor)
    cover = products.cover(factor).graph
    polyhedral = planar.is_polyhedron(cover)
    checks = {'characterization': (condition.tag != 'none') == polyhedral}
    if polyhedral and planar.is_polyhedron(factor) and \
            set(graphs.degree_sequence(cover)) == {3}:
        checks['at_most_four_odd'] = len(condition.odd_faces) <= 4
    if factor.n <= 10:
        witness = recognition.find_factor_witness(factor)
        if witness is not None:
            checks['witness_sound'] = polyhedral
    return factor, checks, {'condition': condition.tag}


def _cancellation_instances(bounds):
    return [Instance(name, check_cancellation, (graph,))
            for name, graph in generator_factors(bounds)]


def _stacked_rule_instances(bounds):
    return [Instance('C%s x P%s' % (n, m), check_stacked_rule, (n, m))
            for n in range(4, bounds['max_n_cycle'] + 1, 2)
            for m in range(2, bounds['max_m_path'] + 1)]


def _cc_rule_instances(bounds):
    instances = [Instance('C4 x P%s' % m, check_cc_rule, (4, m, 2))
                 for m in range(3, bounds['max_m_path'] + 1)]
    for n, m in ((6, 3), (8, 4), (4, 2)):
        instances.append(Instance('C%s x P%s' % (n, m), check_cc_rule,
                                  (n, m, 1)))
    return instances


def _triple_instances(bounds):
    return [Instance('C4 x P%s' % (2 * m), check_triple, (m,))
            for m in range(2, bounds['max_m'] + 1)]


def _bounds_instances(bounds):
    return [Instance(name, check_bounds, (graph,))
            for name, graph in generator_factors(bounds)]


def _t3333_instances(bounds):
    return [Instance('%s/%s' % (''.join(s.moves) or '-', s.final),
                     check_t3333, (s,))
            for s in generators.t3333_scripts(bounds['max_moves'])]


def _quad_instances(bounds):
    return [Instance('quad_factor(%s,%s)' % (m, i), check_quad, (m, i))
            for m in range(2, bounds['max_m'] + 1) for i in range(1, m)]


def _cubic_instances(bounds):
    return [Instance('cube_build_demo', check_cubic, ())]


def _dou_instances(bounds):
    return [Instance('ell=%s %s' % (spec.ell, list(spec.chords)), check_dou,
                     (spec,))
            for ell in range(2, bounds['max_ell'] + 1)
            for spec in generators.dou_specs(ell)]


def _builtin_corpus():
    corpus = [('tetrahedron', generators.tetrahedron()),
              ('cube', generators.cube()),
              ('prism C5', generators.stacked_prism(5, 2)),
              ('c0_representative', generators.c0_representative()),
              ('c2_representative', generators.c2_representative()),
              ('cycle C6', generators.cycle(6)),
              ('ladder F8', generators.ladder(4))]
    for script in generators.t3333_scripts(1):
        corpus.append(('t3333 %s/%s' % (''.join(script.moves) or '-',
                                        script.final),
                       generators.t3333_build(script)))
    return corpus


def _ingest_instances(bounds):
    if bounds.get('input'):
        with open(bounds['input']) as handle:
            corpus = [('line %s' % number, graph) for number, graph
                      in formats.iter_graph6(handle)]
    else:
        corpus = _builtin_corpus()
    return [Instance(name, check_ingest, (graph,)) for name, graph in corpus
            if graph.n <= bounds['max_n'] and planar.is_planar(graph) and
            graphs.is_connected(graph)]


_FACTOR_BOUNDS = {'max_N': 3, 'max_M': 3, 'max_m': 6, 'max_moves': 3}

EXPERIMENTS = collections.OrderedDict([
    ('cancellation', (_cancellation_instances, dict(_FACTOR_BOUNDS))),
    ('stacked_rule', (_stacked_rule_instances,
                      {'max_n_cycle': 12, 'max_m_path': 6})),
    ('cc_rule', (_cc_rule_instances, {'max_m_path': 6})),
    ('triple_expressibility', (_triple_instances, {'max_m': 3})),
    ('bounds_check', (_bounds_instances, dict(_FACTOR_BOUNDS))),
    ('t3333_census', (_t3333_instances, {'max_moves': 3})),
    ('quad_census', (_quad_instances, {'max_m': 8})),
    ('cubic_census', (_cubic_instances, {})),
    ('dou_roundtrip', (_dou_instances, {'max_ell': 6})),
    ('ingest_classify', (_ingest_instances, {'input': None, 'max_n': 30}))
])


def run_experiment(name, bounds=None, workers=1, cap=None):
    """Run a registered experiment

    :param str name: The experiment name
    :param dict bounds: Overrides merged over the experiment's defaults
    :param int workers: Process pool size, 1 runs in this process
    :param int cap: The search cap for every instance, defaults to the
        process search cap
    :rtype: ExperimentReport
    :raises: UnknownExperiment

    """
    if name not in EXPERIMENTS:
        raise UnknownExperiment(name)
    expand, defaults = EXPERIMENTS[name]
    merged = dict(defaults)
    merged.update(bounds or {})
    if cap is None:
        cap = utils.search_cap()
    previous = utils.search_cap()
    start = time.time()
    try:
        utils.set_search_cap(cap)
        instances = expand(merged)
        LOGGER.debug('Experiment %s expanded to %s instances', name,
                     len(instances))
        if workers > 1:
            with futures.ProcessPoolExecutor(max_workers=workers) as pool:
                records = list(pool.map(_run_instance, instances,
                                        [cap] * len(instances)))
        else:
            records = [_run_instance(instance, cap) for instance in instances]
    finally:
        utils.set_search_cap(previous)
    report = ExperimentReport(name, merged, records, time.time() - start)
    LOGGER.info('Experiment %s: %s (%s instances, %s skipped)', name,
                report.verdict, len(report.records), len(report.skipped))
    return report


class UnknownExperiment(utils.PolyprodException):
    """Raised when no experiment is registered under a name"""
    def __init__(self, name):
        super(UnknownExperiment, self).__init__()
        self.name = name

    def __str__(self):
        return 'Unknown experiment %r, expected one of %s' % (
            self.name, ', '.join(EXPERIMENTS))
