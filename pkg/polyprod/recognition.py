"""
Recognition of polyhedral products

Decides the odd-face conditions under which a planar graph has a polyhedral
Kronecker cover, verifies and searches factor witnesses, verifies
quadrangulation witnesses, extracts Kronecker roots of bipartite graphs and
detects the ways a polyhedron is a Cartesian product.

"""
import collections
import itertools
import logging

import networkx as nx

from polyprod import graph as graphs
from polyprod import planar
from polyprod import products
from polyprod import utils

LOGGER = logging.getLogger(__name__)

ORD1 = 'ord1'
ORD2 = 'ord2'
ORDER_VARIANTS = (ORD1, ORD2)

WITNESS_COLORING_LIMIT = 2 ** 20

INTERPRETATIONS = {
    'adjacent_regions': 'two odd regions are adjacent when they share an '
                        'edge',
    'condition_0': 'holds when some embedding has exactly two odd regions '
                   'without a 2-cut',
    'component_contains_region': 'the region boundary minus the 2-cut lies '
                                 'inside the component',
    'forbidden_arcs': 'closed arcs; a 2-cut is forbidden when both of its '
                      'vertices lie in the same arc',
    'region': 'a simple cycle that bounds a face in some embedding',
    'two_cut_sides': 'every component left by a 2-cut of J\' holds some ai '
                     'or bi',
}

OddFaceCondition = collections.namedtuple(
    'OddFaceCondition', ['tag', 'odd_faces', 'shared_vertex', 'cuts'])
Root = collections.namedtuple('Root', ['graph', 'involution'])
StackedPrism = collections.namedtuple('StackedPrism', ['n', 'm'])
PrismOver = collections.namedtuple('PrismOver', ['base'])


class FactorWitness(object):
    """A decomposition ``J = J' + a1b1 + ... + ambm`` together with a face
    of ``J'`` carrying every ``ai`` and ``bi`` in one of the two legal
    cyclic orders.

    :param Graph jprime: The bipartite planar graph ``J'``
    :param list pairs: The ``(ai, bi)`` pairs in index order
    :param region: The face as a cyclic vertex sequence
    :param str order_variant: ``ord1`` (a1..am, bm..b1) or ``ord2``
        (a1..am, b1..bm)

    """
    def __init__(self, jprime, pairs, region, order_variant):
        if order_variant not in ORDER_VARIANTS:
            raise InconsistentWitness('unknown order variant %r' %
                                      (order_variant,))
        self.jprime = jprime
        self.pairs = tuple(tuple(pair) for pair in pairs)
        self.region = tuple(region)
        self.order_variant = order_variant

    def __repr__(self):
        return '<polyprod.FactorWitness m=%s region=%s %s>' % (
            len(self.pairs), len(self.region), self.order_variant)

    @property
    def m(self):
        return len(self.pairs)

    def graph(self):
        """Return ``J' + a1b1 + ... + ambm``

        :rtype: Graph

        """
        return self.jprime.with_edges(self.pairs)

    def report(self):
        """Return a dict describing the witness

        :rtype: dict

        """
        return {
            'jprime': {'n': self.jprime.n,
                       'edges': [list(e) for e in self.jprime.edges]},
            'pairs': [list(pair) for pair in self.pairs],
            'region': list(self.region),
            'order_variant': self.order_variant
        }


class QuadWitness(object):
    """The labeling ``v1..v2l`` of the region of a factor witness with the
    indices placing ``ai = v_ri`` and ``bi = v_si``

    :param labeling: The region vertices ``v1..v2l``
    :param r: The indices ``r1..rm`` (1-based)
    :param s: The indices ``s1..sm`` (1-based)

    """
    def __init__(self, labeling, r, s):
        self.labeling = tuple(labeling)
        self.r = tuple(r)
        self.s = tuple(s)

    def __repr__(self):
        return '<polyprod.QuadWitness 2l=%s r=%s s=%s>' % (
            len(self.labeling), self.r, self.s)

    def index_equations(self):
        """Return whether the index equations hold

        :rtype: bool

        """
        r, s, length = self.r, self.s, len(self.labeling)
        if not r or len(r) != len(s) or length % 2 or length < 4:
            return False
        if r[0] != 1 or r[-1] % 2 or s[0] != r[-1] + 1 or s[-1] != length:
            return False
        return all((r[i + 1] - r[i]) + (s[i + 1] - s[i]) == 2
                   for i in range(len(r) - 1))

    def report(self):
        """Return a dict describing the labeling and its index equations

        :rtype: dict

        """
        return {'labeling': list(self.labeling),
                'r': list(self.r),
                's': list(self.s),
                'index_equations': self.index_equations(),
                'interpretations': dict(INTERPRETATIONS)}


class RootSet(object):
    """Kronecker roots of a bipartite graph, one per isomorphism class, each
    with the involution whose orbits give its vertices

    """
    def __init__(self, roots):
        self.roots = list(roots)

    def __getitem__(self, index):
        return self.roots[index]

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def __repr__(self):
        return '<polyprod.RootSet roots=%s>' % len(self.roots)

    def graphs(self):
        return [root.graph for root in self.roots]


class CartesianForm(object):
    """The ways a polyhedron is a stacked prism or a prism over an
    outerplanar Hamiltonian graph

    """
    def __init__(self, stacked, prisms):
        self.stacked = list(stacked)
        self.prisms = list(prisms)

    def __len__(self):
        return len(self.variants)

    def __repr__(self):
        return '<polyprod.CartesianForm %s>' % ', '.join(self.describe())

    @property
    def variants(self):
        return self.stacked + self.prisms

    def describe(self):
        """Return a short text per variant

        :rtype: list

        """
        return (['StackedPrism(%s,%s)' % (s.n, s.m) for s in self.stacked] +
                ['PrismOver(n=%s,q=%s)' % (p.base.n, len(p.base.edges))
                 for p in self.prisms])


def _odd_walks(face_set):
    return [face_set.walks[i] for i in face_set.odd_faces()]


def _polyhedral_condition(face_set):
    odd = _odd_walks(face_set)
    sets = [frozenset(walk) for walk in odd]
    if len(odd) == 2 and not sets[0] & sets[1]:
        return OddFaceCondition('C1', tuple(odd), None, ())
    if len(odd) == 4 and \
            all(a & b for a, b in itertools.combinations(sets, 2)) and \
            not any(a & b & c for a, b, c in itertools.combinations(sets, 3)):
        return OddFaceCondition('C2', tuple(odd), None, ())
    if len(odd) >= 4:
        for index, exceptional in enumerate(sets):
            others = sets[:index] + sets[index + 1:]
            common = frozenset.intersection(*others)
            if common and all(exceptional & other for other in others):
                return OddFaceCondition('C3', tuple(odd), min(common), ())
    return OddFaceCondition('none', tuple(odd), None, ())


def _condition_zero(face_set, cuts):
    odd = _odd_walks(face_set)
    cut_sets = [frozenset((cut.u, cut.v)) for cut in cuts]
    lacking = [walk for walk in odd
               if not any(cut <= frozenset(walk) for cut in cut_sets)]
    if len(lacking) != 2:
        return False
    for cut in cuts:
        removed = frozenset((cut.u, cut.v))
        for component in cut.components:
            members = frozenset(component)
            if not any(frozenset(walk) - removed and
                       frozenset(walk) - removed <= members for walk in odd):
                return False
    return True


def classify_odd_faces(graph):
    """Return the odd-face condition satisfied by a planar graph ``J``: C1,
    C2 or C3 for polyhedral ``J``, C0 for ``J`` of connectivity two, or
    ``none``. ``J ∧ K2`` is a polyhedron exactly when the tag is not ``none``.

    :param Graph graph: The planar graph J
    :rtype: OddFaceCondition
    :raises: NonPlanarInput

    """
    if not planar.is_planar(graph):
        raise planar.NonPlanarInput(graph)
    if planar.is_polyhedron(graph):
        condition = _polyhedral_condition(planar.planar_embed(graph).faces())
        LOGGER.debug('%r is polyhedral with condition %s', graph,
                     condition.tag)
        return condition
    if graph.n < 4 or not graphs.is_connected(graph):
        return OddFaceCondition('none', (), None, ())
    semi, cuts = graphs.semi_hyper_2_connected(graph)
    if semi:
        for embedding in planar.embeddings(graph):
            face_set = embedding.faces()
            if _condition_zero(face_set, cuts):
                return OddFaceCondition('C0', tuple(_odd_walks(face_set)),
                                        None, tuple(cuts))
    return OddFaceCondition('none', (), None, tuple(cuts))


def _offsets(region, start, direction):
    position = dict((v, i) for i, v in enumerate(region))
    length = len(region)
    return dict((v, (direction * (i - position[start])) % length)
                for v, i in position.items())


def order_direction(region, pairs, variant):
    """Return the walking direction along `region` (``1`` or ``-1``) in
    which ``a1..am`` followed by the ``b`` side reads in the order of
    `variant`, or None when neither direction does.

    :param region: The cyclic vertex sequence
    :param list pairs: The ``(ai, bi)`` pairs
    :param str variant: ``ord1`` or ``ord2``
    :rtype: int or None

    """
    if len(set(region)) != len(region):
        return None
    members = set(region)
    if any(a not in members or b not in members for a, b in pairs):
        return None
    a_side = [a for a, _b in pairs]
    b_side = [b for _a, b in pairs]
    sequence = a_side + (b_side[::-1] if variant == ORD1 else b_side)
    for direction in (1, -1):
        offset = _offsets(region, pairs[0][0], direction)
        values = [offset[v] for v in sequence]
        if all(x <= y for x, y in zip(values, values[1:])):
            return direction
    return None


def _forbidden_arcs(region, pairs, variant, direction):
    offset = _offsets(region, pairs[0][0], direction)
    (a_first, b_first), (a_last, b_last) = pairs[0], pairs[-1]
    closing = b_first if variant == ORD1 else b_last
    inner = (offset[a_last], offset[b_last] if variant == ORD1
             else offset[b_first])
    first = frozenset(v for v in region
                      if offset[v] >= offset[closing] or offset[v] == 0)
    second = frozenset(v for v in region
                       if inner[0] <= offset[v] <= inner[1])
    return first, second


def verify_factor_witness(graph, witness):
    """Check every clause of a factor witness for ``J``

    :param Graph graph: The graph J
    :param FactorWitness witness: The witness
    :returns: Whether all clauses hold, and a report of each clause
    :rtype: tuple(bool, dict)
    :raises: InconsistentWitness

    """
    jprime, pairs, region = witness.jprime, witness.pairs, witness.region
    if jprime.n != graph.n:
        raise InconsistentWitness('J has %s vertices, J\' has %s' %
                                  (graph.n, jprime.n))
    for a, b in pairs:
        if a == b or not (0 <= a < graph.n and 0 <= b < graph.n):
            raise InconsistentWitness('bad pair (%s, %s)' % (a, b))
    if any(not graph.has_edge(u, v) for u, v in jprime.edges):
        raise InconsistentWitness('J\' is not a subgraph of J')

    clauses = collections.OrderedDict()
    normalized = [(min(a, b), max(a, b)) for a, b in pairs]
    clauses['decomposition'] = (
        len(set(normalized)) == len(normalized) and
        not any(jprime.has_edge(a, b) for a, b in pairs) and
        set(jprime.edges) | set(normalized) == set(graph.edges))
    ends = [pairs[0][0], pairs[0][1], pairs[-1][0], pairs[-1][1]] \
        if pairs else []
    clauses['distinct_ends'] = len(pairs) >= 2 and len(set(ends)) == 4
    colors = graphs.bipartition(jprime)
    clauses['bipartite'] = colors is not None and graphs.is_connected(jprime)
    clauses['planar'] = planar.is_planar(jprime)
    if jprime.n >= 4 and graphs.vertex_connectivity(jprime, limit=3) >= 3:
        clauses['connectivity'], cuts = True, []
    else:
        clauses['connectivity'], cuts = graphs.semi_hyper_2_connected(jprime)
    clauses['region'] = planar.is_facial_cycle(jprime, region) and all(
        a in region and b in region for a, b in pairs)
    direction = order_direction(region, pairs, witness.order_variant) \
        if pairs else None
    clauses['order'] = direction is not None
    clauses['non_bipartite'] = clauses['bipartite'] and all(
        (a in colors.classA) == (b in colors.classA) for a, b in pairs)
    if direction is None:
        clauses['two_cuts'] = False
    else:
        arcs = _forbidden_arcs(region, pairs, witness.order_variant,
                               direction)
        members = set(region)
        endpoints = set(itertools.chain.from_iterable(pairs))
        clauses['two_cuts'] = all(
            cut.u in members and cut.v in members and
            not any(cut.u in arc and cut.v in arc for arc in arcs) and
            all(endpoints.intersection(part) for part in cut.components)
            for cut in cuts)
    passed = all(clauses.values())
    LOGGER.debug('Witness %r for %r: %s', witness, graph, dict(clauses))
    return passed, {'clauses': dict(clauses), 'passed': passed,
                    'interpretations': dict(INTERPRETATIONS),
                    'witness': witness.report()}


def _oriented_pairs(region, edges):
    """Yield ``(pairs, variant)`` arrangements of `edges` that read in a
    legal order along `region`"""
    members = set(region)
    if any(u not in members or v not in members for u, v in edges):
        return
    produced = set()
    for start in sorted(set(itertools.chain.from_iterable(edges))):
        for direction in (1, -1):
            offset = _offsets(region, start, direction)
            oriented = [(u, v) if offset[u] < offset[v] else (v, u)
                        for u, v in edges]
            for variant in ORDER_VARIANTS:
                sign = -1 if variant == ORD1 else 1
                pairs = tuple(sorted(oriented, key=lambda p: (
                    offset[p[0]], sign * offset[p[1]])))
                if pairs[0][0] != start or (pairs, variant) in produced:
                    continue
                if order_direction(region, pairs, variant) is None:
                    continue
                produced.add((pairs, variant))
                yield pairs, variant


def find_factor_witness(graph, cap=None):
    """Search for a factor witness of ``J``. Candidate edge sets are the
    monochromatic edges of 2-colorings, tried by size then lexicographically;
    regions are the faces of every embedding of ``J'``.

    :param Graph graph: The graph J
    :param int cap: Vertex cap, defaults to the process search cap
    :rtype: FactorWitness or None
    :raises: SearchBudgetExceeded

    """
    utils.ensure_within_cap(graph.n, cap, 'factor witness search')
    if graph.n < 4 or not graphs.is_connected(graph):
        return None
    if 2 ** (graph.n - 1) > WITNESS_COLORING_LIMIT:
        raise utils.SearchBudgetExceeded(WITNESS_COLORING_LIMIT,
                                         'witness colorings of %r' % graph)
    candidates = set()
    for colors in itertools.product((0, 1), repeat=graph.n - 1):
        color = (0,) + colors
        removed = tuple(e for e in graph.edges if color[e[0]] == color[e[1]])
        if len(removed) >= 2:
            candidates.add(removed)
    for removed in sorted(candidates, key=lambda edges: (len(edges), edges)):
        jprime = graph.without_edges(removed)
        if not graphs.is_connected(jprime) or \
                min(jprime.degree(v) for v in range(jprime.n)) < 2:
            continue
        for embedding in planar.embeddings(jprime):
            for walk in embedding.faces().walks:
                for pairs, variant in _oriented_pairs(walk, removed):
                    witness = FactorWitness(jprime, pairs, walk, variant)
                    if verify_factor_witness(graph, witness)[0]:
                        LOGGER.debug('Found %r for %r', witness, graph)
                        return witness
    return None


def witness_cover(graph, witness):
    """Build the cover from a witness: two copies of ``J'`` (the second
    shifted by ``n``) joined by the edges ``ai - (bi + n)`` and
    ``(ai + n) - bi``. The result is isomorphic to ``cover(J)``.

    :param Graph graph: The graph J
    :param FactorWitness witness: The witness
    :rtype: Graph

    """
    n = graph.n
    edges = list(witness.jprime.edges)
    edges.extend((u + n, v + n) for u, v in witness.jprime.edges)
    for a, b in witness.pairs:
        edges.extend([(a, b + n), (a + n, b)])
    return graphs.build_graph(2 * n, edges)


def verify_quad_witness(graph, witness, quad):
    """Check a quadrangulation witness: the factor witness holds, every face
    of ``J'`` other than the region is a quadrilateral, the index
    equations place every ``ai`` and ``bi`` and the cover built from the
    witness is a polyhedron.

    :param Graph graph: The graph J
    :param FactorWitness witness: The factor witness
    :param QuadWitness quad: The region labeling and indices
    :rtype: bool
    :raises: InconsistentWitness

    """
    if planar.canonical_walk(quad.labeling) != \
            planar.canonical_walk(witness.region):
        raise InconsistentWitness('labeling is not the witness region')
    if len(quad.r) != witness.m or len(quad.s) != witness.m:
        raise InconsistentWitness('%s pairs but %s/%s indices' % (
            witness.m, len(quad.r), len(quad.s)))
    if not verify_factor_witness(graph, witness)[0]:
        return False
    if not quad.index_equations():
        LOGGER.debug('Index equations fail for %r', quad)
        return False
    length = len(quad.labeling)
    for (a, b), r, s in zip(witness.pairs, quad.r, quad.s):
        if not (1 <= r <= length and 1 <= s <= length):
            return False
        if quad.labeling[r - 1] != a or quad.labeling[s - 1] != b:
            return False
    for embedding in planar.embeddings(witness.jprime):
        face_set = embedding.faces()
        index = face_set.find(witness.region)
        if index is None:
            continue
        if all(size == 4 for i, size in enumerate(face_set.lengths)
               if i != index):
            break
    else:
        return False
    if not planar.is_polyhedron(witness_cover(graph, witness)):
        LOGGER.debug('Cover of %r is not a polyhedron', graph)
        return False
    return True


def _quotient(graph, involution, side):
    orbit = {}
    for vertex in range(graph.n):
        if vertex not in orbit:
            orbit[vertex] = orbit[involution[vertex]] = len(orbit) // 2
    counts = collections.Counter()
    for u, v in graph.edges:
        a, b = orbit[u], orbit[v]
        if a == b:
            return None
        counts[(min(a, b), max(a, b))] += 1
    if any(count != 2 for count in counts.values()):
        return None
    root = graphs.build_graph(graph.n // 2, counts)
    image = set()
    for u, v in graph.edges:
        x, y = 2 * orbit[u] + side[u], 2 * orbit[v] + side[v]
        image.add((min(x, y), max(x, y)))
    if image != set(products.cover(root).graph.edges):
        return None
    return root


def kronecker_roots(graph, cap=None, planar_only=False):
    """Return the Kronecker roots of a connected bipartite graph: one graph
    ``J`` per isomorphism class with ``J ∧ K2 ≅ G``, found from the
    fixed-point-free involutive automorphisms exchanging the color classes.
    A polyhedron can have non-planar roots beside its planar one, so
    cancellation holds only among planar roots.

    :param Graph graph: The graph G
    :param int cap: Vertex cap, defaults to the process search cap
    :param bool planar_only: Keep only the planar roots
    :rtype: RootSet
    :raises: NotBipartite, Disconnected, SearchBudgetExceeded

    """
    if not graphs.is_connected(graph):
        raise Disconnected(graph)
    colors = graphs.bipartition(graph)
    if colors is None:
        raise NotBipartite(graph)
    side = [0 if v in colors.classA else 1 for v in range(graph.n)]
    found = {}
    for involution in graphs.iter_automorphisms(graph, cap):
        if any(involution[v] == v or involution[involution[v]] != v or
               side[involution[v]] == side[v] or
               graph.has_edge(v, involution[v]) for v in range(graph.n)):
            continue
        root = _quotient(graph, involution, side)
        if root is None or (planar_only and not planar.is_planar(root)):
            continue
        certificate = graphs.canonical_form(root)
        if certificate not in found:
            LOGGER.debug('Root %r of %r from %r', root, graph, involution)
            found[certificate] = Root(root, involution)
    return RootSet(found[c] for c in sorted(found))


def _is_prism_base(base):
    return base.n >= 3 and planar.is_outerplanar(base) and \
        graphs.vertex_connectivity(base, limit=2) >= 2


def cartesian_forms(graph, cap=None):
    """Return the ways a polyhedron is a stacked prism ``C_n □ P_m`` or a
    prism ``H □ K2`` over an outerplanar Hamiltonian ``H``. A prism over a
    cycle ``C_n`` is the stacked prism ``C_n □ P_2`` and is listed once.

    :param Graph graph: The polyhedron
    :param int cap: Vertex cap, defaults to the process search cap
    :rtype: CartesianForm
    :raises: NotPolyhedral, SearchBudgetExceeded

    """
    if not planar.is_polyhedron(graph):
        raise NotPolyhedral(graph)
    utils.ensure_within_cap(graph.n, cap, 'Cartesian form search')
    stacked = []
    for n in range(3, graph.n // 2 + 1):
        if graph.n % n == 0:
            candidate = products.cartesian(graphs.cycle(n),
                                           graphs.path(graph.n // n)).graph
            if graphs.is_isomorphic(graph, candidate):
                stacked.append(StackedPrism(n, graph.n // n))
    bases = {}
    for involution in graphs.iter_automorphisms(graph, cap):
        if any(involution[v] == v or involution[involution[v]] != v or
               not graph.has_edge(v, involution[v])
               for v in range(graph.n)):
            continue
        matching = set((min(v, involution[v]), max(v, involution[v]))
                       for v in range(graph.n))
        remainder = graph.without_edges(matching)
        components = sorted(sorted(c) for c in
                            nx.connected_components(remainder.to_networkx()))
        if len(components) != 2 or \
                any(involution[v] not in components[1]
                    for v in components[0]):
            continue
        base = graph.induced(components[0])[0]
        if not _is_prism_base(base):
            continue
        bases.setdefault(graphs.canonical_form(base), base)
    prisms = []
    for certificate in sorted(bases):
        base = bases[certificate]
        if base.n * 2 == graph.n and StackedPrism(base.n, 2) in stacked and \
                graphs.is_isomorphic(base, graphs.cycle(base.n)):
            continue
        prisms.append(PrismOver(base))
    LOGGER.debug('%r has %s stacked and %s prism forms', graph, len(stacked),
                 len(prisms))
    return CartesianForm(stacked, prisms)


class RecognitionError(utils.PolyprodException):
    pass


class InconsistentWitness(RecognitionError):
    """Raised when a witness does not describe the graph it is checked
    against"""
    def __init__(self, reason):
        super(InconsistentWitness, self).__init__()
        self.reason = reason

    def __str__(self):
        return 'Inconsistent witness: %s' % self.reason


class _GraphRejected(RecognitionError):
    requirement = None

    def __init__(self, graph):
        super(_GraphRejected, self).__init__()
        self.graph = graph

    def __str__(self):
        return 'Graph %r is not %s' % (self.graph, self.requirement)


class NotBipartite(_GraphRejected):
    """Raised when a bipartite graph is required"""
    requirement = 'bipartite'


class Disconnected(_GraphRejected):
    """Raised when a connected graph is required"""
    requirement = 'connected'


class NotPolyhedral(_GraphRejected):
    """Raised when a polyhedral graph is required"""
    requirement = 'polyhedral'
