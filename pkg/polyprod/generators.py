"""
Deterministic constructors for the graph families behind polyhedral
products: basic families, Kronecker factors of stacked prisms, quadrangulation
factors, the iterative four-triangle generator, the cubic builder, the
quadrilateral expansion and the outerplanar ``H`` family with its companion
``J``.

.. code:: python

    from polyprod import generators, products

    graph, witness = generators.stacked_cube_factor(1, 2)
    products.cover(graph).graph   # isomorphic to C4 x P4

"""
import collections
import itertools
import logging

import networkx as nx

from polyprod import graph as graphs
from polyprod import planar
from polyprod import products
from polyprod import recognition
from polyprod import utils

LOGGER = logging.getLogger(__name__)

MOVES = ('T1', 'T2', 'T2m')
FINALS = ('F1', 'F2')

T3333Script = collections.namedtuple('T3333Script', ['moves', 'final'])
CubicBuildSpec = collections.namedtuple(
    'CubicBuildSpec', ['j2', 'region', 'splits', 'pairing', 'order_variant'])
DouHSpec = collections.namedtuple('DouHSpec', ['ell', 'chords'])


def _require(condition, reason):
    if not condition:
        raise BadParams(reason)


def cycle(n):
    _require(n >= 3, 'cycle needs n >= 3, got %s' % n)
    return graphs.cycle(n)


def path(m):
    _require(m >= 1, 'path needs m >= 1, got %s' % m)
    return graphs.path(m)


def complete(n):
    _require(n >= 1, 'complete graph needs n >= 1, got %s' % n)
    nxg = nx.complete_graph(n)
    return graphs.build_graph(n, nxg.edges())


def ladder(ell):
    """Return the ladder ``F_2l``: the cycle ``u1..u2l`` with the rungs
    ``uj u(2l+1-j)``, isomorphic to ``P_l □ K2``. Vertex ``uk`` is ``k - 1``.

    :param int ell: The half length, at least 1
    :rtype: Graph
    :raises: BadParams

    """
    _require(ell >= 1, 'ladder needs ell >= 1, got %s' % ell)
    if ell == 1:
        return products.K2
    rungs = [(j - 1, 2 * ell - j) for j in range(2, ell)]
    return graphs.cycle(2 * ell).with_edges(rungs)


def stacked_prism(n, m):
    _require(n >= 3 and m >= 1,
             'stacked prism needs n >= 3 and m >= 1, got %s, %s' % (n, m))
    return products.cartesian(graphs.cycle(n), graphs.path(m)).graph


def generalized_petersen(n, k):
    """Return ``GP(n, k)``: outer cycle ``0..n-1``, spokes ``i - (n + i)``
    and inner edges ``(n + i) - (n + (i + k) mod n)``

    :param int n: The outer cycle length, at least 3
    :param int k: The inner step, ``1 <= k < n / 2``
    :rtype: Graph
    :raises: BadParams

    """
    _require(n >= 3 and 1 <= k and 2 * k < n,
             'generalized Petersen needs n >= 3 and 1 <= k < n/2, '
             'got %s, %s' % (n, k))
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return graphs.build_graph(2 * n, edges)


def petersen():
    return generalized_petersen(5, 2)


def desargues():
    return generalized_petersen(10, 3)


def tetrahedron():
    return complete(4)


def cube():
    return stacked_prism(4, 2)


FAMILIES = {
    'complete': (complete, ('n',)),
    'cube': (cube, ()),
    'cycle': (cycle, ('n',)),
    'desargues': (desargues, ()),
    'generalized_petersen': (generalized_petersen, ('n', 'k')),
    'ladder': (ladder, ('ell',)),
    'path': (path, ('m',)),
    'petersen': (petersen, ()),
    'stacked_prism': (stacked_prism, ('n', 'm')),
    'tetrahedron': (tetrahedron, ())
}


def basic(family, **params):
    """Build a member of a named family

    :param str family: One of :data:`FAMILIES`
    :param params: The family parameters as integers
    :rtype: Graph
    :raises: BadParams

    """
    if family not in FAMILIES:
        raise BadParams('unknown family %r' % family)
    function, names = FAMILIES[family]
    if set(params) != set(names):
        raise BadParams('family %s takes parameters (%s), got (%s)' % (
            family, ', '.join(names), ', '.join(sorted(params))))
    return function(**params)


def stacked_cube_factor(N, M):
    """Return a Kronecker factor of ``C_4N □ P_2M``: ``J' = C_4N □ P_M`` plus
    the ``2N`` diagonals ``vk v(k+2N)`` of its base face, with the factor
    witness using that face as the region.

    :param int N: At least 1
    :param int M: At least 1
    :rtype: tuple(Graph, FactorWitness)
    :raises: BadParams

    """
    _require(N >= 1 and M >= 1,
             'stacked cube factor needs N, M >= 1, got %s, %s' % (N, M))
    jprime = products.cartesian(graphs.cycle(4 * N), graphs.path(M)).graph
    base = [c * M for c in range(4 * N)]
    pairs = [(base[k], base[k + 2 * N]) for k in range(2 * N)]
    witness = recognition.FactorWitness(jprime, pairs, base, recognition.ORD2)
    return jprime.with_edges(pairs), witness


def odd_prism_factor(N, M):
    """Return ``C_(2N+1) □ P_M``, a Kronecker factor of ``C_(4N+2) □ P_M``

    :param int N: At least 1
    :param int M: At least 1
    :rtype: Graph
    :raises: BadParams

    """
    _require(N >= 1 and M >= 1,
             'odd prism factor needs N, M >= 1, got %s, %s' % (N, M))
    return products.cartesian(graphs.cycle(2 * N + 1),
                              graphs.path(M)).graph


def quad_factor(m, i):
    """Return a factor whose cover is a 3-connected quadrangulation. ``J'``
    is the cycle ``v1..v2m`` with ``v1`` joined to ``v4, v6, ..., v(2i+2)``
    so that every ``a1bj`` closes a quadrilateral, and the polygon
    ``v1, v(2i+2), ..., v2m`` left over (when ``m - i >= 2``) filled with
    an inner cycle on spokes, capped by a hub on every other inner vertex
    when it is longer than four. ``aj`` is ``v1`` for ``j <= i`` and ``v2``
    after, and ``bj = v_sj`` with ``s1 = 3`` stepping by two except by one
    after position ``i``. ``J`` is planar and ``(2, 1)`` is ``K4``.

    :param int m: The number of pairs, at least 2
    :param int i: The split index, ``1 <= i <= m - 1``
    :rtype: tuple(Graph, FactorWitness, QuadWitness)
    :raises: BadParams

    """
    _require(m >= 2 and 1 <= i <= m - 1,
             'quad factor needs m >= 2 and 1 <= i < m, got %s, %s' % (m, i))
    region = list(range(2 * m))
    edges = [(k, (k + 1) % (2 * m)) for k in region]
    # 0-based: v1 is 0, v(2j) is 2j - 1
    edges.extend((0, 2 * j - 1) for j in range(2, min(i + 1, m - 1) + 1))
    polygon = [0] + list(range(2 * i + 1, 2 * m))
    n = 2 * m
    if len(polygon) >= 4:
        inner = list(range(n, n + len(polygon)))
        n += len(polygon)
        edges.extend(zip(polygon, inner))
        edges.extend((q, inner[(t + 1) % len(inner)])
                     for t, q in enumerate(inner))
        if len(inner) > 4:
            edges.extend((n, q) for q in inner[::2])
            n += 1
    jprime = graphs.build_graph(n, edges)
    r = [1] * i + [2] * (m - i)
    s = [3]
    for j in range(1, m):
        s.append(s[-1] + (1 if j == i else 2))
    pairs = [(region[rj - 1], region[sj - 1]) for rj, sj in zip(r, s)]
    witness = recognition.FactorWitness(jprime, pairs, region,
                                        recognition.ORD2)
    quad = recognition.QuadWitness(region, r, s)
    return jprime.with_edges(pairs), witness, quad


def t3333_build(script):
    """Run a script of the four-triangle generator. The start graph has the
    hexagon ``c1..c6``; every move adds ``v'`` (adjacent to ``c1, c3``),
    ``v''`` (adjacent to ``c1, c5``) and a vertex ``z`` placed by the move,
    then relabels the hexagon. ``F1`` closes with the edge ``c1c4``, ``F2``
    with ``v', v''`` and ``z`` adjacent to ``v', v'', c4``.

    :param T3333Script script: The moves and the final
    :rtype: Graph
    :raises: BadParams

    """
    moves, final = script
    if final not in FINALS or any(move not in MOVES for move in moves):
        raise BadParams('bad script %r' % (script,))
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
             (0, 2), (1, 3), (1, 5), (6, 0), (6, 2)]
    hexagon = [6, 2, 3, 4, 5, 0]
    n = 7
    for move in moves:
        c1, _c2, c3, c4, c5, _c6 = hexagon
        v1, v2, z = n, n + 1, n + 2
        n += 3
        edges.extend([(v1, c1), (v1, c3), (v2, c1), (v2, c5)])
        if move == 'T1':
            edges.extend([(z, v1), (z, v2)])
            hexagon = [c4, c5, v2, z, v1, c3]
        elif move == 'T2':
            edges.extend([(z, v1), (z, c4)])
            hexagon = [v2, c1, v1, z, c4, c5]
        else:
            edges.extend([(z, v2), (z, c4)])
            hexagon = [v1, c3, c4, z, v2, c1]
    c1, _c2, c3, c4, c5, _c6 = hexagon
    if final == 'F1':
        edges.append((c1, c4))
    else:
        v1, v2, z = n, n + 1, n + 2
        n += 3
        edges.extend([(v1, c1), (v1, c3), (v2, c1), (v2, c5),
                      (z, v1), (z, v2), (z, c4)])
    result = graphs.build_graph(n, edges)
    LOGGER.debug('Script %r built %r', script, result)
    return result


def t3333_scripts(max_moves):
    """Return every script with at most `max_moves` moves, shorter scripts
    first, then by moves, ``F1`` before ``F2``

    :param int max_moves: The longest move list
    :rtype: list(T3333Script)

    """
    return [T3333Script(moves, final)
            for length in range(max_moves + 1)
            for moves in itertools.product(MOVES, repeat=length)
            for final in FINALS]


def _edge_tokens(j2, embedding):
    if embedding.graph is j2:
        return [t for t, _u, _v in j2.edges]
    lookup = dict(((min(u, v), max(u, v)), t) for t, u, v in j2.edges)
    return [lookup[edge] for edge in embedding.ends]


def _region_darts(j2, region):
    """Return an embedding of `j2` with `region` as a face and the darts of
    that face walked in region order"""
    if j2.is_simple():
        candidates = planar.embeddings(j2.to_graph())
    else:
        candidates = [planar.planar_embed(j2)]
    region = tuple(region)
    for embedding in candidates:
        tokens = _edge_tokens(j2, embedding)
        for darts in embedding.faces().darts:
            for walk in (list(darts), [d ^ 1 for d in reversed(darts)]):
                for start in range(len(walk)):
                    rotated = walk[start:] + walk[:start]
                    if tuple(tokens[d >> 1] for d in rotated) == region:
                        return embedding, tokens, rotated
    return None, None, None


def _check_j2(j2):
    if any(j2.degree(v) != 3 for v in range(j2.n)):
        raise SpecViolation('j2_structure', 'J2 is not cubic')
    if planar.planar_embed(j2) is None:
        raise SpecViolation('j2_structure', 'J2 is not planar')
    if j2.is_simple():
        simple = j2.to_graph()
        if graphs.vertex_connectivity(simple, limit=3) < 3 and \
                not graphs.semi_hyper_2_connected(simple)[0]:
            raise SpecViolation('j2_structure', 'J2 is neither 3-connected '
                                'nor semi-hyper-2-connected')
    elif not nx.is_connected(j2.to_networkx()):
        raise SpecViolation('j2_structure', 'J2 is disconnected')


def cubic_build(spec):
    """Build a factor with a cubic polyhedral cover by splitting edges of an
    even region of a cubic planar multigraph ``J2`` and joining the inserted
    vertices in pairs. Clauses are checked in the order ``j2_structure``,
    ``even_region``, ``adjacent_odd``, ``two_splits``, ``split_parity``,
    ``order``, ``simple``, ``non_bipartite``. A region is adjacent to an odd
    region when they share an edge.

    :param CubicBuildSpec spec: The build plan; `pairing` indexes the
        inserted vertices in region order
    :rtype: tuple(Graph, FactorWitness)
    :raises: SpecViolation

    """
    j2 = spec.j2
    _check_j2(j2)
    if len(spec.region) % 2:
        raise SpecViolation('even_region', 'region has odd length %s' %
                            len(spec.region))
    embedding, tokens, darts = _region_darts(j2, spec.region)
    if embedding is None:
        raise SpecViolation('even_region', 'region %r is not a face of J2' %
                            (spec.region,))
    face_set = embedding.faces()
    region_tokens = set(spec.region)
    for index in face_set.odd_faces():
        if not region_tokens & set(tokens[d >> 1]
                                   for d in face_set.darts[index]):
            raise SpecViolation('adjacent_odd', 'odd region %r shares no edge '
                                'with the region' % (face_set.walks[index],))

    split = dict((t, c) for t, c in spec.splits.items() if c)
    if not set(split) <= region_tokens or \
            any(c < 0 for c in spec.splits.values()) or len(split) < 2:
        raise SpecViolation('two_splits', 'at least two region edges must '
                            'be split, got %r' % (spec.splits,))
    for dart in darts:
        token = tokens[dart >> 1]
        other = face_set.face_of[dart ^ 1]
        if (split.get(token, 0) % 2 == 1) != face_set.parity[other]:
            raise SpecViolation('split_parity', 'edge %s is split %s times '
                                'next to a face of length %s' % (
                                    token, split.get(token, 0),
                                    face_set.lengths[other]))

    multigraph, walk, inserted = j2, [], []
    for dart in darts:
        token = tokens[dart >> 1]
        tail, head = embedding.tail(dart), embedding.head(dart)
        walk.append(tail)
        if token in split:
            first = multigraph.endpoints(token)[0]
            multigraph, new = graphs.subdivide(multigraph, token,
                                               split[token])
            if first != tail or tail == head and dart & 1:
                new = new[::-1]
            walk.extend(new)
            inserted.extend(new)

    pairing = list(spec.pairing)
    if len(pairing) < 2 or any(not (0 <= i < len(inserted) and
                                    0 <= j < len(inserted))
                               for i, j in pairing):
        raise SpecViolation('order', 'pairing %r does not index %s inserted '
                            'vertices' % (pairing, len(inserted)))
    pairs = [(inserted[i], inserted[j]) for i, j in pairing]
    ends = [pairs[0][0], pairs[0][1], pairs[-1][0], pairs[-1][1]]
    if len(set(ends)) != 4 or recognition.order_direction(
            walk, pairs, spec.order_variant) is None:
        raise SpecViolation('order', 'pairs %r are not in %s order on the '
                            'region' % (pairs, spec.order_variant))

    try:
        j1 = multigraph.to_graph()
    except graphs.NotSimple:
        raise SpecViolation('simple', 'J1 has loops or parallel edges')
    colors = graphs.bipartition(j1)
    if colors is None:
        raise SpecViolation('split_parity', 'J1 is not bipartite')
    normalized = set((min(a, b), max(a, b)) for a, b in pairs)
    if len(normalized) != len(pairs) or any(j1.has_edge(a, b)
                                            for a, b in pairs):
        raise SpecViolation('simple', 'a pair repeats or is already an edge')
    for a, b in pairs:
        if (a in colors.classA) != (b in colors.classA):
            raise SpecViolation('non_bipartite', 'J1 + %s%s is bipartite' %
                                (a, b))
    witness = recognition.FactorWitness(j1, pairs, walk, spec.order_variant)
    result = j1.with_edges(pairs)
    LOGGER.debug('Cubic build gave %r with %r', result, witness)
    return result, witness


def cube_build_demo():
    """Return the cube plan: one face, its two opposite edges split twice
    each and the inserted ``p1..p4`` joined as ``p1p3`` and ``p2p4``

    :rtype: CubicBuildSpec

    """
    base = cube()
    j2 = graphs.Multigraph.from_graph(base)
    region = tuple(base.edge_index(u, v)
                   for u, v in ((0, 2), (2, 4), (4, 6), (6, 0)))
    return CubicBuildSpec(j2, region, {region[0]: 2, region[2]: 2},
                          ((0, 2), (1, 3)), recognition.ORD2)


def quad_expand(graph, face):
    """Expand a quadrilateral face ``[w0, w1, w2, w3]`` of a cubic planar
    graph: ``w0w1`` gets ``a1, a2`` and ``w2w3`` gets ``b1, b2`` (in walk
    order), joined by ``a1b2`` and ``a2b1``. The graph stays cubic and
    planar with the same odd faces.

    :param Graph graph: The cubic planar graph
    :param face: The quadrilateral face
    :rtype: Graph
    :raises: NotCubic, NotQuadFace

    """
    if any(graph.degree(v) != 3 for v in range(graph.n)):
        raise NotCubic(graph)
    face = tuple(face)
    if len(face) != 4 or not planar.is_facial_cycle(graph, face):
        raise NotQuadFace(face)
    w0, w1, w2, w3 = face
    expanded, (a1, a2) = graphs.subdivide(graph, (w0, w1), 2)
    expanded, (b1, b2) = graphs.subdivide(expanded, (w2, w3), 2)
    return expanded.with_edges([(a1, b2), (a2, b1)])


def _chord_key(i, j):
    return (min(i, j), max(i, j))


def _shift(chord, ell):
    i, j = chord
    return _chord_key((i + ell - 1) % (2 * ell) + 1,
                      (j + ell - 1) % (2 * ell) + 1)


def _crosses(first, second):
    (a, b), (c, d) = first, second
    if len(set((a, b, c, d))) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _validate_dou(spec):
    ell = spec.ell
    if ell < 2:
        raise SpecViolation('range', 'ell must be at least 2, got %s' % ell)
    chords = set()
    for i, j in spec.chords:
        if not (1 <= i <= 2 * ell and 1 <= j <= 2 * ell) or i == j:
            raise SpecViolation('range', 'chord u%su%s' % (i, j))
        chords.add(_chord_key(i, j))
    for i, j in chords:
        if j - i == 1 or (i, j) == (1, 2 * ell):
            raise SpecViolation('cycle_edge', 'u%su%s is a cycle edge' %
                                (i, j))
        if j - i == ell:
            raise SpecViolation('antipodal', 'u%su%s is antipodal' % (i, j))
        if (j - i) % 2 == 0:
            raise SpecViolation('parity', 'u%su%s joins equal parities' %
                                (i, j))
        if _shift((i, j), ell) not in chords:
            raise SpecViolation('shift_closed', 'u%su%s has no shifted '
                                'partner' % (i, j))
    for first, second in itertools.combinations(sorted(chords), 2):
        if _crosses(first, second):
            raise SpecViolation('crossing', 'u%su%s crosses u%su%s' %
                                (first + second))
    return sorted(chords)


def dou_H(spec):
    """Return the outerplanar Hamiltonian ``H``: the cycle ``u1..u2l``
    (vertex ``uk`` is ``k - 1``) plus the chords of `spec`

    :param DouHSpec spec: The half length and the 1-based chords
    :rtype: Graph
    :raises: SpecViolation

    """
    chords = _validate_dou(spec)
    return graphs.cycle(2 * spec.ell).with_edges(
        [(i - 1, j - 1) for i, j in chords])


def dou_J(H):
    """Return the ``J`` with ``prism(H) ≅ cover(J)``: ``H`` plus its
    antipodal chords when ``l`` is even, otherwise ``Ĥ □ K2`` with ``Ĥ`` the
    cycle ``v1..vl`` carrying the chords of ``H`` reduced modulo ``l``

    :param Graph H: A graph built by :func:`dou_H`
    :rtype: Graph
    :raises: BadParams

    """
    _require(H.n >= 4 and H.n % 2 == 0 and
             all(H.has_edge(k, (k + 1) % H.n) for k in range(H.n)),
             '%r is not a cycle u1..u2l with chords' % H)
    ell = H.n // 2
    if ell % 2 == 0:
        return H.with_edges([(k, k + ell) for k in range(ell)])
    half = graphs.cycle(ell)
    reduced = set()
    for u, v in H.edges:
        x, y = sorted((u % ell, v % ell))
        if not half.has_edge(x, y):
            reduced.add((x, y))
    return products.prism(half.with_edges(sorted(reduced)))


def dou_specs(ell):
    """Return the valid specs for `ell` with no chords or a single chord
    orbit under the shift by ``l``, in chord order

    :param int ell: The half length
    :rtype: list(DouHSpec)

    """
    specs, seen = [DouHSpec(ell, ())], set()
    for i, j in itertools.combinations(range(1, 2 * ell + 1), 2):
        orbit = tuple(sorted(set([(i, j), _shift((i, j), ell)])))
        if orbit in seen:
            continue
        seen.add(orbit)
        try:
            _validate_dou(DouHSpec(ell, orbit))
        except SpecViolation:
            continue
        specs.append(DouHSpec(ell, orbit))
    return specs


def c0_representative():
    """Return a cubic graph of connectivity two satisfying the odd-face
    condition for 2-connected factors: two copies of ``K4`` with the edges
    ``12`` and ``13`` subdivided by ``s`` and ``t``, joined ``s - s'`` and
    ``t - t'``

    :rtype: Graph

    """
    edges = []
    for offset in (0, 6):
        one, two, three, four, s, t = range(offset, offset + 6)
        edges.extend([(one, s), (s, two), (one, t), (t, three),
                      (one, four), (two, three), (two, four),
                      (three, four)])
    edges.extend([(4, 10), (5, 11)])
    return graphs.build_graph(12, edges)


def c2_representative():
    """Return a cubic polyhedron with four odd faces meeting pairwise, no
    three at a vertex: the dual of ``K4`` with every face filled by an
    octahedron

    :rtype: Graph

    """
    edges = list(itertools.combinations(range(4), 2))
    n = 4
    for corners in itertools.combinations(range(4), 3):
        inner = list(range(n, n + 3))
        n += 3
        for position, vertex in enumerate(inner):
            for other, corner in enumerate(corners):
                if other != position:
                    edges.append((vertex, corner))
        edges.extend(itertools.combinations(inner, 2))
    triangulation = graphs.build_graph(n, edges)
    return planar.dual(planar.planar_embed(triangulation)).to_graph()


class GeneratorError(utils.PolyprodException):
    pass


class BadParams(GeneratorError):
    """Raised when generator parameters are out of range"""
    def __init__(self, reason):
        super(BadParams, self).__init__()
        self.reason = reason

    def __str__(self):
        return 'Bad generator parameters: %s' % self.reason


class SpecViolation(GeneratorError):
    """Raised when a build plan breaks one of its clauses"""
    def __init__(self, clause, reason):
        super(SpecViolation, self).__init__()
        self.clause = clause
        self.reason = reason

    def __str__(self):
        return 'Clause %s violated: %s' % (self.clause, self.reason)


class NotCubic(GeneratorError):
    """Raised when a cubic graph is required"""
    def __init__(self, graph):
        super(NotCubic, self).__init__()
        self.graph = graph

    def __str__(self):
        return 'Graph %r is not cubic' % (self.graph,)


class NotQuadFace(GeneratorError):
    """Raised when a walk is not a quadrilateral face"""
    def __init__(self, face):
        super(NotQuadFace, self).__init__()
        self.face = face

    def __str__(self):
        return 'Walk %r is not a quadrilateral face' % (self.face,)
