"""
Immutable simple graphs and multigraphs

Vertices are the dense integers ``0..n-1``. Labels such as product pairs are
kept alongside a graph (see :class:`polyprod.products.ProductLabeling`), never
inside it, so two graphs compare equal exactly when their vertex counts and
edge sets match.

.. code:: python

    from polyprod import graph

    cube = graph.build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0),
                                 (4, 5), (5, 6), (6, 7), (7, 4),
                                 (0, 4), (1, 5), (2, 6), (3, 7)])
    graph.vertex_connectivity(cube)   # 3
    len(graph.automorphisms(cube))    # 48

"""
import collections
import itertools
import logging

import networkx as nx
from networkx.algorithms import isomorphism

from polyprod import utils

LOGGER = logging.getLogger(__name__)

Bipartition = collections.namedtuple('Bipartition', ['classA', 'classB'])
CutPair = collections.namedtuple('CutPair', ['u', 'v', 'components'])


class Graph(object):
    """An immutable simple undirected graph. Construct instances with
    :func:`build_graph`, which validates the edge list.

    :param int n: The vertex count
    :param edges: Normalized ``(u, v)`` pairs with ``u < v``, sorted

    """
    def __init__(self, n, edges):
        self.n = n
        self.edges = tuple(edges)
        adjacency = [set() for _ in range(n)]
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self.adjacency = tuple(frozenset(a) for a in adjacency)
        self._index = dict((edge, i) for i, edge in enumerate(self.edges))
        self._nx = None

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, self.edges))

    def __len__(self):
        return self.n

    def __repr__(self):
        return '<polyprod.Graph n=%s q=%s>' % (self.n, len(self.edges))

    @property
    def vertices(self):
        """Return the vertex ids in ascending order

        :rtype: range

        """
        return range(self.n)

    def degree(self, vertex):
        """Return the degree of a vertex

        :param int vertex: The vertex
        :rtype: int

        """
        return len(self.adjacency[vertex])

    def neighbors(self, vertex):
        """Return the neighbors of a vertex in ascending order

        :param int vertex: The vertex
        :rtype: tuple

        """
        return tuple(sorted(self.adjacency[vertex]))

    def has_edge(self, u, v):
        return v in self.adjacency[u]

    def edge_index(self, u, v):
        """Return the position of the edge ``uv`` in :attr:`edges`

        :param int u: One endpoint
        :param int v: The other endpoint
        :rtype: int
        :raises: MissingEdge

        """
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            raise MissingEdge((u, v))

    def with_edges(self, pairs):
        """Return a new graph with the given edges added

        :param list pairs: The edges to add
        :rtype: Graph
        :raises: LoopEdge, DuplicateEdge, VertexOutOfRange

        """
        return build_graph(self.n, list(self.edges) + list(pairs))

    def without_edges(self, pairs):
        """Return a new graph with the given edges removed

        :param list pairs: The edges to remove
        :rtype: Graph
        :raises: MissingEdge

        """
        removed = set()
        for u, v in pairs:
            edge = (min(u, v), max(u, v))
            if edge not in self._index:
                raise MissingEdge((u, v))
            removed.add(edge)
        return Graph(self.n, [e for e in self.edges if e not in removed])

    def relabel(self, permutation):
        """Return the graph with vertex ``v`` renamed ``permutation[v]``

        :param permutation: A sequence holding a permutation of ``0..n-1``
        :rtype: Graph

        """
        return build_graph(self.n, [(permutation[u], permutation[v])
                                    for u, v in self.edges])

    def induced(self, vertices):
        """Return the subgraph induced on `vertices`, renumbered in
        ascending order of the original ids, with the old to new mapping.

        :param vertices: The vertices to keep
        :rtype: tuple(Graph, dict)

        """
        keep = sorted(vertices)
        mapping = dict((v, i) for i, v in enumerate(keep))
        edges = [(mapping[u], mapping[v]) for u, v in self.edges
                 if u in mapping and v in mapping]
        return Graph(len(keep), sorted(edges)), mapping

    def to_networkx(self):
        """Return a cached :class:`networkx.Graph` view of this graph. Callers
        must not mutate it.

        :rtype: networkx.Graph

        """
        if self._nx is None:
            nxg = nx.Graph()
            nxg.add_nodes_from(range(self.n))
            nxg.add_edges_from(self.edges)
            self._nx = nxg
        return self._nx


class Multigraph(object):
    """An immutable multigraph whose edges carry unique integer tokens. Loops
    count twice toward the degree of their vertex.

    :param int n: The vertex count
    :param edges: ``(token, u, v)`` triples

    """
    def __init__(self, n, edges):
        self.n = n
        self.edges = tuple(edges)
        self._by_token = dict((t, (u, v)) for t, u, v in self.edges)

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, self.edges))

    def __len__(self):
        return self.n

    def __repr__(self):
        return '<polyprod.Multigraph n=%s q=%s>' % (self.n, len(self.edges))

    @classmethod
    def from_graph(cls, graph):
        """Return the multigraph of a simple graph, tokens being the edge
        positions in ``graph.edges``.

        :param Graph graph: The simple graph
        :rtype: Multigraph

        """
        return cls(graph.n, [(i, u, v) for i, (u, v) in enumerate(graph.edges)])

    @property
    def tokens(self):
        return tuple(t for t, _u, _v in self.edges)

    def endpoints(self, token):
        """Return the endpoints of the edge with the given token

        :param int token: The edge token
        :rtype: tuple
        :raises: MissingEdge

        """
        try:
            return self._by_token[token]
        except KeyError:
            raise MissingEdge(token)

    def degree(self, vertex):
        total = 0
        for _t, u, v in self.edges:
            total += (u == vertex) + (v == vertex)
        return total

    def incident(self, vertex):
        """Return ``(token, other end)`` for each edge end at `vertex`; a
        loop is listed twice.

        :param int vertex: The vertex
        :rtype: list

        """
        result = []
        for t, u, v in self.edges:
            if u == vertex:
                result.append((t, v))
            if v == vertex:
                result.append((t, u))
        return result

    def is_simple(self):
        seen = set()
        for _t, u, v in self.edges:
            key = (min(u, v), max(u, v))
            if u == v or key in seen:
                return False
            seen.add(key)
        return True

    def to_graph(self):
        """Return the equivalent simple graph

        :rtype: Graph
        :raises: NotSimple

        """
        if not self.is_simple():
            raise NotSimple('multigraph has loops or parallel edges')
        return build_graph(self.n, [(u, v) for _t, u, v in self.edges])

    def to_networkx(self):
        nxg = nx.MultiGraph()
        nxg.add_nodes_from(range(self.n))
        for t, u, v in self.edges:
            nxg.add_edge(u, v, key=t)
        return nxg


class DegreeSequence(tuple):
    """Vertex degrees sorted in descending order"""
    def __new__(cls, degrees):
        return super(DegreeSequence, cls).__new__(
            cls, sorted(degrees, reverse=True))

    def counts(self):
        """Return ``(degree, multiplicity)`` pairs, highest degree first

        :rtype: list

        """
        return sorted(collections.Counter(self).items(), reverse=True)

    def __str__(self):
        return ','.join('%s^%s' % pair for pair in self.counts())


def build_graph(n, edges):
    """Validate and normalize an edge list into a :class:`Graph`

    :param int n: The vertex count
    :param list edges: ``(u, v)`` pairs
    :rtype: Graph
    :raises: LoopEdge, DuplicateEdge, VertexOutOfRange

    """
    if n < 0:
        raise VertexOutOfRange(n, 0)
    normalized = set()
    for u, v in edges:
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise VertexOutOfRange(vertex, n)
        if u == v:
            raise LoopEdge(u)
        edge = (min(u, v), max(u, v))
        if edge in normalized:
            raise DuplicateEdge(*edge)
        normalized.add(edge)
    return Graph(n, sorted(normalized))


def build_multigraph(n, edges):
    """Build a :class:`Multigraph` from ``(u, v)`` pairs, numbering the edge
    tokens in list order.

    :param int n: The vertex count
    :param list edges: ``(u, v)`` pairs, loops and repeats allowed
    :rtype: Multigraph
    :raises: VertexOutOfRange

    """
    triples = []
    for token, (u, v) in enumerate(edges):
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise VertexOutOfRange(vertex, n)
        triples.append((token, u, v))
    return Multigraph(n, triples)


def cycle(n):
    """Return the cycle ``C_n`` on ``0..n-1`` in cyclic order

    :param int n: The length, at least 3
    :rtype: Graph
    :raises: TooFewVertices

    """
    if n < 3:
        raise TooFewVertices(n, 3)
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(m):
    """Return the path ``P_m`` on ``0..m-1``

    :param int m: The vertex count, at least 1
    :rtype: Graph
    :raises: TooFewVertices

    """
    if m < 1:
        raise TooFewVertices(m, 1)
    return build_graph(m, [(i, i + 1) for i in range(m - 1)])


def degree_sequence(graph):
    """Return the degree sequence of a graph or multigraph

    :param graph: The graph
    :rtype: DegreeSequence

    """
    return DegreeSequence(graph.degree(v) for v in range(graph.n))


def bipartition(graph):
    """Return the 2-coloring of `graph`, the lowest vertex of every connected
    component being placed in ``classA``, or None when an odd cycle exists.

    :param Graph graph: The graph
    :rtype: Bipartition or None

    """
    nxg = graph.to_networkx()
    color = {}
    for component in nx.connected_components(nxg):
        root = min(component)
        distances = nx.single_source_shortest_path_length(nxg, root)
        for vertex, distance in distances.items():
            color[vertex] = distance % 2
    for u, v in graph.edges:
        if color[u] == color[v]:
            return None
    return Bipartition(
        frozenset(v for v in range(graph.n) if color[v] == 0),
        frozenset(v for v in range(graph.n) if color[v] == 1))


def is_connected(graph):
    if graph.n == 0:
        return True
    return nx.is_connected(graph.to_networkx())


def vertex_connectivity(graph, limit=None):
    """Return the vertex connectivity of `graph` by removing every vertex
    subset smaller than the minimum degree. With `limit`, subsets of size
    `limit` and above are never examined and the result is at most `limit`.

    :param Graph graph: The graph
    :param int limit: Optional early stop
    :rtype: int
    :raises: TooFewVertices

    """
    if graph.n < 2:
        raise TooFewVertices(graph.n, 2)
    bound = min(graph.degree(v) for v in range(graph.n))
    if limit is not None:
        bound = min(bound, limit)
    nxg = graph.to_networkx()
    for size in range(bound):
        for removed in itertools.combinations(range(graph.n), size):
            if not nx.is_connected(nx.restricted_view(nxg, removed, [])):
                LOGGER.debug('Removing %r disconnects %r', removed, graph)
                return size
    return bound


def cut_pairs(graph):
    """Return every pair of vertices whose removal leaves at least two
    components, with those components, in lexicographic order.

    :param Graph graph: The graph
    :rtype: list(CutPair)

    """
    nxg = graph.to_networkx()
    result = []
    for u, v in itertools.combinations(range(graph.n), 2):
        if graph.n - 2 < 2:
            break
        view = nx.restricted_view(nxg, (u, v), [])
        components = sorted(tuple(sorted(c))
                            for c in nx.connected_components(view))
        if len(components) >= 2:
            result.append(CutPair(u, v, tuple(components)))
    return result


def semi_hyper_2_connected(graph):
    """Return whether `graph` has connectivity exactly two with every 2-cut
    leaving exactly two components, together with all of its 2-cuts.

    :param Graph graph: The graph
    :rtype: tuple(bool, list(CutPair))

    """
    if graph.n < 3:
        return False, []
    cuts = cut_pairs(graph)
    if vertex_connectivity(graph, limit=3) != 2:
        return False, cuts
    return all(len(cut.components) == 2 for cut in cuts), cuts


def subdivide(graph, edge, times):
    """Replace an edge by a path through `times` new vertices. For a
    :class:`Graph` the edge is a ``(u, v)`` pair and the new vertices run
    from ``u`` to ``v``; for a :class:`Multigraph` it is a token and they run
    from the token's first endpoint to its second.

    :param graph: The graph or multigraph
    :param edge: The edge to subdivide
    :param int times: The number of vertices to insert
    :returns: The new graph and the inserted vertex ids in path order
    :rtype: tuple
    :raises: MissingEdge, ValueError

    """
    if times < 1:
        raise ValueError('Subdivision count must be positive, got %s' % times)
    inserted = tuple(range(graph.n, graph.n + times))
    if isinstance(graph, Multigraph):
        u, v = graph.endpoints(edge)
        path = (u,) + inserted + (v,)
        token = max(graph.tokens) + 1
        edges = [e for e in graph.edges if e[0] != edge]
        for a, b in zip(path, path[1:]):
            edges.append((token, a, b))
            token += 1
        return Multigraph(graph.n + times, edges), inserted
    u, v = edge
    if not (0 <= u < graph.n and 0 <= v < graph.n) or \
            not graph.has_edge(u, v):
        raise MissingEdge(edge)
    path = (u,) + inserted + (v,)
    edges = [e for e in graph.edges if e != (min(u, v), max(u, v))]
    edges.extend(zip(path, path[1:]))
    return build_graph(graph.n + times, edges), inserted


def smooth_degree2(graph, vertices):
    """Suppress degree-2 vertices, merging the two edges at each into one.
    Surviving vertices keep their relative order and are renumbered densely.

    :param graph: A :class:`Graph` or :class:`Multigraph`
    :param vertices: The vertices to suppress
    :rtype: Multigraph
    :raises: DegreeNotTwo

    """
    multi = graph if isinstance(graph, Multigraph) \
        else Multigraph.from_graph(graph)
    for vertex in vertices:
        if multi.degree(vertex) != 2:
            raise DegreeNotTwo(vertex, multi.degree(vertex))
    edges = collections.OrderedDict((t, (u, v)) for t, u, v in multi.edges)
    token = max(edges) + 1 if edges else 0
    for vertex in sorted(vertices):
        ends = [(t, v if u == vertex else u)
                for t, (u, v) in edges.items() if vertex in (u, v)]
        if len(ends) != 2:
            raise NotSimple('vertex %s lies on a loop' % vertex)
        (first, x), (second, y) = ends
        del edges[first], edges[second]
        edges[token] = (x, y)
        token += 1
    removed = set(vertices)
    keep = [v for v in range(multi.n) if v not in removed]
    mapping = dict((v, i) for i, v in enumerate(keep))
    return Multigraph(len(keep), [(i, mapping[u], mapping[v]) for i, (u, v)
                                  in enumerate(edges.values())])


def is_isomorphic(first, second):
    """Return whether two simple graphs are isomorphic

    :param Graph first: A graph
    :param Graph second: Another graph
    :rtype: bool

    """
    if first.n != second.n or len(first.edges) != len(second.edges):
        return False
    if degree_sequence(first) != degree_sequence(second):
        return False
    return nx.is_isomorphic(first.to_networkx(), second.to_networkx())


def canonical_form(graph, budget=None):
    """Return a certificate that is equal for two graphs exactly when they
    are isomorphic: the lexicographically minimal upper-triangle adjacency
    bitstring (graph6 column order) over the leaves of an
    individualization-refinement search tree, prefixed by the vertex count.

    :param Graph graph: The graph
    :param int budget: Maximum search-tree nodes, defaults to
        ``POLYPROD_CANONICAL_BUDGET``
    :rtype: str
    :raises: SearchBudgetExceeded

    """
    bits, _order = _CanonicalSearch(graph, budget).run()
    return '%d:%x' % (graph.n, int(bits, 2)) if bits else '%d:' % graph.n


def canonical_graph(graph, budget=None):
    """Return `graph` relabeled into its canonical vertex order

    :param Graph graph: The graph
    :param int budget: Maximum search-tree nodes
    :rtype: Graph

    """
    _bits, order = _CanonicalSearch(graph, budget).run()
    position = [0] * graph.n
    for index, vertex in enumerate(order):
        position[vertex] = index
    return graph.relabel(position)


def iter_automorphisms(graph, cap=None, limit=None):
    """Yield the automorphisms of `graph` as tuples ``p`` with ``p[v]`` the
    image of ``v``, in the VF2 matcher's order.

    :param Graph graph: The graph
    :param int cap: Vertex cap, defaults to the process search cap
    :param int limit: Maximum automorphisms to enumerate
    :raises: SearchBudgetExceeded

    """
    utils.ensure_within_cap(graph.n, cap, 'automorphism search')
    if limit is None:
        limit = utils.DEFAULT_AUTOMORPHISM_LIMIT
    nxg = graph.to_networkx()
    matcher = isomorphism.GraphMatcher(nxg, nxg)
    for count, mapping in enumerate(matcher.isomorphisms_iter()):
        if count >= limit:
            raise utils.SearchBudgetExceeded(limit, 'automorphism enumeration')
        yield tuple(mapping[v] for v in range(graph.n))


def automorphisms(graph, cap=None, limit=None):
    """Return all automorphisms of `graph`, sorted

    :param Graph graph: The graph
    :param int cap: Vertex cap, defaults to the process search cap
    :param int limit: Maximum automorphisms to enumerate
    :rtype: list
    :raises: SearchBudgetExceeded

    """
    return sorted(iter_automorphisms(graph, cap, limit))


class _CanonicalSearch(object):
    """Individualization-refinement search with automorphism pruning"""

    def __init__(self, graph, budget):
        self.graph = graph
        self.budget = utils.DEFAULT_CANONICAL_BUDGET \
            if budget is None else budget
        self.nodes = 0
        self.best = None
        self.best_order = None
        self.generators = []

    def run(self):
        if self.graph.n == 0:
            return '', []
        cells = self._refine([list(range(self.graph.n))])
        self._visit(cells, [])
        LOGGER.debug('Canonical search on %r visited %s nodes, found %s '
                     'automorphisms', self.graph, self.nodes,
                     len(self.generators))
        return self.best, self.best_order

    def _refine(self, cells):
        adjacency = self.graph.adjacency
        while True:
            index = {}
            for position, cell in enumerate(cells):
                for vertex in cell:
                    index[vertex] = position
            refined = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups = collections.defaultdict(list)
                for vertex in cell:
                    signature = tuple(sorted(collections.Counter(
                        index[w] for w in adjacency[vertex]).items()))
                    groups[signature].append(vertex)
                for signature in sorted(groups):
                    refined.append(sorted(groups[signature]))
            if len(refined) == len(cells):
                return refined
            cells = refined

    def _leaf(self, cells):
        order = [cell[0] for cell in cells]
        adjacency = self.graph.adjacency
        bits = ''.join('1' if order[i] in adjacency[order[j]] else '0'
                       for j in range(1, len(order)) for i in range(j))
        if self.best is None or bits < self.best:
            self.best, self.best_order = bits, order
        elif bits == self.best:
            image = [0] * len(order)
            for vertex, target in zip(order, self.best_order):
                image[vertex] = target
            self.generators.append(tuple(image))

    def _orbit_roots(self, prefix):
        parent = list(range(self.graph.n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for generator in self.generators:
            if any(generator[p] != p for p in prefix):
                continue
            for vertex, image in enumerate(generator):
                a, b = find(vertex), find(image)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return find

    def _visit(self, cells, prefix):
        self.nodes += 1
        if self.nodes > self.budget:
            raise utils.SearchBudgetExceeded(self.budget, 'canonical search')
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1),
                      None)
        if target is None:
            self._leaf(cells)
            return
        explored = []
        for vertex in cells[target]:
            if explored:
                find = self._orbit_roots(prefix)
                if any(find(vertex) == find(done) for done in explored):
                    continue
            split = cells[:target] + [[vertex],
                                      [v for v in cells[target]
                                       if v != vertex]] + cells[target + 1:]
            self._visit(self._refine(split), prefix + [vertex])
            explored.append(vertex)


class GraphError(utils.PolyprodException):
    pass


class LoopEdge(GraphError):
    """Raised when an edge joins a vertex to itself"""
    def __init__(self, vertex):
        super(LoopEdge, self).__init__()
        self.vertex = vertex

    def __str__(self):
        return 'Loop at vertex %s' % self.vertex


class DuplicateEdge(GraphError):
    """Raised when the same pair appears twice in an edge list"""
    def __init__(self, u, v):
        super(DuplicateEdge, self).__init__()
        self.u = u
        self.v = v

    def __str__(self):
        return 'Duplicate edge (%s, %s)' % (self.u, self.v)


class VertexOutOfRange(GraphError):
    """Raised when an endpoint is not one of ``0..n-1``"""
    def __init__(self, vertex, n):
        super(VertexOutOfRange, self).__init__()
        self.vertex = vertex
        self.n = n

    def __str__(self):
        return 'Vertex %s out of range for %s vertices' % (self.vertex, self.n)


class TooFewVertices(GraphError):
    """Raised when an operation needs more vertices than the graph has"""
    def __init__(self, n, minimum):
        super(TooFewVertices, self).__init__()
        self.n = n
        self.minimum = minimum

    def __str__(self):
        return 'Graph has %s vertices, at least %s required' % (self.n,
                                                                self.minimum)


class MissingEdge(GraphError):
    """Raised when an edge or edge token is not present"""
    def __init__(self, edge):
        super(MissingEdge, self).__init__()
        self.edge = edge

    def __str__(self):
        return 'Edge %s not found' % (self.edge,)


class DegreeNotTwo(GraphError):
    """Raised when smoothing a vertex whose degree is not two"""
    def __init__(self, vertex, degree):
        super(DegreeNotTwo, self).__init__()
        self.vertex = vertex
        self.degree = degree

    def __str__(self):
        return 'Vertex %s has degree %s, not 2' % (self.vertex, self.degree)


class NotSimple(GraphError):
    """Raised when a multigraph cannot be converted to a simple graph"""
    def __init__(self, reason):
        super(NotSimple, self).__init__()
        self.reason = reason

    def __str__(self):
        return 'Not a simple graph: %s' % self.reason
