"""
Planar embeddings, faces and the planar predicates

An :class:`Embedding` is a rotation system over *darts*: the edge at index
``e`` contributes dart ``2e`` leaving its first endpoint and dart ``2e + 1``
leaving its second. Faces are traced by following a dart to its head and
leaving by the dart after its twin in the head's rotation.

.. code:: python

    from polyprod import generators, planar

    cube = generators.basic('cube')
    embedding = planar.planar_embed(cube)
    planar.face_stats(planar.faces(embedding))
    # FaceStats(p=8, q=12, r=6, r_k={4: 6})

"""
import collections
import itertools
import logging

import networkx as nx

from polyprod import graph as graphs
from polyprod import utils

LOGGER = logging.getLogger(__name__)

FaceStats = collections.namedtuple('FaceStats', ['p', 'q', 'r', 'r_k'])
OddFacePattern = collections.namedtuple('OddFacePattern',
                                        ['faces', 'pairs', 'triples'])


class Embedding(object):
    """A rotation system of a :class:`~polyprod.graph.Graph` or
    :class:`~polyprod.graph.Multigraph`

    :param graph: The embedded graph
    :param ends: ``(u, v)`` endpoints per edge index
    :param rotation: Per vertex, the darts leaving it in cyclic order
    :param bool disconnected: Whether the graph has several components

    """
    def __init__(self, graph, ends, rotation, disconnected=False):
        self.graph = graph
        self.ends = tuple(ends)
        self.rotation = tuple(tuple(darts) for darts in rotation)
        self.disconnected = disconnected
        self._faces = None

    def __repr__(self):
        return '<polyprod.Embedding graph=%r disconnected=%s>' % (
            self.graph, self.disconnected)

    def tail(self, dart):
        return self.ends[dart >> 1][dart & 1]

    def head(self, dart):
        return self.ends[dart >> 1][1 - (dart & 1)]

    @property
    def outer_face(self):
        """Return the index of the designated outer face

        :rtype: int

        """
        return self.faces().outer

    def faces(self):
        """Return the traced faces, computed once

        :rtype: FaceSet
        :raises: CorruptRotation

        """
        if self._faces is None:
            self._faces = faces(self)
        return self._faces

    def mirror(self):
        """Return the reflected embedding

        :rtype: Embedding

        """
        return Embedding(self.graph, self.ends,
                         [tuple(reversed(darts)) for darts in self.rotation],
                         self.disconnected)


class FaceSet(object):
    """The faces of an embedding as dart cycles and vertex walks. Faces are
    ordered by their walks, each walk starting at its minimal rotation.

    """
    def __init__(self, darts, walks, vertex_count, edge_count, outer=0,
                 disconnected=False):
        self.darts = tuple(darts)
        self.walks = tuple(walks)
        self.lengths = tuple(len(face) for face in self.darts)
        self.parity = tuple(length % 2 == 1 for length in self.lengths)
        self.vertex_count = vertex_count
        self.edge_count = edge_count
        self.outer = outer
        self.disconnected = disconnected
        self.face_of = dict((dart, index)
                            for index, face in enumerate(self.darts)
                            for dart in face)

    def __getitem__(self, index):
        return self.walks[index]

    def __iter__(self):
        return iter(self.walks)

    def __len__(self):
        return len(self.walks)

    def __repr__(self):
        return '<polyprod.FaceSet r=%s lengths=%s>' % (len(self),
                                                      list(self.lengths))

    def vertex_sets(self):
        """Return the set of vertices on each face

        :rtype: tuple

        """
        return tuple(frozenset(walk) for walk in self.walks)

    def odd_faces(self):
        """Return the indexes of the faces of odd length

        :rtype: list

        """
        return [i for i, odd in enumerate(self.parity) if odd]

    def find(self, walk):
        """Return the index of the face whose boundary is `walk` up to
        rotation and reflection, or None

        :param walk: A cyclic vertex sequence
        :rtype: int

        """
        target = canonical_walk(walk)
        for index, candidate in enumerate(self.walks):
            if len(candidate) == len(target) and \
                    canonical_walk(candidate) == target:
                return index
        return None

    def signature(self):
        """Return the sorted canonical walks, identical for embeddings with
        the same faces

        :rtype: tuple

        """
        return tuple(sorted(canonical_walk(walk) for walk in self.walks))


def _minimal_rotation(sequence):
    sequence = tuple(sequence)
    if not sequence:
        return sequence
    return min(sequence[i:] + sequence[:i] for i in range(len(sequence)))


def canonical_walk(walk):
    """Return the lexicographically minimal rotation of a cyclic walk over
    both directions

    :param walk: A cyclic vertex sequence
    :rtype: tuple

    """
    return min(_minimal_rotation(walk), _minimal_rotation(reversed(walk)))


def _rotate_to_minimum(darts, walk):
    if not walk:
        return tuple(darts), tuple(walk)
    best = min(range(len(walk)), key=lambda i: walk[i:] + walk[:i])
    return darts[best:] + darts[:best], walk[best:] + walk[:best]


def faces(embedding):
    """Trace the faces of an embedding. For a disconnected graph the outer
    face of every component (its longest face) is merged into one shared
    outer face.

    :param Embedding embedding: The embedding
    :rtype: FaceSet
    :raises: CorruptRotation

    """
    position = {}
    for vertex, darts in enumerate(embedding.rotation):
        for index, dart in enumerate(darts):
            if dart in position:
                raise CorruptRotation('dart %s listed twice' % dart)
            if dart >> 1 >= len(embedding.ends) or \
                    embedding.tail(dart) != vertex:
                raise CorruptRotation('dart %s is not at vertex %s' %
                                      (dart, vertex))
            position[dart] = index
    if len(position) != 2 * len(embedding.ends):
        raise CorruptRotation('%s darts for %s edges' %
                              (len(position), len(embedding.ends)))

    traced = []
    visited = set()
    for start in sorted(position):
        if start in visited:
            continue
        darts, dart = [], start
        while dart not in visited:
            visited.add(dart)
            darts.append(dart)
            around = embedding.rotation[embedding.head(dart)]
            dart = around[(position[dart ^ 1] + 1) % len(around)]
        if dart != start:
            raise CorruptRotation('face walk from dart %s does not close' %
                                  start)
        walk = tuple(embedding.tail(d) for d in darts)
        traced.append(_rotate_to_minimum(tuple(darts), walk))

    vertex_count = embedding.graph.n
    edge_count = len(embedding.ends)
    if not traced:
        return FaceSet([()], [()], vertex_count, edge_count)
    if embedding.disconnected:
        traced = _merge_outer_faces(embedding, traced)
        merged = traced.pop()
        traced.sort(key=lambda face: face[1])
        traced.append(merged)
        outer = len(traced) - 1
    else:
        traced.sort(key=lambda face: face[1])
        outer = max(range(len(traced)), key=lambda i: (len(traced[i][0]), -i))
    return FaceSet([face[0] for face in traced], [face[1] for face in traced],
                   vertex_count, edge_count, outer, embedding.disconnected)


def _merge_outer_faces(embedding, traced):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(embedding.graph.n))
    nxg.add_edges_from(embedding.ends)
    component = {}
    for index, members in enumerate(sorted(
            (sorted(c) for c in nx.connected_components(nxg)))):
        for vertex in members:
            component[vertex] = index
    grouped = collections.defaultdict(list)
    for face in traced:
        grouped[component[face[1][0]]].append(face)
    inner, outer_darts, outer_walk = [], (), ()
    for key in sorted(grouped):
        candidates = sorted(grouped[key], key=lambda face: face[1])
        longest = max(candidates, key=lambda face: len(face[0]))
        for face in candidates:
            if face is longest:
                outer_darts += face[0]
                outer_walk += face[1]
            else:
                inner.append(face)
    return inner + [(outer_darts, outer_walk)]


def face_stats(face_set):
    """Return the vertex, edge and face counts of a face set and the number
    of faces of each length

    :param FaceSet face_set: The faces
    :rtype: FaceStats

    """
    return FaceStats(face_set.vertex_count, face_set.edge_count,
                     len(face_set), dict(collections.Counter(face_set.lengths)))


def _graph_darts(graph):
    def dart(tail, head):
        index = graph.edge_index(tail, head)
        return 2 * index + (0 if graph.edges[index][0] == tail else 1)
    return dart


def planar_embed(graph):
    """Return a planar embedding of a graph or multigraph, or None when it
    is not planar. Of an embedding and its reflection, the one tracing the
    lexicographically smallest face walk is returned.

    :param graph: A :class:`~polyprod.graph.Graph` or
        :class:`~polyprod.graph.Multigraph`
    :rtype: Embedding or None

    """
    if isinstance(graph, graphs.Multigraph):
        embedding = _embed_multigraph(graph)
    else:
        embedding = _embed_graph(graph)
    if embedding is None:
        LOGGER.debug('%r is not planar', graph)
        return None
    mirrored = embedding.mirror()
    if mirrored.faces().walks[0] < embedding.faces().walks[0]:
        return mirrored
    return embedding


def _connected(n, ends):
    if n == 0:
        return True
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(ends)
    return nx.is_connected(nxg)


def _embed_graph(graph):
    is_planar, certificate = nx.check_planarity(graph.to_networkx())
    if not is_planar:
        return None
    dart = _graph_darts(graph)
    rotation = [tuple(dart(v, w) for w in certificate.neighbors_cw_order(v))
                if graph.degree(v) else () for v in range(graph.n)]
    return Embedding(graph, graph.edges, rotation,
                     not graphs.is_connected(graph))


def _embed_multigraph(graph):
    # Every edge is subdivided once (loops twice) so the planarity test runs
    # on a simple graph; subdivision vertex n + 2e + k sits on edge e.
    ends = [(u, v) for _t, u, v in graph.edges]
    subdivided = nx.Graph()
    subdivided.add_nodes_from(range(graph.n))
    for index, (u, v) in enumerate(ends):
        first = graph.n + 2 * index
        if u == v:
            nx.add_path(subdivided, [u, first, first + 1, u])
        else:
            nx.add_path(subdivided, [u, first, v])
    is_planar, certificate = nx.check_planarity(subdivided)
    if not is_planar:
        return None
    rotation = []
    for vertex in range(graph.n):
        darts = []
        if subdivided.degree(vertex):
            for node in certificate.neighbors_cw_order(vertex):
                index, step = divmod(node - graph.n, 2)
                u, v = ends[index]
                if u == v:
                    darts.append(2 * index + step)
                else:
                    darts.append(2 * index + (0 if u == vertex else 1))
        rotation.append(tuple(darts))
    return Embedding(graph, ends, rotation, not _connected(graph.n, ends))


def _flip(embedding, cut, component):
    """Mirror `component` across the 2-cut `cut`, or return None when its
    darts around a cut vertex are not consecutive. That needs a block
    hanging at the cut vertex between them, so 2-connected graphs always
    flip."""
    members = set(component)
    rotation = list(embedding.rotation)
    for vertex in members:
        rotation[vertex] = tuple(reversed(rotation[vertex]))
    for vertex in (cut.u, cut.v):
        around = rotation[vertex]
        inside = [embedding.head(d) in members for d in around]
        starts = [i for i in range(len(around))
                  if inside[i] and not inside[i - 1]]
        if len(starts) != 1:
            return None
        block = [(starts[0] + j) % len(around) for j in range(sum(inside))]
        flipped = list(around)
        for index, dart in zip(block, reversed([around[i] for i in block])):
            flipped[index] = dart
        rotation[vertex] = tuple(flipped)
    return Embedding(embedding.graph, embedding.ends, rotation,
                     embedding.disconnected)


def embeddings(graph, limit=None):
    """Yield the distinct face structures of a planar simple graph: the
    embedding from :func:`planar_embed` and every embedding reachable from it
    by flipping one side of a 2-cut. A 3-connected graph yields exactly one.

    :param Graph graph: The graph
    :param int limit: Maximum embeddings, defaults to
        ``POLYPROD_EMBEDDING_LIMIT``

    """
    base = planar_embed(graph)
    if base is None:
        return
    limit = utils.DEFAULT_EMBEDDING_LIMIT if limit is None else limit
    cuts = graphs.cut_pairs(graph) if graph.n >= 4 else []
    seen = set([base.faces().signature()])
    queue = collections.deque([base])
    yield base
    while queue:
        current = queue.popleft()
        for cut in cuts:
            for component in cut.components:
                candidate = _flip(current, cut, component)
                if candidate is None:
                    continue
                face_set = candidate.faces()
                if face_set.vertex_count - face_set.edge_count + \
                        len(face_set) != 2:
                    continue
                signature = face_set.signature()
                if signature in seen:
                    continue
                if len(seen) >= limit:
                    LOGGER.warning('Embedding limit %s reached for %r',
                                   limit, graph)
                    return
                seen.add(signature)
                queue.append(candidate)
                yield candidate


def is_planar(graph):
    return nx.check_planarity(graph.to_networkx())[0]


def is_polyhedron(graph):
    """Return whether `graph` is simple, planar, 3-connected and has at
    least four vertices

    :param graph: The graph
    :rtype: bool

    """
    if not isinstance(graph, graphs.Graph) or graph.n < 4:
        return False
    if len(graph.edges) > 3 * graph.n - 6:
        return False
    if min(graph.degree(v) for v in range(graph.n)) < 3:
        return False
    if not is_planar(graph):
        return False
    return graphs.vertex_connectivity(graph, limit=3) >= 3


def is_outerplanar(graph):
    """Return whether `graph` has a planar embedding with every vertex on
    one face, tested as planarity after adding a vertex adjacent to all.

    :param Graph graph: The graph
    :rtype: bool

    """
    apex = nx.Graph(graph.to_networkx())
    apex.add_edges_from((graph.n, v) for v in range(graph.n))
    return nx.check_planarity(apex)[0]


def is_facial_cycle(graph, walk):
    """Return whether `walk` is a cycle of `graph` bounding a face in some
    planar embedding: it must be a cycle, and `graph` plus a vertex adjacent
    to all of its vertices must be planar.

    :param Graph graph: The graph
    :param walk: A cyclic vertex sequence
    :rtype: bool

    """
    walk = tuple(walk)
    if len(walk) < 3 or len(set(walk)) != len(walk):
        return False
    if any(not 0 <= v < graph.n for v in walk):
        return False
    for u, v in zip(walk, walk[1:] + walk[:1]):
        if not graph.has_edge(u, v):
            return False
    apex = nx.Graph(graph.to_networkx())
    apex.add_edges_from((graph.n, v) for v in walk)
    return nx.check_planarity(apex)[0]


def is_quadrangulation(graph):
    """Return whether `graph` is polyhedral with every face a quadrilateral

    :param Graph graph: The graph
    :rtype: bool

    """
    if not is_polyhedron(graph):
        return False
    return set(faces(planar_embed(graph)).lengths) == set([4])


def odd_face_pattern(graph, embedding=None):
    """Return the odd faces of a planar graph with the vertex sets shared by
    every pair and every triple of them

    :param Graph graph: The graph
    :param Embedding embedding: The embedding to use, by default
        :func:`planar_embed`
    :rtype: OddFacePattern
    :raises: NonPlanarInput

    """
    if embedding is None:
        embedding = planar_embed(graph)
        if embedding is None:
            raise NonPlanarInput(graph)
    face_set = embedding.faces()
    odd = [face_set.walks[i] for i in face_set.odd_faces()]
    sets = [frozenset(walk) for walk in odd]
    pairs = dict(((i, j), sets[i] & sets[j])
                 for i, j in itertools.combinations(range(len(odd)), 2))
    triples = dict(((i, j, k), sets[i] & sets[j] & sets[k])
                   for i, j, k in itertools.combinations(range(len(odd)), 3))
    return OddFacePattern(tuple(odd), pairs, triples)


def dual(embedding):
    """Return the dual multigraph: one vertex per face and, for every edge,
    an edge joining the faces on its two sides

    :param Embedding embedding: The embedding
    :rtype: Multigraph

    """
    face_set = embedding.faces()
    return graphs.Multigraph(len(face_set), [
        (index, face_set.face_of[2 * index], face_set.face_of[2 * index + 1])
        for index in range(len(embedding.ends))])


class PlanarError(utils.PolyprodException):
    pass


class CorruptRotation(PlanarError):
    """Raised when a rotation system does not describe an embedding"""
    def __init__(self, reason):
        super(CorruptRotation, self).__init__()
        self.reason = reason

    def __str__(self):
        return 'Corrupt rotation system: %s' % self.reason


class NonPlanarInput(PlanarError):
    """Raised when a planar graph is required"""
    def __init__(self, graph):
        super(NonPlanarInput, self).__init__()
        self.graph = graph

    def __str__(self):
        return 'Graph %r is not planar' % (self.graph,)
