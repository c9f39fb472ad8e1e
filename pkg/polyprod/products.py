"""
Kronecker and Cartesian products, covers and prisms

Product vertices are numbered row-major: the pair ``(a, b)`` becomes
``a * |V(B)| + b``. The :class:`ProductLabeling` returned with every product
maps the numbers back to their pairs.

"""
import collections
import logging

from polyprod import graph as graphs
from polyprod import planar

LOGGER = logging.getLogger(__name__)

K2 = graphs.build_graph(2, [(0, 1)])
COVER_TAGS = ('x', 'y')

Product = collections.namedtuple('Product', ['graph', 'labeling'])


class ProductLabeling(object):
    """Maps product vertices to their factor pairs. For covers the second
    coordinate is rendered with the tags ``x`` and ``y``.

    :param pairs: ``pairs[v]`` is the ``(a, b)`` pair of vertex ``v``
    :param tuple tags: Optional names for the second coordinate

    """
    def __init__(self, pairs, tags=None):
        self.pairs = tuple(pairs)
        self.tags = tags
        self._index = dict((pair, v) for v, pair in enumerate(self.pairs))

    def __getitem__(self, vertex):
        return self.pairs[vertex]

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return '<polyprod.ProductLabeling vertices=%s tags=%s>' % (
            len(self.pairs), self.tags)

    def vertex(self, a, b):
        """Return the product vertex of the pair ``(a, b)``

        :param int a: A vertex of the first factor
        :param int b: A vertex of the second factor
        :rtype: int

        """
        return self._index[(a, b)]

    def label(self, vertex):
        """Return the display label of a product vertex, e.g. ``(3,x)``

        :param int vertex: The product vertex
        :rtype: str

        """
        a, b = self.pairs[vertex]
        if self.tags:
            return '(%s,%s)' % (a, self.tags[b])
        return '(%s,%s)' % (a, b)


def _labeling(first, second, tags=None):
    return ProductLabeling([(a, b) for a in range(first.n)
                            for b in range(second.n)], tags)


def kronecker(first, second):
    """Return the Kronecker (direct, tensor) product: ``(a1, b1)`` and
    ``(a2, b2)`` are adjacent when ``a1a2`` and ``b1b2`` are both edges.

    :param Graph first: The first factor
    :param Graph second: The second factor
    :rtype: Product

    """
    width = second.n
    edges = []
    for a1, a2 in first.edges:
        for b1, b2 in second.edges:
            edges.append((a1 * width + b1, a2 * width + b2))
            edges.append((a1 * width + b2, a2 * width + b1))
    result = graphs.build_graph(first.n * width, edges)
    LOGGER.debug('Kronecker product of %r and %r is %r', first, second, result)
    return Product(result, _labeling(first, second))


def cartesian(first, second):
    """Return the Cartesian product: ``(a1, b1)`` and ``(a2, b2)`` are
    adjacent when one coordinate is equal and the other forms an edge.

    :param Graph first: The first factor
    :param Graph second: The second factor
    :rtype: Product

    """
    width = second.n
    edges = []
    for a in range(first.n):
        for b1, b2 in second.edges:
            edges.append((a * width + b1, a * width + b2))
    for a1, a2 in first.edges:
        for b in range(width):
            edges.append((a1 * width + b, a2 * width + b))
    return Product(graphs.build_graph(first.n * width, edges),
                   _labeling(first, second))


def cover(graph):
    """Return the Kronecker cover ``J ∧ K2``. Vertex ``(a, x)`` is ``2a`` and
    ``(a, y)`` is ``2a + 1``.

    :param Graph graph: The graph J
    :rtype: Product

    """
    product = kronecker(graph, K2)
    return Product(product.graph, ProductLabeling(product.labeling.pairs,
                                                  COVER_TAGS))


def prism(graph):
    """Return the prism ``H □ K2``

    :param Graph graph: The graph H
    :rtype: Graph

    """
    return cartesian(graph, K2).graph


def cover_involution(graph):
    """Return the permutation of ``cover(graph)`` exchanging ``(a, x)`` and
    ``(a, y)`` for every vertex ``a``.

    :param Graph graph: The graph J
    :rtype: tuple

    """
    return tuple(v ^ 1 for v in range(2 * graph.n))


def polyhedral_bounds(graph):
    """Return the number of degree-3 vertices and of quadrilateral faces of
    a planar graph, the two quantities bounded below for polyhedral covers.

    :param Graph graph: A planar graph
    :rtype: tuple(int, int)
    :raises: polyprod.planar.NonPlanarInput

    """
    embedding = planar.planar_embed(graph)
    if embedding is None:
        raise planar.NonPlanarInput(graph)
    stats = planar.face_stats(planar.faces(embedding))
    degree3 = sum(1 for v in range(graph.n) if graph.degree(v) == 3)
    return degree3, stats.r_k.get(4, 0)
