"""
graph6, JSON and DOT encodings

graph6 strings are decoded and encoded by networkx after the characters and
the length have been validated here, so malformed input is reported with the
offending position.

"""
import collections
import json
import logging

import networkx as nx

from polyprod import graph as graphs
from polyprod import utils

LOGGER = logging.getLogger(__name__)

GRAPH6_HEADER = '>>graph6<<'


def _graph6_size(text):
    """Return the vertex count encoded at the start of `text` and the
    position where the edge data begins"""
    if not text:
        raise MalformedGraph6(0, 'empty string')
    if text[0] != '~':
        return ord(text[0]) - 63, 1
    if len(text) > 1 and text[1] == '~':
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(text) < start + width:
        raise MalformedGraph6(len(text), 'truncated vertex count')
    value = 0
    for char in text[start:start + width]:
        value = (value << 6) | (ord(char) - 63)
    return value, start + width


def parse_graph6(text):
    """Decode a graph6 string, with or without the ``>>graph6<<`` header

    :param str text: The graph6 string
    :rtype: Graph
    :raises: MalformedGraph6

    """
    if isinstance(text, bytes):
        text = text.decode('ascii', 'replace')
    text = text.strip()
    offset = 0
    if text.startswith(GRAPH6_HEADER):
        offset = len(GRAPH6_HEADER)
        text = text[offset:]
    for position, char in enumerate(text):
        if not 63 <= ord(char) <= 126:
            raise MalformedGraph6(offset + position,
                                  'invalid character %r' % char)
    n, start = _graph6_size(text)
    expected = start + (n * (n - 1) // 2 + 5) // 6
    if len(text) != expected:
        raise MalformedGraph6(offset + min(len(text), expected),
                              'expected %s characters for %s vertices, got '
                              '%s' % (expected, n, len(text)))
    try:
        nxg = nx.from_graph6_bytes(text.encode('ascii'))
    except nx.NetworkXError as error:
        raise MalformedGraph6(offset, str(error))
    return graphs.build_graph(n, nxg.edges())


def emit_graph6(graph):
    """Encode a graph as graph6 without the header

    :param Graph graph: The graph
    :rtype: str

    """
    data = nx.to_graph6_bytes(graph.to_networkx(), header=False)
    return data.decode('ascii').strip()


def iter_graph6(lines):
    """Yield ``(line number, Graph)`` for every non-blank line of a graph6
    stream

    :param lines: An iterable of strings
    :raises: MalformedGraph6

    """
    for number, line in enumerate(lines, 1):
        line = line.strip()
        if line:
            yield number, parse_graph6(line)


def emit_json(graph):
    """Encode a graph as compact JSON, ``{"n":2,"edges":[[0,1]]}``

    :param Graph graph: The graph
    :rtype: str

    """
    document = collections.OrderedDict([
        ('n', graph.n), ('edges', [list(edge) for edge in graph.edges])])
    return json.dumps(document, separators=(',', ':'))


def parse_json(text):
    """Decode a graph from its JSON object

    :param str text: The JSON text
    :rtype: Graph
    :raises: MalformedJson

    """
    try:
        document = json.loads(text)
    except ValueError as error:
        raise MalformedJson(str(error))
    if not isinstance(document, dict) or set(document) != {'n', 'edges'}:
        raise MalformedJson('expected an object with the keys n and edges')
    n, edges = document['n'], document['edges']
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise MalformedJson('n must be a non-negative integer')
    if not isinstance(edges, list) or any(
            not isinstance(edge, list) or len(edge) != 2 or
            any(not isinstance(v, int) or isinstance(v, bool) for v in edge)
            for edge in edges):
        raise MalformedJson('edges must be a list of integer pairs')
    try:
        return graphs.build_graph(n, [tuple(edge) for edge in edges])
    except graphs.GraphError as error:
        raise MalformedJson(str(error))


def emit_dot(graph, labeling=None):
    """Render a graph in the DOT language, labeling product vertices with
    their pairs when a :class:`~polyprod.products.ProductLabeling` is given

    :param Graph graph: The graph
    :param labeling: Optional product labeling
    :rtype: str

    """
    lines = ['graph G {']
    for vertex in range(graph.n):
        label = labeling.label(vertex) if labeling else str(vertex)
        lines.append('  %s [label="%s"];' % (vertex, label))
    for u, v in graph.edges:
        lines.append('  %s -- %s;' % (u, v))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def read_graph(text):
    """Decode a graph given as JSON (text starting with ``{``) or graph6

    :param str text: The encoded graph
    :rtype: Graph
    :raises: MalformedJson, MalformedGraph6

    """
    text = text.strip()
    if text.startswith('{'):
        return parse_json(text)
    return parse_graph6(text)


def write_graph(graph, fmt, labeling=None):
    """Encode a graph in the named format

    :param Graph graph: The graph
    :param str fmt: ``g6``, ``json`` or ``dot``
    :param labeling: Optional product labeling for DOT
    :rtype: str
    :raises: ValueError

    """
    if fmt == 'g6':
        return emit_graph6(graph)
    elif fmt == 'json':
        return emit_json(graph)
    elif fmt == 'dot':
        return emit_dot(graph, labeling).rstrip('\n')
    raise ValueError('Unknown format %r' % fmt)


class FormatError(utils.PolyprodException):
    pass


class MalformedGraph6(FormatError):
    """Raised when a graph6 string cannot be decoded"""
    def __init__(self, position, reason):
        super(MalformedGraph6, self).__init__()
        self.position = position
        self.reason = reason

    def __str__(self):
        return 'Malformed graph6 at position %s: %s' % (self.position,
                                                        self.reason)


class MalformedJson(FormatError):
    """Raised when a JSON graph document is invalid"""
    def __init__(self, reason):
        super(MalformedJson, self).__init__()
        self.reason = reason

    def __str__(self):
        return 'Malformed graph JSON: %s' % self.reason
