"""
A catalog of named representatives, persisted as JSON

Every entry keeps its graph as graph6 together with the family and
parameters that produced it and a provenance tag: ``published-figure`` for
graphs reproduced from published constructions, ``derived-representative``
for graphs chosen to satisfy a stated property.

"""
import collections
import json
import logging

from polyprod import formats
from polyprod import generators

LOGGER = logging.getLogger(__name__)

PUBLISHED = 'published-figure'
DERIVED = 'derived-representative'


class CatalogEntry(collections.namedtuple(
        'CatalogEntry', ['family', 'params', 'graph6', 'provenance'])):
    """A named graph: family, parameters, graph6 encoding and provenance"""

    def graph(self):
        return formats.parse_graph6(self.graph6)

    def as_dict(self):
        return collections.OrderedDict([
            ('family', self.family), ('params', dict(self.params)),
            ('graph6', self.graph6), ('provenance', self.provenance)])

    def sort_key(self):
        return self.family, sorted(self.params.items())


def _entry(family, params, graph, provenance):
    return CatalogEntry(family, params, formats.emit_graph6(graph),
                        provenance)


def build_catalog():
    """Return the catalog entries sorted by family then parameters

    :rtype: list(CatalogEntry)

    """
    empty_final = generators.T3333Script((), 'F1')
    entries = [
        _entry('condition_0', {}, generators.c0_representative(), DERIVED),
        _entry('condition_1', {}, generators.stacked_prism(5, 2), DERIVED),
        _entry('condition_2', {}, generators.c2_representative(), DERIVED),
        _entry('condition_3', {}, generators.tetrahedron(), DERIVED),
        _entry('cubic_build', {'j2': 'cube'},
               generators.cubic_build(generators.cube_build_demo())[0],
               DERIVED),
        _entry('desargues', {}, generators.desargues(), PUBLISHED),
        _entry('dou_H', {'ell': 4},
               generators.dou_H(generators.DouHSpec(4, ((2, 7), (3, 6)))),
               PUBLISHED),
        _entry('petersen', {}, generators.petersen(), PUBLISHED),
        _entry('quad_factor', {'m': 6, 'i': 3},
               generators.quad_factor(6, 3)[0], PUBLISHED),
        _entry('stacked_cube_factor', {'N': 1, 'M': 2},
               generators.stacked_cube_factor(1, 2)[0], PUBLISHED),
        _entry('odd_prism_factor', {'N': 1, 'M': 3},
               generators.odd_prism_factor(1, 3), PUBLISHED),
        _entry('t3333', {'moves': 0, 'final': 'F1'},
               generators.t3333_build(empty_final), PUBLISHED)
    ]
    return sorted(entries, key=CatalogEntry.sort_key)


def dumps(entries):
    """Serialize catalog entries as a JSON list

    :param list entries: The entries
    :rtype: str

    """
    return json.dumps([entry.as_dict() for entry in
                       sorted(entries, key=CatalogEntry.sort_key)],
                      indent=2, sort_keys=True)


def loads(text):
    """Read catalog entries from their JSON list

    :param str text: The JSON text
    :rtype: list(CatalogEntry)
    :raises: ValueError, KeyError

    """
    return [CatalogEntry(item['family'], item['params'], item['graph6'],
                         item['provenance']) for item in json.loads(text)]


def write_catalog(path, entries=None):
    """Build (unless given) and write the catalog to `path`

    :param str path: The output file
    :param list entries: Entries to write, defaults to :func:`build_catalog`
    :rtype: list(CatalogEntry)

    """
    entries = build_catalog() if entries is None else entries
    with open(path, 'w') as handle:
        handle.write(dumps(entries) + '\n')
    LOGGER.info('Wrote %s catalog entries to %s', len(entries), path)
    return entries


def read_catalog(path):
    with open(path) as handle:
        return loads(handle.read())
