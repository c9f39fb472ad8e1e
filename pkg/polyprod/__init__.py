"""
polyprod: polyhedral Kronecker and Cartesian graph products

polyprod constructs, recognizes and verifies planar 3-connected (polyhedral)
Kronecker and Cartesian products: products and covers, planar embeddings and
face structure, odd-face conditions, factor witnesses, Kronecker roots,
Cartesian forms, family generators and a desk-scale experiment harness.

"""
import logging

from polyprod.graph import build_graph
from polyprod.graph import canonical_form
from polyprod.graph import Graph
from polyprod.graph import is_isomorphic
from polyprod.graph import Multigraph
from polyprod.products import cartesian
from polyprod.products import cover
from polyprod.products import kronecker
from polyprod.products import prism
from polyprod.utils import PolyprodException
from polyprod.utils import SearchBudgetExceeded
from polyprod.utils import search_cap
from polyprod.utils import set_search_cap

__version__ = '1.0.0'
version = __version__

logging.getLogger('polyprod').addHandler(logging.NullHandler())

__all__ = [
    '__version__',
    'build_graph',
    'canonical_form',
    'cartesian',
    'cover',
    'Graph',
    'is_isomorphic',
    'kronecker',
    'Multigraph',
    'PolyprodException',
    'prism',
    'SearchBudgetExceeded',
    'search_cap',
    'set_search_cap',
    'version'
]
