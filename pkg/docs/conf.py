# -*- coding: utf-8 -*-
import sys

sys.path.insert(0, '../')

import polyprod

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
]
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
project = 'polyprod'
release = polyprod.__version__
version = '.'.join(release.split('.')[0:1])
exclude_patterns = ['_build']
pygments_style = 'sphinx'
html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'polyproddoc'
latex_elements = {}
latex_documents = [
    ('index', 'polyprod.tex', 'polyprod Documentation', '', 'manual'),
]
man_pages = [
    ('index', 'polyprod', 'polyprod Documentation', [], 1)
]
intersphinx_mapping = {
    'networkx': ('https://networkx.org/documentation/stable/', None),
    'python': ('https://docs.python.org/3', None)
}
