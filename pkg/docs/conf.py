# -*- coding: utf-8 -*-
#
# python-zeroforcing documentation build configuration file.
#
# Only the values that differ from the sphinx-quickstart defaults are kept.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'python-zeroforcing'
copyright = u'2026, the python-zeroforcing developers'
author = u'the python-zeroforcing developers'

# The short X.Y version and the full version, including alpha/beta/rc tags.
version = u'0.1'
release = u'0.1.0'

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

# the API pages render without these installed
autodoc_mock_imports = ['numpy', 'jsonpickle']

html_theme = 'alabaster'
htmlhelp_basename = 'PythonZeroforcingdoc'

latex_documents = [
    (master_doc, 'PythonZeroforcing.tex',
     u'python-zeroforcing Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'zeroforcing', u'python-zeroforcing Documentation',
     [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
