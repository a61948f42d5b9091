# -*- coding: utf-8 -*-
#
# fracwave documentation build configuration file
#
import sys
import fracwave

sys.path = [''] + sys.path

# General configuration
# ---------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode',
              'sphinx.ext.imgmath', 'sphinx.ext.autosummary',
              'numpydoc']

# math between single backquotes
default_role = 'math'

source_suffix = '.rst'
master_doc = 'index'

project = 'fracwave'
copyright = '2024, fracwave developers'

version = fracwave.__version__
release = version

today_fmt = '%B %d, %Y'
pygments_style = 'sphinx'
numpydoc_show_class_members = False

# Options for HTML output
# -----------------------

html_theme = 'default'
html_theme_options = {
    'collapsiblesidebar': False,
    'stickysidebar': True,
    'sidebarwidth': 230,
}
html_last_updated_fmt = '%b %d, %Y'
htmlhelp_basename = 'fracwavedoc'

# Options for LaTeX output
# ------------------------

latex_documents = [
    ('index', 'fracwave.tex', 'fracwave Documentation',
     'fracwave developers', 'manual'),
]
