from pallets_sphinx_themes import get_version

# Project --------------------------------------------------------------

project = "zeongraph"
copyright = "2026 zeongraph contributors"
author = "zeongraph contributors"
release, version = get_version("zeongraph")

# General --------------------------------------------------------------

default_role = "code"
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinxcontrib.log_cabinet",
    "pallets_sphinx_themes",
]
autodoc_member_order = "bysource"
autodoc_typehints = "description"
autodoc_preserve_defaults = True
intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "click": ("https://click.palletsprojects.com/", None),
    "blinker": ("https://blinker.readthedocs.io/", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
}

# HTML -----------------------------------------------------------------

html_theme = "pocoo"
html_sidebars = {
    "index": ["project.html", "localtoc.html", "searchbox.html"],
    "**": ["localtoc.html", "relations.html", "searchbox.html"],
}
singlehtml_sidebars = {"index": ["project.html", "localtoc.html"]}
html_title = f"zeongraph Documentation ({version})"
html_show_sourcelink = False
