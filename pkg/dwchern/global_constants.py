"""String constants used throughout the DWChern project.

This module defines a place where string constants such as URLs can be defined
and changed without having to go through multiple files to manually change the
values in each of them.

In addition to the :ref:`dwchern` Python module, these constants are used by
the Sphinx documentation and scripts at the top level of the project.
"""
from datetime import date


PYPI_URL = 'https://pypi.org/project/dwchern/'
"""The URL of the DWChern project on PyPI."""

GITHUB_URL = 'https://github.com/dwchern/dwchern'
"""The URL of the DWChern repository on GitHub."""

DOCS_URL = 'https://dwchern.readthedocs.io/en/latest/index.html'
"""The URL of DWChern documentation on Read the Docs."""

AUTHOR = 'The DWChern developers'
"""The authors of the DWChern project."""

COPYRIGHT = f'2024-{date.today().year} The DWChern developers'
"""Copyright information with an automatically updating year."""

VERSION = '0.3.0'
"""The current version of the DWChern project."""

SPHINX_PATH = 'doc/sphinx'
"""The path to the Sphinx documentation directory, relative to the top-level
DWChern directory.
"""

REVERSE_SPHINX_PATH = '../..'
"""The path to the top-level DWChern directory, relative to the Sphinx
documentation directory.
"""
