# Note: This file was automatically generated by make_files.py.
# To make changes to this file, edit that instead of this.

REVERSE_SPHINX_PATH = '../..'