"""This package defines the user interface of the DWChern program."""
