from dwchern.global_constants import VERSION


__version__ = VERSION
"""An alias for :const:`~dwchern.global_constants.VERSION`."""
