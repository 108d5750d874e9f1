"""Exact subsum-set computations and exhaustive theorem checks over Z/pZ."""

__version__ = "0.1.0"
