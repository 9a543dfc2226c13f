"""Exact Lie-theory engine for involutions of compact 4-symmetric spaces."""

__version__ = "0.1.0"
