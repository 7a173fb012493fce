"""Exact-arithmetic toolkit for graded graphs (Bratteli diagrams) and their pascalizations."""

__version__ = "0.1.0"
