"""Rendering of computation results as TSV, JSON and DOT text."""
