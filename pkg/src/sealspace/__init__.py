"""Facets-pairing structures on cubes, their seal spaces, and glue-back complexes."""

__version__ = "0.1.0"
