"""Exact root-system computations behind rationality of generalized Gelfand-Graev characters."""

__version__ = "0.1.0"
