"""Offline generator of golden data for the radial-manifold solver."""

GENERATOR_VERSION = "oracle-sympy-1"
