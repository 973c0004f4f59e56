"""Exact-arithmetic toolkit for F/H/Gamma-triangles of simplicial complexes,
local h/gamma-vectors of simplicial subdivisions, Gamma-triangles of finite
Coxeter diagrams, and truncated power-series identity checks."""

__version__ = "0.1.0"
