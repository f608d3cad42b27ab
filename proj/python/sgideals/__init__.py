"""Finite semigroup analysis: ideal families, classifications, Green's
relations and exhaustive statement verification over small Cayley tables."""

try:
    from ._sgideals import *  # noqa: F401,F403  packaged layout
except ImportError:
    from _sgideals import *  # noqa: F401,F403  build-tree layout
