"""Finite representations of distributive semilattices."""

try:
    from slrep._core import *  # noqa: F401,F403  (installed layout)
except ImportError:  # build-tree layout: _core sits next to this package
    from _core import *  # noqa: F401,F403
