"""Bousfield class calculus for localized categories of spectra.

Thin wrapper over the compiled _core module; the *_json entry points are
re-exposed here as plain dicts.
"""

import json as _json

try:
    from bousfield._core import *  # noqa: F401,F403
    from bousfield import _core as _c
except ImportError:  # in-tree test runs load _core from the build directory
    from _core import *  # noqa: F401,F403
    import _core as _c

__version__ = "0.1.0"


def report(categories=(), max_n=8):
    return _json.loads(_c.report_json(list(categories), max_n))


def registry(category, cap=16):
    return _json.loads(_c.registry_json(category, cap))


def category_report(category, cap=16):
    return _json.loads(_c.category_report_json(category, cap))


def lattice(category, depth=None):
    return _json.loads(_c.lattice_json(category, depth))


def invlimit(depth):
    return _json.loads(_c.invlimit_json(depth))


def implication_graph(max_n=8):
    return _json.loads(_c.implication_graph_json(max_n))


def localize_info(category, expr):
    if isinstance(expr, str):
        expr = _c.parse(expr)
    return _json.loads(_c.localize(category, expr))
