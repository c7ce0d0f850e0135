"""Exact tropical geometry: max-plus polynomials, plane tropical curves,
stable intersection, metric graph Jacobians and curve counts.

Rationals are passed and returned as strings such as "9/2"; curves, cycles
and graphs use the same JSON documents as the tropocalc command-line tool.
"""

import json

from . import _core
from ._core import TropocalcError, canonicalize, evaluate

__all__ = [
    "TropocalcError",
    "abel_jacobi",
    "build_curve",
    "canonicalize",
    "count_curves",
    "essential_support",
    "evaluate",
    "genus",
    "is_balanced",
    "is_tree_metric",
    "jacobian",
    "moduli_distance_vector",
    "sample_configuration",
    "stable_intersection",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def essential_support(poly):
    return [tuple(j) for j in _core.essential_support(poly)]


def build_curve(poly):
    return json.loads(_core.build_curve(poly))


def is_balanced(cycle):
    return _core.is_balanced(_text(cycle))


def stable_intersection(f, g):
    return json.loads(_core.stable_intersection(f, g))


def sample_configuration(d, g, seed):
    return json.loads(_core.sample_configuration(d, g, seed))


def count_curves(d, g=0, seed=None, points=None, threads=0):
    pts = None if points is None else _text(points)
    return json.loads(_core.count_curves(d, g, seed, pts, threads))


def genus(graph):
    return _core.genus(_text(graph))


def jacobian(graph):
    return json.loads(_core.jacobian(_text(graph)))


def abel_jacobi(graph):
    return json.loads(_core.abel_jacobi(_text(graph)))


def moduli_distance_vector(graph):
    return json.loads(_core.moduli_distance_vector(_text(graph)))


def is_tree_metric(values, labels=()):
    ok, tree = _core.is_tree_metric([str(v) for v in values], list(labels))
    return ok, None if tree is None else json.loads(tree)
