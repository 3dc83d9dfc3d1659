"""Exact verification toolkit for fat Hoffman graphs with smallest eigenvalue > -3.

Thin dict-based wrappers around the C++ extension module ``_core``; every
heavy operation runs in exact rational arithmetic on the C++ side.
"""

import json as _json

try:
    from . import _core
except ImportError:  # in-tree test runs put _core on sys.path directly
    import _core

InputError = _core.InputError
InternalError = _core.InternalError


def _dumps(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def b_matrix(hoffman_graph):
    """B(h) = A^s - C C^T as a dict, rows in sorted slim-vertex order."""
    return _json.loads(_core.b_matrix(_dumps(hoffman_graph)))


def slim_order(hoffman_graph):
    return _core.slim_order(_dumps(hoffman_graph))


def special_graph(hoffman_graph):
    return _json.loads(_core.special_graph(_dumps(hoffman_graph)))


def is_indecomposable(hoffman_graph):
    return _core.is_indecomposable(_dumps(hoffman_graph))


def decompose(hoffman_graph):
    return _json.loads(_core.decompose(_dumps(hoffman_graph)))


def canonical_form(hoffman_graph):
    """Canonical bytes; equal iff the graphs are role-preserving isomorphic."""
    return _core.canonical_form(_dumps(hoffman_graph))


def classify_lambda_min(matrix, threshold="3"):
    """Exact verdict for lambda_min(matrix) vs -threshold, with certificate."""
    return _json.loads(_core.classify_lambda_min(_dumps(matrix), str(threshold)))


def lambda_min_approx(matrix):
    return _core.lambda_min_approx(_dumps(matrix))


def check_theorem(hoffman_graph, v_star):
    """Conditions (i)-(v), the exact verdict at -3, and their equivalence."""
    return _json.loads(_core.check_theorem(_dumps(hoffman_graph), v_star))


def build_psi(hoffman_graph, v_star):
    return _json.loads(_core.build_psi(_dumps(hoffman_graph), v_star))


def signed_admissibility(signed_graph, v_star):
    return _json.loads(_core.signed_admissibility(_dumps(signed_graph), v_star))


def construct_from_signed(signed_graph, v_star):
    return _json.loads(_core.construct_from_signed(_dumps(signed_graph), v_star))


def check_theorem5(graph, v_star):
    return _json.loads(_core.check_theorem5(_dumps(graph), v_star))


def verify_lemmas(size_cap=0):
    return _json.loads(_core.verify_lemmas(size_cap))


def enumerate_hoffman(max_slim=3, max_fat=4, max_fat_degree=3, fat=False,
                      indecomposable=False, contains_k12=False):
    return [_json.loads(s) for s in _core.enumerate_hoffman(
        max_slim, max_fat, max_fat_degree, fat, indecomposable, contains_k12)]


def oracle_theorem_equivalence(max_slim=3, max_fat=4):
    return _json.loads(_core.oracle_theorem_equivalence(max_slim, max_fat))


def roundtrip_signed(max_vertices=4):
    return _json.loads(_core.roundtrip_signed(max_vertices))


def nonuniqueness_demo():
    return _json.loads(_core.nonuniqueness_demo())
