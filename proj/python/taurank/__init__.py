"""Parity and lower bounds for the Lambda(H)-rank tau of elliptic curves over Q.

Curves are given as a label from the bundled table (``"1369b1"``), a
coefficient string (``"[0,0,1,-1,0]"``) or a sequence of five ints or
Fractions.  Reports come back as dicts with integers written as strings.
"""

import json

from ._core import (
    DatabaseError,
    DomainError,
    ParseError,
    SingularCurveError,
    UnknownLabelError,
    degree_parity,
    factor,
    invariants,
    j_pair_from_t,
    lambda_growth_main_term,
    minimal_model,
    primes_above_in_cyclotomic,
    rational_roots,
    tau_from_lambda_s,
    tau_scale,
)
from . import _core

__all__ = [
    "DatabaseError",
    "DomainError",
    "ParseError",
    "SingularCurveError",
    "UnknownLabelError",
    "analyze",
    "classify_exceptions",
    "degree_parity",
    "factor",
    "invariants",
    "j_pair_from_t",
    "lambda_growth_main_term",
    "minimal_model",
    "primes_above_in_cyclotomic",
    "rational_roots",
    "tau_from_lambda_s",
    "tau_scale",
    "twist_scan",
    "x07_points",
]


def analyze(curve, p=7, selmer_rank=None, lambda_=None, db=None):
    return json.loads(_core.analyze_json(curve, p, selmer_rank, lambda_, db))


def x07_points():
    return json.loads(_core.x07_points_json())


def classify_exceptions(db=None):
    return json.loads(_core.classify_exceptions_json(db))


def twist_scan(curve, p=7, db=None):
    return json.loads(_core.twist_scan_json(curve, p, db))
