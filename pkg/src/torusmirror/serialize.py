"""Canonical JSON encoding: rationals as "p/q" strings, matrices row-major."""

import json
from fractions import Fraction

import numpy as np

from .exactlin import mat


def rat_to_str(x):
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def str_to_rat(s):
    f = Fraction(s)
    return int(f) if f.denominator == 1 else f


def mat_to_json(m):
    return [[rat_to_str(x) for x in row] for row in m]


def json_to_mat(rows):
    return mat([[str_to_rat(x) for x in row] for row in rows])


def vec_to_json(v):
    return [rat_to_str(x) for x in v]


def json_to_vec(row):
    return np.array([str_to_rat(x) for x in row], dtype=object)


def dumps(obj):
    """Deterministic, diff-friendly encoding."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
