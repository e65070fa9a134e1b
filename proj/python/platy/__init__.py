"""Exact computations on 3D lattices and the ten compact flat 3-manifolds.

Rationals come back as fractions.Fraction; inputs may be ints, Fractions or "p/q" strings.
"""
import json
import re
from fractions import Fraction

from . import _platy
from ._platy import DomainError

__all__ = [
    "DomainError", "reduce_gram", "classify", "invariants", "covers",
    "recognize", "generators", "oracle", "table",
]

_RATIONAL = re.compile(r"^-?\d+/\d+$")


def _out(x):
    if isinstance(x, str) and _RATIONAL.match(x):
        return Fraction(x)
    if isinstance(x, list):
        return [_out(v) for v in x]
    if isinstance(x, dict):
        return {k: _out(v) for k, v in x.items()}
    return x


def _in(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (list, tuple)):
        return [_in(v) for v in x]
    if isinstance(x, dict):
        return {k: _in(v) for k, v in x.items()}
    return x


def _desc(kind, params, chirality=None):
    return json.dumps({"type": kind, "params": _in(params), "chirality": chirality})


def reduce_gram(gram):
    return _out(json.loads(_platy.reduce_gram(json.dumps(_in(gram)))))


def classify(conorms):
    return json.loads(_platy.classify(json.dumps(_in(conorms))))


def invariants(kind, params, chirality=None):
    return _out(json.loads(_platy.invariants(_desc(kind, params, chirality))))


def covers(kind, params, chirality=None):
    return _out(json.loads(_platy.covers(_desc(kind, params, chirality))))


def generators(kind, params, chirality=None):
    return _out(json.loads(_platy.generators(_desc(kind, params, chirality))))


def recognize(group):
    return _out(json.loads(_platy.recognize(json.dumps(_in(group)))))


def oracle(kind, params, chirality=None, grid=0):
    return _out(json.loads(_platy.oracle(_desc(kind, params, chirality), grid)))


def table(n):
    return _platy.table(n)
