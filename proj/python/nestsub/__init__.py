"""Exact recursive, nested and reduced subresultants.

Polynomials go in as strings ("3/2*x^3 + x - 5") and come back as lists of
Fractions in ascending powers. Errors raise nestsub.Error with a .code such
as "SingularU" or "ParseError".
"""

import json
import re
from fractions import Fraction

from . import _nestsub
from ._nestsub import Error

__all__ = [
    "Error", "parse", "render", "chain", "prs", "recursive_prs", "subresultant",
    "matrix", "verify", "sqfree", "dims", "cli",
]

_RAT = re.compile(r"-?\d+/\d+")


def _exact(value):
    if isinstance(value, str) and _RAT.fullmatch(value):
        return Fraction(value)
    if isinstance(value, list):
        return [_exact(v) for v in value]
    if isinstance(value, dict):
        return {k: _exact(v) for k, v in value.items()}
    return value


def _load(text):
    return _exact(json.loads(text))


def parse(p):
    return _load(_nestsub.parse(p))["coeffs"]


def render(p):
    return _nestsub.render(p)


def chain(f, g):
    return list(_nestsub.chain(f, g))


def prs(f, g, rule="subresultant"):
    return _load(_nestsub.prs(f, g, rule))


def recursive_prs(f, g, rule="subresultant"):
    return _load(_nestsub.recursive_prs(f, g, rule))


def subresultant(f, g, k=1, j=0, family="reduced"):
    """Coefficients of the (k, j) subresultant; family is one of
    classic, recursive, nested, reduced (classic ignores k)."""
    return _load(_nestsub.subresultant(family, f, g, k, j))["coeffs"]


def matrix(f, g, k=1, j=0, family="reduced"):
    """Rows of the matrix as lists of Fractions."""
    return _load(_nestsub.matrix(family, f, g, k, j))["entries"]


def verify(f, g, theorem=2, k=2, j=0):
    return _load(_nestsub.verify(f, g, theorem, k, j))


def sqfree(p):
    return _load(_nestsub.sqfree(p))


def dims(f, g, k, j):
    """((rows, cols) of the recursive matrix, (rows, cols) of the reduced one)."""
    return _nestsub.dims(f, g, k, j)


def cli(*args):
    """Run the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _nestsub.cli([str(a) for a in args])
