"""Exact computations for the Z2xZ2-graded osp(1|2), its Verma modules and their quotients.

Rationals may be given as int, fractions.Fraction or "p/q" strings; results are plain
dicts/lists with rationals rendered as "p/q" strings (see ``fraction``).
"""

import json
from fractions import Fraction

from . import _core
from ._core import ConsistencyError, ConstraintError

__all__ = [
    "ConsistencyError",
    "ConstraintError",
    "act",
    "bracket_table",
    "cartan",
    "chi11_membership",
    "classify",
    "closed_form",
    "find_singular",
    "fraction",
    "quotient_dims",
    "recurrence",
    "representation_failures",
    "verify_axioms",
    "verify_rtilde",
]


def _q(x):
    if x is None:
        return None
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def fraction(text):
    """'p/q' -> Fraction."""
    return Fraction(text)


def verify_axioms(mutations=()):
    return json.loads(_core.verify_axioms(list(mutations)))


def bracket_table():
    return json.loads(_core.bracket_table())


def act(g, basis, r, lam=None):
    """Action of generator ``g`` on |alpha,k,m> (or |alpha,k,m;beta> when lam is given)."""
    alpha, k, m, *rest = basis
    beta = rest[0] if rest else 0
    return json.loads(_core.act(g, _q(r), _q(lam), alpha, k, m, beta))


def find_singular(level, sector, r, lam=None):
    return json.loads(_core.find_singular(_q(r), _q(lam), level, sector))


def closed_form(chi, M, r, lam=None):
    return json.loads(_core.closed_form(_q(r), _q(lam), chi, M))


def verify_rtilde(M, r, lam=None):
    return json.loads(_core.verify_rtilde(_q(r), _q(lam), M))


def recurrence(system, M, r, lam=None):
    return json.loads(_core.recurrence(system, M, _q(r), _q(lam)))


def chi11_membership(M):
    return json.loads(_core.chi11_membership(M))


def quotient_dims(max_level, r, lam=None, m_cap=32):
    return json.loads(_core.quotient_dims(_q(r), _q(lam), max_level, m_cap))


def classify(max_level, r, lam=None, m_cap=32):
    return json.loads(_core.classify(_q(r), _q(lam), max_level, m_cap))


def cartan(n, r, c=()):
    return json.loads(_core.cartan(n, _q(r), [_q(x) for x in c]))


def representation_failures(max_level, r, lam=None):
    return _core.representation_failures(_q(r), _q(lam), max_level)
