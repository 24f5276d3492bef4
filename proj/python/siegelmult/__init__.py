"""Integer cocycles and multiplier systems on Sp(2g, Z).

Matrices are passed as literals "a,b;c,d" (rows separated by ';') or as nested
lists of ints. Certificates are returned as parsed JSON.
"""

import json

from . import _siegelmult as _core
from ._siegelmult import (
    ContinuationError,
    Error,
    GenusMismatchError,
    MultiplierError,
    NotSymplecticError,
    ParseError,
    PreconditionError,
    ResidualGuardError,
    SearchExhaustedError,
    TruncationError,
    kronecker,
    lemma_tags,
    theta_value,
)


def literal(m):
    if isinstance(m, str):
        return m
    return ";".join(",".join(str(int(x)) for x in row) for row in m)


def normalize(m):
    return _core.normalize(literal(m))


def multiply(a, b):
    return _core.multiply(literal(a), literal(b))


def inverse(m):
    return _core.inverse(literal(m))


def w(m, n, convention="definition"):
    """(w, residual) for the pair, by argument continuation."""
    return _core.w(literal(m), literal(n), convention)


def w_exact(m, n, convention="automorphy"):
    return _core.w_exact(literal(m), literal(n), convention)


def theta_multiplier(m, convention="standard"):
    return _core.theta_multiplier(literal(m), convention)


def delta_multiplier(r, m):
    return _core.delta_multiplier(r, literal(m))


def rademacher(m):
    return _core.rademacher(literal(m))


def verify_lemma(tag, samples=1000, seed=1):
    return json.loads(_core.verify_lemma(tag, samples, seed))


def deligne(q=4, bound=10000):
    return json.loads(_core.deligne(q, bound))


def krons(q=4, bound=10000):
    return json.loads(_core.krons(q, bound))


def zpir(m, q):
    return json.loads(_core.zpir(literal(m), q))


def bms(a=5, c1=4, c2=4):
    return json.loads(_core.bms(a, c1, c2))


def small_identities():
    return json.loads(_core.small_identities())


def mennicke(q=4, samples=20, seed=1, doublings=4):
    return json.loads(_core.mennicke(q, samples, seed, doublings))
