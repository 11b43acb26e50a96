"""Exact constructive inverse Galois theory: Python front end to the C++ core.

Polynomials and field elements are passed as text in the library grammar,
e.g. "Y^3 + (T - 1)*Y + (T - 1)" over "Q", "GF(5)" or "GF(9)".
Structured results come back as plain dicts.
"""

import json as _json

from . import _gforge
from ._gforge import (
    GforgeError,
    ParseError,
    __version__,
    center_test,
    degree_bookkeeping,
    discriminant_y,
    factor,
    left_divide,
    ore_witness,
    right_divide,
    skew_mul,
)

__all__ = [
    "GforgeError",
    "ParseError",
    "__version__",
    "bb_construct",
    "center_test",
    "certify_sn",
    "cubic_galois_group",
    "degree_bookkeeping",
    "discriminant_y",
    "factor",
    "frobenius_decomposition",
    "left_divide",
    "lp_trinomial",
    "normalizer_quotient",
    "ore_witness",
    "right_divide",
    "skew_mul",
    "specialize_at",
    "split_trinomial",
    "verify_bb_certificate",
]


def specialize_at(poly, at, field="Q"):
    return _json.loads(_gforge.specialize_at(poly, str(at), field))


def frobenius_decomposition(poly, at, field):
    return _json.loads(_gforge.frobenius_decomposition(poly, str(at), field))


def certify_sn(poly, prime_budget=200):
    return _json.loads(_gforge.certify_sn(poly, prime_budget))


def cubic_galois_group(poly, field="Q"):
    return _json.loads(_gforge.cubic_galois_group(poly, field))


def lp_trinomial(x, field="Q"):
    return _json.loads(_gforge.lp_trinomial(str(x), field))


def split_trinomial(field="Q", alpha=None):
    return _json.loads(_gforge.split_trinomial(field, None if alpha is None else str(alpha)))


def bb_construct(stem, n, prime_budget=200, attempt_budget=1000):
    """Certificate dict for a regular S_n extension with fiber stem * (linear) at T=0."""
    return _json.loads(_gforge.bb_construct(stem, n, prime_budget, attempt_budget))


def verify_bb_certificate(certificate):
    """Accepts the dict from bb_construct (or its JSON text); returns {"ok", "reasons"}."""
    text = certificate if isinstance(certificate, str) else _json.dumps(certificate)
    return _json.loads(_gforge.verify_bb_certificate(text))


def normalizer_quotient(degree, group, subgroup):
    """group/subgroup: generators in cycle notation, or "S<degree>"."""
    order, normalizer_order, reps = _gforge.normalizer_quotient(degree, group, subgroup)
    return {"order": order, "normalizer_order": normalizer_order, "coset_representatives": reps}
