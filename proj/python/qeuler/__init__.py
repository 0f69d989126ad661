"""q-Euler numbers, q-zeta functions and p-adic l-functions."""

from fractions import Fraction
import json as _json

from . import _qeuler
from ._qeuler import (
    BudgetExhausted,
    Cyclotomic,
    DomainError,
    Padic,
    ParameterError,
    PrecisionError,
    angle,
    identities,
    teichmuller,
)

__all__ = [
    "BudgetExhausted",
    "Cyclotomic",
    "DomainError",
    "Padic",
    "ParameterError",
    "PrecisionError",
    "angle",
    "characters",
    "euler_number",
    "euler_poly",
    "gen_euler",
    "identities",
    "lq",
    "padic_l",
    "partial_zeta",
    "teichmuller",
    "verify",
    "zeta",
]


def _q_text(q):
    if isinstance(q, str):
        return q
    if isinstance(q, bool):
        raise TypeError("q must be a number or a string")
    if isinstance(q, (int, Fraction)):
        return str(Fraction(q))
    if isinstance(q, float):
        return repr(q)
    if isinstance(q, complex):
        return f"{q.real!r}{q.imag:+}i"
    raise TypeError(f"unsupported q: {q!r}")


def _rational_text(x):
    if isinstance(x, float):
        x = Fraction(x)
    return str(Fraction(x)) if not isinstance(x, str) else x


def euler_number(n, q=1):
    """E_{n,q}: Fraction for exact q, complex for float q, Padic for p-adic q."""
    return _qeuler.euler_number(n, _q_text(q))


def euler_poly(n, x, q=1):
    """E_{n,q}(x)."""
    return _qeuler.euler_poly(n, _rational_text(x), _q_text(q))


def gen_euler(n, modulus=1, exponents=None, q=1, F=0):
    """E_{n,chi,q} for the character with the given exponents on the standard generators."""
    return _qeuler.gen_euler(n, modulus, exponents, _q_text(q), F)


def zeta(s, q, x=None, tol=1e-13, max_terms=2_000_000):
    """zeta_{q,E}(s, x), or the series over n >= 1 when x is None."""
    return _qeuler.zeta(complex(s), _q_text(q), x, tol, max_terms)


def lq(s, modulus=1, exponents=None, q=0.5, tol=1e-13, max_terms=2_000_000):
    """l_q(s, chi)."""
    return _qeuler.lq(complex(s), modulus, exponents, _q_text(q), tol, max_terms)


def partial_zeta(s, a, F, q, mode="closed"):
    """H_q(s, a | F) by the closed form or by direct summation."""
    return _qeuler.partial_zeta(complex(s), a, F, _q_text(q), mode)


def padic_l(s, p, q=1, modulus=1, exponents=None, prec=12, F=0, method="series"):
    """l_{p,q}(s, chi) by the series, closed form, integral, or (q = 1) the classical path."""
    return _qeuler.padic_l(_rational_text(s), p, _q_text(q), modulus, exponents, prec, F, method)


def characters(d):
    """Characters mod d as dicts."""
    return [_json.loads(c) for c in _qeuler.characters(d)]


def verify(names=None, seed=0, prec=12, p=None, q=None, jobs=1):
    """Runs identity checks and returns the parsed reports."""
    if names is None:
        names = identities()
    elif isinstance(names, str):
        names = [names]
    lines = _qeuler.verify(list(names), seed, prec, p, None if q is None else _q_text(q), jobs)
    return [_json.loads(line) for line in lines]
