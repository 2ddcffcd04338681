"""Exact two-variable orthogonal polynomial families and identity checks."""

import json
from fractions import Fraction

from . import _lacunary
from ._lacunary import DomainError, Error, UsageError, set_working_digits, suite_names, working_digits

__all__ = [
    "DomainError",
    "Error",
    "UsageError",
    "chebyshev_u2",
    "cli",
    "gegenbauer",
    "hermite2",
    "hermite_lacunary",
    "hermite_multivar",
    "humbert",
    "laguerre_rule",
    "legendre",
    "legendre2",
    "multivar_u",
    "run_suite",
    "set_working_digits",
    "suite_names",
    "u2n",
    "umbral_hermite",
    "working_digits",
]


def _q(v):
    if isinstance(v, float):
        raise TypeError("pass exact values (int, Fraction or 'p/q' strings), not float")
    return str(Fraction(v))


def _f(s):
    return Fraction(s)


def hermite2(n, x, y):
    return _f(_lacunary.hermite2(n, _q(x), _q(y)))


def chebyshev_u2(n, x, y):
    return _f(_lacunary.chebyshev_u2(n, _q(x), _q(y)))


def legendre2(n, x, y):
    return _f(_lacunary.legendre2(n, _q(x), _q(y)))


def umbral_hermite(n, x, y):
    return _f(_lacunary.umbral_hermite(n, _q(x), _q(y)))


def u2n(n, alpha, beta):
    return _f(_lacunary.u2n(n, _q(alpha), _q(beta)))


def humbert(n, m, x, y):
    return _f(_lacunary.humbert(n, m, _q(x), _q(y)))


def hermite_lacunary(n, m, x, y):
    return _f(_lacunary.hermite_lacunary(n, m, _q(x), _q(y)))


def multivar_u(n, xs):
    return _f(_lacunary.multivar_u(n, [_q(v) for v in xs]))


def hermite_multivar(n, xs):
    return _f(_lacunary.hermite_multivar(n, [_q(v) for v in xs]))


def legendre(n, x):
    return _f(_lacunary.legendre(n, _q(x)))


def gegenbauer(n, gamma, x):
    return _f(_lacunary.gegenbauer(n, _q(gamma), _q(x)))


def laguerre_rule(alpha, count=80):
    """Nodes and weights as decimal strings at the working precision."""
    return _lacunary.laguerre_rule(_q(alpha), count)


def run_suite(name, grid=None, jobs=1):
    """Runs a verification suite; returns a list of report dicts."""
    return json.loads(_lacunary.run_suite(name, [_q(v) for v in grid or []], jobs))


def cli(*args):
    """Runs the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _lacunary.cli([str(a) for a in args])
