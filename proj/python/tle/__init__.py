import json

from . import _tle
from ._tle import TleError

__all__ = [
    "TleError",
    "exponent_report",
    "coefficients",
    "singular_stability",
    "certify",
    "alpha_split",
    "fd_check",
    "radial_solve",
    "pohozaev",
]


def _rational(x):
    return None if x is None else str(x)


def exponent_report(n):
    return json.loads(_tle.exponent_report(n))


def coefficients(n, p=None, k=None):
    return json.loads(_tle.coefficients(n, _rational(p), _rational(k)))


def singular_stability(n, p=None, k=None):
    return _tle.singular_stability(n, _rational(p), _rational(k))


def certify(lemma=None, n_max=None):
    return json.loads(_tle.certify(lemma, n_max))


def alpha_split(n, alpha):
    return json.loads(_tle.alpha_split(n, str(alpha)))


def fd_check(n, p, profile="gaussian", lmode=0, lam=1.0, variant="eq_2_3"):
    return json.loads(_tle.fd_check(n, str(p), profile, lmode, lam, variant))


def radial_solve(n, p, u0=1.0, v0=0.0, w0=0.0, rmax=2.0, tol=1e-10):
    return json.loads(_tle.radial_solve(n, str(p), u0, v0, w0, rmax, tol))


def pohozaev(profile, R):
    return json.loads(_tle.pohozaev(json.dumps(profile), R))
