"""Exact spherical Hecke algebra computations.

Rational inputs may be ints, strings like "3/2" or Fractions; exponents come
back as ints.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    HeckeError,
    admissible_size,
    census_linear,
    lie_quotient_oracle_linear,
    lie_quotient_oracle_symplectic,
    strata_linear,
    strata_symplectic,
)

__all__ = [
    "HeckeError",
    "admissible_size",
    "census_linear",
    "katz_mazur",
    "lie_quotient_oracle_linear",
    "lie_quotient_oracle_symplectic",
    "normalized_correspondence_exponent_linear",
    "normalized_correspondence_exponent_symplectic",
    "run",
    "strata_linear",
    "strata_symplectic",
    "symplectic_exponent",
    "symplectic_s_exponent",
    "unitary_exponent",
]


def _q(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _qs(xs):
    return [_q(x) for x in xs]


def run(job, threads=1):
    """Run a job document (dict or JSON string); returns (exit_code, report dict)."""
    doc = job if isinstance(job, str) else json.dumps(job)
    code, report = _core.run_job(doc, threads)
    return code, json.loads(report)


def symplectic_exponent(kappa_by_sigma, k):
    """Returns (exponent, maximizing j per embedding)."""
    e, arg = _core.symplectic_exponent([_qs(v) for v in kappa_by_sigma], _q(k))
    return int(e), list(arg)


def symplectic_s_exponent(k, count=1):
    return int(_core.symplectic_s_exponent(_q(k), count))


def unitary_exponent(a, b, j):
    return int(_core.unitary_exponent(_qs(a), _qs(b), j))


def normalized_correspondence_exponent_symplectic(k):
    return int(_core.normalized_correspondence_exponent_symplectic(_qs(k)))


def normalized_correspondence_exponent_linear(a, b, j):
    return int(_core.normalized_correspondence_exponent_linear(_qs(a), _qs(b), j))


def katz_mazur(valuations, infchar):
    """Returns (passed, first failing k or 0)."""
    return _core.katz_mazur(_qs(valuations), [_qs(r) for r in infchar])
