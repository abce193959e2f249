"""
Projective invariants of homogeneous ideals read off the Hilbert series of
the degrevlex leading-term ideal.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .conf import setting
from .exceptions import InputError
from .poly import DEGREVLEX, monomial_divides

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantReport:
    """
    Invariants of the projective scheme V(I) in P^ambient.

    ``dimension`` is -1 and ``degree`` is None for the empty scheme;
    ``hilbert_numerator`` holds the integer coefficients of N(t) from the
    constant term up, with HS(t) = N(t) / (1 - t)^(ambient + 1).
    """

    ambient: int
    dimension: int
    degree: object
    hilbert_function: tuple
    hilbert_numerator: tuple

    @property
    def is_empty(self):
        return self.dimension < 0

    @property
    def truncation(self):
        return len(self.hilbert_function) - 1


# Univariate integer polynomials as coefficient tuples -------------------------

def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _add(a, b):
    size = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size))


def _mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _one_minus_power(d):
    coeffs = [0] * (d + 1)
    coeffs[0] = 1
    coeffs[d] -= 1
    return _trim(coeffs)


def format_numerator(coeffs):
    """Human-readable form such as ``1 - 2*t + t^2``."""
    coeffs = tuple(coeffs)
    if not coeffs:
        return '0'
    pieces = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = '' if i == 0 else ('t' if i == 1 else f't^{i}')
        magnitude = abs(c)
        body = mono if mono and magnitude == 1 else (f"{magnitude}*{mono}" if mono else str(magnitude))
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return ''.join(pieces)


# Hilbert numerator ------------------------------------------------------------

def minimalize_monomials(monomials):
    gens = sorted(set(tuple(m) for m in monomials), key=lambda m: (sum(m), m))
    minimal = []
    for m in gens:
        if not any(monomial_divides(g, m) for g in minimal):
            minimal.append(m)
    return tuple(minimal)


def _pairwise_coprime(gens):
    seen = set()
    for m in gens:
        support = {i for i, e in enumerate(m) if e}
        if support & seen:
            return False
        seen |= support
    return True


@lru_cache(maxsize=4096)
def _numerator(gens):
    if not gens:
        return (1,)
    if any(not any(m) for m in gens):
        return ()
    if _pairwise_coprime(gens):
        result = (1,)
        for m in gens:
            result = _mul(result, _one_minus_power(sum(m)))
        return result
    nvars = len(gens[0])
    counts = [sum(1 for m in gens if m[i]) for i in range(nvars)]
    pivot = max(range(nvars), key=lambda i: (counts[i], -i))
    x = tuple(1 if i == pivot else 0 for i in range(nvars))
    with_pivot = minimalize_monomials([m for m in gens if not m[pivot]] + [x])
    colon = minimalize_monomials(m[:pivot] + (max(m[pivot] - 1, 0),) + m[pivot + 1:] for m in gens)
    return _add(_numerator(with_pivot), _mul((0, 1), _numerator(colon)))


def hilbert_numerator(monomials, nvars=None):
    """
    Numerator N(t) of the Hilbert series of K[x]/M for a monomial ideal M
    given by exponent tuples, by splitting on a pivot variable x:
    N(M) = N(M + (x)) + t * N(M : x).
    """
    monomials = [tuple(m) for m in monomials]
    if nvars is not None and any(len(m) != nvars for m in monomials):
        raise InputError("monomials of the wrong length")
    return _numerator(minimalize_monomials(monomials))


def _divide_one_minus_t(coeffs):
    """Quotient of N(t) by (1 - t); requires N(1) = 0."""
    quotient = []
    running = 0
    for c in coeffs[:-1]:
        running += c
        quotient.append(running)
    return _trim(quotient)


def hilbert_function_values(numerator, nvars, truncation):
    """HF(0..T) from the power-series expansion of N(t) / (1 - t)^nvars."""
    values = []
    for t in range(truncation + 1):
        total = 0
        for i, c in enumerate(numerator):
            if i <= t and c:
                total += c * comb(t - i + nvars - 1, nvars - 1)
        values.append(total)
    return tuple(values)


def invariants_from_numerator(numerator, nvars, truncation):
    numerator = tuple(numerator)
    removed = 0
    reduced = numerator
    while reduced and sum(reduced) == 0:
        reduced = _divide_one_minus_t(reduced)
        removed += 1
    krull = nvars - removed
    if not reduced or krull <= 0:
        dimension, degree = -1, None
    else:
        dimension, degree = krull - 1, sum(reduced)
    return InvariantReport(
        ambient=nvars - 1,
        dimension=dimension,
        degree=degree,
        hilbert_function=hilbert_function_values(numerator, nvars, truncation),
        hilbert_numerator=numerator,
    )


def default_truncation():
    return setting('HILBERT_TRUNCATION', 5)


def variety_invariants(ideal, truncation=None, order=None):
    """
    Dimension, degree and HF(0..T) of the projective scheme cut out by a
    homogeneous ideal.
    """
    if not ideal.is_homogeneous():
        raise InputError("invariants need a homogeneous ideal")
    truncation = default_truncation() if truncation is None else truncation
    if truncation < 0:
        raise InputError("truncation degree must be nonnegative")
    leading = ideal.leading_monomials(order or DEGREVLEX)
    numerator = hilbert_numerator(leading, ideal.ring.nvars)
    report = invariants_from_numerator(numerator, ideal.ring.nvars, truncation)
    logger.info("invariants in P^%d: dim %d, degree %s", report.ambient, report.dimension, report.degree)
    return report


def hf_product_check(factors, product, truncation=None):
    """For t = 0..T: whether HF_product(t) equals the product of the factor HFs."""
    truncation = min(r.truncation for r in [product, *factors]) if truncation is None else truncation
    if any(r.truncation < truncation for r in [product, *factors]):
        raise InputError("a report is truncated below the requested degree")
    checks = []
    for t in range(truncation + 1):
        expected = 1
        for report in factors:
            expected *= report.hilbert_function[t]
        checks.append(product.hilbert_function[t] == expected)
    return tuple(checks)
