"""
Closed-form predictions for Hadamard products of generic varieties.

Two ambient regimes are distinguished. In the large regime (n >= N) the
product is projectively equivalent to the Segre image of the factors; in the
small regime (N - sum(r) <= n <= N - 1) it is a generic projection of a
Segre-Veronese variety. Span mode measures N from the linear spans of the
factors, parametric mode from the parametrization degrees.
"""

import logging
from dataclasses import dataclass, field
from math import comb, prod

from .exceptions import InputError, OutOfRangeError
from .geometry import multinomial

logger = logging.getLogger(__name__)

PARAMETRIC = 'parametric'
SPAN = 'span'

LARGE = 'large'
SMALL = 'small'
OUT_OF_RANGE = 'out-of-range'

SMOOTH = 'smooth'
SINGULAR = 'singular-with-bound'
NOT_CLASSIFIED = 'not-classified'


@dataclass(frozen=True)
class FactorSignature:
    """
    Dimension r, parametrization degree d, linear-span dimension h
    (C(r+d, d) - 1 unless given) and variety degree (d^r unless given).
    """

    r: int
    d: int
    h: int = None
    degree: int = None

    def __post_init__(self):
        if self.r < 1 or self.d < 1:
            raise InputError(f"signature ({self.r}, {self.d}) needs r, d >= 1")
        if self.h is None:
            object.__setattr__(self, 'h', comb(self.r + self.d, self.d) - 1)
        if self.h < self.r:
            raise InputError(f"span dimension {self.h} below the dimension {self.r}")
        if self.degree is None:
            object.__setattr__(self, 'degree', self.d ** self.r)

    @classmethod
    def parse(cls, text):
        """``r:d`` or ``r:d:h``."""
        try:
            parts = [int(p) for p in text.split(':')]
        except ValueError:
            raise InputError(f"bad factor signature '{text}'") from None
        if len(parts) not in (2, 3):
            raise InputError(f"bad factor signature '{text}'")
        return cls(*parts)


def _signatures(signatures):
    out = [s if isinstance(s, FactorSignature) else FactorSignature(*s) for s in signatures]
    if not out:
        raise InputError("no factor signatures")
    return out


@dataclass(frozen=True)
class Regime:
    regime: str
    threshold: int
    exceeds_sum: bool
    theorems: tuple = ()


@dataclass(frozen=True)
class PredictedInvariants:
    dimension: int
    degree: int
    hf_relation: str = None


@dataclass(frozen=True)
class SmoothnessPrediction:
    kind: str
    bound: int = None


@dataclass(frozen=True)
class TableHit:
    table: str
    row: str
    inequality: str
    holds: bool


@dataclass(frozen=True)
class Prediction:
    mode: str
    ambient: int
    threshold: int
    regime: str
    exceeds_sum: bool
    dimension: int = None
    degree: int = None
    hf_relation: str = None
    secant_dimension: int = None
    smoothness: str = NOT_CLASSIFIED
    singular_bound: int = None
    table_hits: tuple = field(default_factory=tuple)
    theorems: tuple = field(default_factory=tuple)


def ambient_threshold(signatures, mode=PARAMETRIC):
    """N = prod C(r_i+d_i, d_i) - 1 (parametric) or prod (h_i+1) - 1 (span)."""
    signatures = _signatures(signatures)
    if mode == PARAMETRIC:
        return prod(comb(s.r + s.d, s.d) for s in signatures) - 1
    if mode == SPAN:
        return prod(s.h + 1 for s in signatures) - 1
    raise InputError(f"unknown threshold mode '{mode}'")


def classify_regime(signatures, n, mode=PARAMETRIC):
    signatures = _signatures(signatures)
    if n < 1:
        raise InputError("ambient dimension must be at least 1")
    big_n = ambient_threshold(signatures, mode)
    total = sum(s.r for s in signatures)
    exceeds = n > total
    if n >= big_n:
        return Regime(LARGE, big_n, exceeds, ('large_ambient',))
    if big_n - total <= n:
        theorems = ('small_ambient', 'secant_smoothness') if exceeds else ()
        return Regime(SMALL, big_n, exceeds, theorems)
    return Regime(OUT_OF_RANGE, big_n, exceeds, ())


def predicted_invariants(signatures, n=None, mode=PARAMETRIC):
    """
    dim = sum r_i and deg = multinomial(sum r; r_1..r_l) * prod deg(X_i); with
    an ambient dimension also the expected Hilbert-function relation.
    """
    signatures = _signatures(signatures)
    relation = None
    if n is not None:
        regime = classify_regime(signatures, n, mode)
        if regime.regime == OUT_OF_RANGE:
            raise OutOfRangeError(f"n = {n} is outside both regimes (N = {regime.threshold})")
        relation = 'multiplicative' if regime.regime == LARGE else 'strictly-smaller-at-1'
    dimension = sum(s.r for s in signatures)
    degree = multinomial(s.r for s in signatures) * prod(s.degree for s in signatures)
    return PredictedInvariants(dimension, degree, relation)


def secant_dim_formula(signatures):
    """2 sum(r) - 1 for two linear factors, min(N, 2 sum(r) + 1) otherwise."""
    signatures = _signatures(signatures)
    if len(signatures) < 2:
        raise InputError("the secant formula needs at least two factors")
    total = sum(s.r for s in signatures)
    if len(signatures) == 2 and all(s.d == 1 for s in signatures):
        return 2 * total - 1
    return min(ambient_threshold(signatures, PARAMETRIC), 2 * total + 1)


def smoothness_prediction(signatures, n, mode=PARAMETRIC):
    signatures = _signatures(signatures)
    regime = classify_regime(signatures, n, mode)
    if regime.regime == OUT_OF_RANGE:
        raise OutOfRangeError(f"n = {n} is outside both regimes (N = {regime.threshold})")
    if regime.regime == LARGE:
        return SmoothnessPrediction(SMOOTH)
    secant = secant_dim_formula(signatures)
    total = sum(s.r for s in signatures)
    if n >= secant:
        return SmoothnessPrediction(SMOOTH)
    if total < n:
        return SmoothnessPrediction(SINGULAR, 2 * total - n)
    return SmoothnessPrediction(NOT_CLASSIFIED)


# Tables ---------------------------------------------------------------------------
#
# Each row constrains (d_X, d_Y, r, s): None is unconstrained, an int is an
# exact value, ('>=', k) a lower bound. Window rows also give the n-range as a
# function of (r, s).

_ANY = None


def _ge(k):
    return ('>=', k)


GAP_ROWS = (
    ('d_X>=2', (_ge(2), _ANY, _ANY, _ANY)),
    ('d_Y>=2', (_ANY, _ge(2), _ANY, _ANY)),
    ('d=(1,1), r>=3, s>=2', (1, 1, _ge(3), _ge(2))),
    ('d=(1,1), r>=2, s>=3', (1, 1, _ge(2), _ge(3))),
)

SMOOTH_ROWS = (
    ('d_X>=2, d_Y>=2', (_ge(2), _ge(2), _ANY, _ANY)),
    ('d_X>=3, d_Y=1', (_ge(3), 1, _ANY, _ANY)),
    ('d=(2,1), r>=2', (2, 1, _ge(2), _ANY)),
    ('d_X=1, d_Y>=3', (1, _ge(3), _ANY, _ANY)),
    ('d=(1,2), s>=2', (1, 2, _ANY, _ge(2))),
    ('d=(1,1), r=3, s>=5', (1, 1, 3, _ge(5))),
    ('d=(1,1), r=4, s>=4', (1, 1, 4, _ge(4))),
    ('d=(1,1), r=5, s>=3', (1, 1, 5, _ge(3))),
)

WINDOW_ROWS = (
    ('d=(2,1), r=1: 2s+1<=n<=2s+2', (2, 1, 1, _ANY), lambda r, s: (2 * s + 1, 2 * s + 2)),
    ('d=(1,2), s=1: 2r+1<=n<=2r+2', (1, 2, _ANY, 1), lambda r, s: (2 * r + 1, 2 * r + 2)),
    ('d=(1,1), r=2, s>=3: 2s<=n<=2s+2', (1, 1, 2, _ge(3)), lambda r, s: (2 * s, 2 * s + 2)),
    ('d=(1,1), r>=3, s=2: 2r<=n<=2r+2', (1, 1, _ge(3), 2), lambda r, s: (2 * r, 2 * r + 2)),
    ('d=(1,1), r=3, s=3: 9<=n<=10', (1, 1, 3, 3), lambda r, s: (9, 10)),
    ('d=(1,1), r=3, s=4: n=12', (1, 1, 3, 4), lambda r, s: (12, 12)),
    ('d=(1,1), r=4, s=3: n=12', (1, 1, 4, 3), lambda r, s: (12, 12)),
)


def _matches(constraint, value):
    if constraint is None:
        return True
    if isinstance(constraint, tuple):
        return value >= constraint[1]
    return value == constraint


def _row_matches(constraints, values):
    return all(_matches(c, v) for c, v in zip(constraints, values))


def _quantities(d_x, d_y, r, s):
    big_n = comb(r + d_x, d_x) * comb(s + d_y, d_y) - 1
    secant = secant_dim_formula([FactorSignature(r, d_x), FactorSignature(s, d_y)])
    return big_n, r + s, secant


def gap_check(d_x, d_y, r, s):
    big_n, total, _ = _quantities(d_x, d_y, r, s)
    return f"N-(r+s) = {big_n - total} > {total} = r+s", big_n - total > total


def smooth_check(d_x, d_y, r, s):
    big_n, total, secant = _quantities(d_x, d_y, r, s)
    return f"N-(r+s) = {big_n - total} >= {secant} = dim sigma_2(S)", big_n - total >= secant


def window_check(d_x, d_y, r, s, low, high):
    big_n, total, secant = _quantities(d_x, d_y, r, s)
    holds = total < big_n - total <= low and high <= secant
    text = f"r+s = {total} < N-(r+s) = {big_n - total} <= {low} <= n <= {high} <= {secant} = dim sigma_2(S)"
    return text, holds


def lemma_table_lookup(signatures, n=None):
    """
    Rows of the projection-gap table, the smooth table and the
    singular-window table matching two factor signatures (and n, for the
    window table), each with its inequality instantiated and checked.
    """
    signatures = _signatures(signatures)
    if len(signatures) != 2:
        raise InputError("table lookup needs exactly two factors")
    (r, d_x), (s, d_y) = (signatures[0].r, signatures[0].d), (signatures[1].r, signatures[1].d)
    values = (d_x, d_y, r, s)
    hits = []
    for label, constraints in GAP_ROWS:
        if _row_matches(constraints, values):
            text, holds = gap_check(*values)
            hits.append(TableHit('projection_gap', label, text, holds))
    for label, constraints in SMOOTH_ROWS:
        if _row_matches(constraints, values):
            text, holds = smooth_check(*values)
            hits.append(TableHit('smooth', label, text, holds))
    for label, constraints, window in WINDOW_ROWS:
        if _row_matches(constraints, values):
            low, high = window(r, s)
            if n is not None and not low <= n <= high:
                continue
            if n is not None:
                low = high = n
            text, holds = window_check(*values, low, high)
            hits.append(TableHit('singular_window', label, text, holds))
    return tuple(hits)


def _sweep_values(constraint, limit):
    if constraint is None:
        return range(1, limit + 1)
    if isinstance(constraint, tuple):
        return range(constraint[1], max(constraint[1], limit) + 1)
    return (constraint,)


def table_sweep(limit=4):
    """
    Every table row instantiated over all admissible (d_X, d_Y, r, s) with
    free values up to ``limit``: (table, row, values, holds) tuples.
    """
    results = []
    for table, rows, check in (('projection_gap', GAP_ROWS, gap_check), ('smooth', SMOOTH_ROWS, smooth_check)):
        for label, constraints in rows:
            for values in _instantiate(constraints, limit):
                results.append((table, label, values, check(*values)[1]))
    for label, constraints, window in WINDOW_ROWS:
        for values in _instantiate(constraints, limit):
            low, high = window(values[2], values[3])
            for n in range(low, high + 1):
                results.append(('singular_window', label, values + (n,), window_check(*values, n, n)[1]))
    return results


def _instantiate(constraints, limit):
    out = [()]
    for c in constraints:
        out = [prefix + (v,) for prefix in out for v in _sweep_values(c, limit)]
    return out


def predict(signatures, n, mode=PARAMETRIC):
    """Every closed-form expectation for the given factors in P^n."""
    signatures = _signatures(signatures)
    regime = classify_regime(signatures, n, mode)
    secant = secant_dim_formula(signatures) if len(signatures) >= 2 else None
    hits = lemma_table_lookup(signatures, n) if len(signatures) == 2 else ()
    if regime.regime == OUT_OF_RANGE:
        logger.info("n = %d is outside both regimes for N = %d", n, regime.threshold)
        return Prediction(mode, n, regime.threshold, regime.regime, regime.exceeds_sum,
                          secant_dimension=secant, table_hits=hits)
    invariants = predicted_invariants(signatures, n, mode)
    smoothness = smoothness_prediction(signatures, n, mode)
    return Prediction(
        mode, n, regime.threshold, regime.regime, regime.exceeds_sum,
        dimension=invariants.dimension,
        degree=invariants.degree,
        hf_relation=invariants.hf_relation,
        secant_dimension=secant,
        smoothness=smoothness.kind,
        singular_bound=smoothness.bound,
        table_hits=hits,
        theorems=regime.theorems,
    )
