"""
Compute-versus-predict comparison.

A scenario is run through the exact pipeline (Hadamard product, invariants,
singular locus), the closed-form predictions are evaluated for the same
factor signatures, genericity is certified where the instance allows it,
and every claim gets a verdict: match, mismatch or not-applicable.
"""

import logging
from dataclasses import dataclass, field as dataclass_field, replace
from math import prod

from lib.algebra.arith import prime_sequence
from lib.algebra.exceptions import BadPrimeError, InputError, UndefinedProductError
from lib.algebra.geometry import (
    ProjectivePoint,
    build_m_prime,
    center_meets,
    coefficient_points,
    equivalence_certificate,
    hadamard_product,
    linear_span,
    point_on,
    projection_center,
    segre_veronese,
    singular_locus,
    terracini_secant_dim,
)
from lib.algebra.groebner import budget_limit
from lib.algebra.invariants import format_numerator, hf_product_check, variety_invariants
from lib.algebra.linalg import determinant, rank
from lib.algebra.poly import format_poly
from lib.algebra.predictor import (
    LARGE,
    NOT_CLASSIFIED,
    OUT_OF_RANGE,
    PARAMETRIC,
    SINGULAR,
    SMOOTH,
    SPAN,
    FactorSignature,
    predict,
)

from .claims import example_claim_id, example_claims

logger = logging.getLogger(__name__)

MATCH = 'match'
MISMATCH = 'mismatch'
NOT_APPLICABLE = 'not-applicable'

CERTIFIED = 'certified'
FAILED = 'failed'
UNCERTIFIABLE = 'uncertifiable'

CONSENSUS_PRIMES = 4


@dataclass(frozen=True)
class Verdict:
    claim: str
    status: str
    expected: object = None
    observed: object = None
    note: str = ''
    strict: bool = True


@dataclass(frozen=True)
class FactorData:
    name: str
    kind: str
    signature: FactorSignature
    invariants: object


@dataclass(frozen=True)
class Computed:
    ambient: int
    field: object
    mode: str
    factors: tuple
    product: object
    ideal: tuple
    singular: object = None
    primes: tuple = ()
    result: object = None

    def hf_checks(self):
        return hf_product_check([f.invariants for f in self.factors], self.product)


@dataclass(frozen=True)
class MatrixCertificate:
    rows: list
    rank: int
    determinant: object = None


@dataclass(frozen=True)
class CenterCertificate:
    rank: int
    maximal_rank: int
    center_dimension: int
    center: list
    center_meets_segre: object
    points_in_segre: list
    points: tuple = ()


@dataclass(frozen=True)
class SecantCertificate:
    formula: int
    sampled: int
    method: str


@dataclass
class Certificates:
    genericity: str = UNCERTIFIABLE
    m_prime: MatrixCertificate = None
    coefficient_points: CenterCertificate = None
    equivalence: object = None
    secant: SecantCertificate = None


@dataclass
class ComparisonReport:
    computed: Computed
    predicted: object
    verdicts: list = dataclass_field(default_factory=list)
    certificates: Certificates = dataclass_field(default_factory=Certificates)
    scenario: str = ''

    @property
    def mismatches(self):
        return [v for v in self.verdicts if v.status == MISMATCH and v.strict]

    @property
    def exit_code(self):
        return 1 if self.mismatches else 0


# Computation ----------------------------------------------------------------

def factor_signature(variety, report):
    """
    (r, d, h, degree) of a factor: r and d from a single-block
    parametrization when there is one, otherwise r = dim and d = deg for
    curves (1 for higher-dimensional factors); h = HF(1) - 1 always.
    """
    span = report.hilbert_function[1] - 1
    if variety.is_parametric and len(variety.param_blocks) == 1:
        r, d = variety.dimension, variety.multidegree[0]
    else:
        r = report.dimension
        d = report.degree if r == 1 else 1
    if r < 1:
        raise InputError(f"factor {variety.name} has dimension {r}; factors must be positive-dimensional")
    return FactorSignature(r, d, max(span, r), report.degree)


def threshold_mode(factors):
    if all(f.is_parametric and len(f.param_blocks) == 1 for f in factors):
        return PARAMETRIC
    return SPAN


def compute_scenario(scenario, singular=True):
    """Product ideal, invariants of the product and of every factor, singular locus."""
    with budget_limit(pairs=scenario.budget):
        result = hadamard_product(scenario.factors, scenario.ambient)
        product = variety_invariants(result.ideal, scenario.truncation)
        factors = []
        for f in scenario.factors:
            report = variety_invariants(f.implicit_ideal(), scenario.truncation)
            factors.append(FactorData(f.name, f.kind, factor_signature(f, report), report))
        sing = None
        if singular:
            sing = singular_locus(result.ideal, dimension=product.dimension, seed=scenario.seed)
    ideal = tuple(format_poly(g) for g in result.ideal.groebner_basis())
    return Computed(
        ambient=scenario.ambient,
        field=scenario.field,
        mode=threshold_mode(scenario.factors),
        factors=tuple(factors),
        product=product,
        ideal=ideal,
        singular=sing,
        primes=(scenario.prime,) if scenario.prime else (),
        result=result,
    )


def _fingerprint(computed):
    return computed.product.dimension, computed.product.degree, computed.product.hilbert_function


def modular_consensus(scenario, singular=True):
    """
    Rerun a prime-field scenario over primes below its own until two agree on
    dim, deg and HF; primes dividing an input denominator are skipped.
    """
    seen = []
    tried = 0
    for p in prime_sequence(scenario.prime):
        if tried == CONSENSUS_PRIMES:
            break
        try:
            candidate = scenario if p == scenario.prime else scenario.over_prime(p)
        except BadPrimeError:
            logger.warning("prime %d divides an input denominator, trying the next one", p)
            continue
        tried += 1
        computed = compute_scenario(candidate, singular)
        for q, earlier in seen:
            if _fingerprint(earlier) == _fingerprint(computed):
                logger.info("primes %d and %d agree", q, p)
                return candidate, _with_primes(computed, (q, p))
        seen.append((p, computed))
    logger.warning("no two of %d primes agreed; reporting the last one", tried)
    p, computed = seen[-1]
    return scenario.over_prime(p), _with_primes(computed, (p,))


def _with_primes(computed, primes):
    return replace(computed, primes=primes)


# Certificates ---------------------------------------------------------------

def _matrix_certificate(matrix):
    det = determinant(matrix) if matrix.rows == matrix.cols else None
    rows = [[matrix.field.format(x) for x in matrix.row(i)] for i in range(matrix.rows)]
    return MatrixCertificate(rows, rank(matrix), det)


def certify(scenario, computed, prediction):
    """
    Large regime: M' from the linear spans and the projective-equivalence
    certificate. Small regime (single-block parametric factors only): rank of
    the coefficient points and emptiness of the center on the
    Segre-Veronese variety.
    """
    certificates = Certificates()
    factors = scenario.factors
    if prediction is None or prediction.regime == OUT_OF_RANGE:
        return certificates
    if prediction.regime == LARGE:
        spans = [linear_span(f, block=k) for k, f in enumerate(factors)]
        certificates.m_prime = _matrix_certificate(build_m_prime(spans))
        certificates.equivalence = equivalence_certificate(factors, computed.result, scenario.truncation)
        equivalence = certificates.equivalence
        certificates.genericity = CERTIFIED if equivalence.completed and equivalence.determinant_nonzero else FAILED
        return certificates

    if computed.mode != PARAMETRIC:
        return certificates
    if all(f.is_linear for f in factors):
        certificates.m_prime = _matrix_certificate(build_m_prime(factors))
    try:
        points = coefficient_points(factors)
    except UndefinedProductError:
        certificates.genericity = FAILED
        return certificates
    projection = projection_center(points)
    spec = segre_veronese([f.multidegree[0] for f in factors], [f.dimension for f in factors],
                          field=scenario.field)
    maximal = min(scenario.ambient + 1, prediction.threshold + 1)
    meets = center_meets(projection, spec) if projection.center else False
    center_points = projection.center_points()
    on_segre = [point_on(p, spec.implicit_ideal()) for p in center_points]
    certificates.coefficient_points = CenterCertificate(
        projection.rank, maximal, projection.center_dimension,
        [str(p) for p in center_points], meets, on_segre, center_points,
    )
    certificates.genericity = CERTIFIED if projection.rank == maximal and not meets else FAILED
    if prediction.secant_dimension is not None:
        sampled = terracini_secant_dim(spec, seed=scenario.seed)
        certificates.secant = SecantCertificate(prediction.secant_dimension, sampled.dimension, sampled.method)
    return certificates


# Verdicts -------------------------------------------------------------------

def _status(ok):
    return MATCH if ok else MISMATCH


def formula_verdicts(computed, prediction, certificates):
    if prediction is None:
        return []
    product = computed.product
    claims = ['dimension_sum', 'degree_multinomial',
              'hf_multiplicative' if prediction.regime == LARGE else 'hf_drop_at_1']
    gate = None
    if prediction.regime == OUT_OF_RANGE:
        gate = f"n = {prediction.ambient} is outside both regimes (N = {prediction.threshold})"
    elif certificates.genericity == FAILED:
        gate = "genericity certificate failed"
    if gate:
        verdicts = [Verdict(c, NOT_APPLICABLE, note=gate) for c in claims]
        if prediction.regime != OUT_OF_RANGE:
            verdicts.extend(_table_verdicts(prediction))
        return verdicts

    verdicts = [
        Verdict('dimension_sum', _status(product.dimension == prediction.dimension),
                prediction.dimension, product.dimension),
        Verdict('degree_multinomial', _status(product.degree == prediction.degree),
                prediction.degree, product.degree),
    ]
    if prediction.regime == LARGE:
        checks = computed.hf_checks()
        verdicts.append(Verdict('hf_multiplicative', _status(all(checks)), True, all(checks),
                                note=f"t = 0..{len(checks) - 1}"))
    else:
        expected = prod(f.invariants.hilbert_function[1] for f in computed.factors)
        observed = product.hilbert_function[1]
        verdicts.append(Verdict('hf_drop_at_1', _status(observed < expected), f"< {expected}", observed))

    sing = computed.singular
    if sing is not None:
        if prediction.smoothness == SMOOTH:
            verdicts.append(Verdict('smooth_prediction', _status(sing.smooth), True, sing.smooth))
        elif prediction.smoothness == SINGULAR:
            observed = sing.invariants.dimension
            verdicts.append(Verdict('singular_bound', _status(observed >= prediction.singular_bound),
                                    f">= {prediction.singular_bound}", observed))
        elif prediction.smoothness == NOT_CLASSIFIED:
            verdicts.append(Verdict('smooth_prediction', NOT_APPLICABLE, note="n below every smoothness statement"))

    if certificates.secant is not None:
        secant = certificates.secant
        verdicts.append(Verdict('secant_dimension', _status(secant.sampled == secant.formula),
                                secant.formula, secant.sampled, note=secant.method, strict=False))
    verdicts.extend(_table_verdicts(prediction))
    return verdicts


def _table_verdicts(prediction):
    return [
        Verdict('lemma_tables', _status(hit.holds), True, hit.holds, note=f"{hit.table}: {hit.row}")
        for hit in prediction.table_hits
    ]


def _observe(name, computed, prediction, certificates):
    product = computed.product
    sing = computed.singular
    center = certificates.coefficient_points
    observers = {
        'dimension': lambda: product.dimension,
        'degree': lambda: product.degree,
        'degree_below_formula': lambda: prediction is not None and prediction.degree is not None
        and product.degree < prediction.degree,
        'smooth': lambda: sing.smooth if sing else None,
        'singular_dimension': lambda: sing.invariants.dimension if sing else None,
        'singular_degree': lambda: sing.invariants.degree if sing else None,
        'm_prime_determinant': lambda: (str(certificates.m_prime.determinant)
                                        if certificates.m_prime else None),
        'hf_product_fails': lambda: not all(computed.hf_checks()),
        'coefficient_rank': lambda: center.rank if center else None,
        'center_point': lambda: center.points[0] if center and center.points else None,
        'center_in_segre': lambda: all(center.points_in_segre) if center and center.points else None,
    }
    return observers[name]()


def example_verdicts(example_id, computed, prediction, certificates, k=1):
    verdicts = []
    for claim in example_claims(example_id, k):
        observed = _observe(claim.field, computed, prediction, certificates)
        if observed is None:
            ok = False
        elif claim.comparison == 'ge':
            ok = observed >= claim.expected
        elif claim.comparison == 'point':
            ok = observed == ProjectivePoint(claim.expected, observed.field)
        else:
            ok = observed == claim.expected
        expected = f">= {claim.expected}" if claim.comparison == 'ge' else claim.expected
        if claim.comparison == 'point':
            expected = '[' + ':'.join(str(c) for c in claim.expected) + ']'
        verdicts.append(Verdict(example_claim_id(example_id, claim.field), _status(ok), expected,
                                observed, note=claim.note, strict=claim.strict))
    return verdicts


# Entry points ---------------------------------------------------------------

def compare_scenario(scenario, singular=True, example=None, k=1):
    """Full comparison report for a scenario (and an example's stated values)."""
    logger.info("comparing %s", scenario.name or 'scenario')
    if scenario.prime:
        scenario, computed = modular_consensus(scenario, singular)
    else:
        computed = compute_scenario(scenario, singular)
    prediction = None
    if len(computed.factors) >= 2:
        signatures = [f.signature for f in computed.factors]
        prediction = predict(signatures, scenario.ambient, computed.mode)
    certificates = certify(scenario, computed, prediction)
    verdicts = formula_verdicts(computed, prediction, certificates)
    if example is not None:
        verdicts.extend(example_verdicts(example, computed, prediction, certificates, k))
    report = ComparisonReport(computed, prediction, verdicts, certificates, scenario.name)
    logger.info("%s: %d verdicts, %d mismatches", scenario.name or 'scenario', len(verdicts),
                len(report.mismatches))
    return report


def render_text(report):
    """Plain-text rendering of a comparison report."""
    computed, prediction = report.computed, report.predicted
    product = computed.product
    lines = [f"== {report.scenario or 'scenario'} in P^{computed.ambient} over {computed.field!r}"]
    for f in computed.factors:
        s = f.signature
        lines.append(f"factor {f.name} ({f.kind}): r={s.r} d={s.d} h={s.h} "
                     f"dim={f.invariants.dimension} deg={f.invariants.degree}")
    lines.append(f"product: dim={product.dimension} deg={product.degree} "
                 f"HF={list(product.hilbert_function)} N(t)={format_numerator(product.hilbert_numerator)}")
    if computed.singular is not None:
        sing = computed.singular
        state = 'smooth' if sing.smooth else f"dim={sing.invariants.dimension} deg={sing.invariants.degree}"
        lines.append(f"singular locus: {state} ({sing.method})")
    if computed.primes:
        lines.append(f"primes: {', '.join(str(p) for p in computed.primes)}")
    if prediction is not None:
        lines.append(f"prediction ({prediction.mode}): N={prediction.threshold} regime={prediction.regime} "
                     f"dim={prediction.dimension} deg={prediction.degree} smoothness={prediction.smoothness}"
                     + (f" bound={prediction.singular_bound}" if prediction.singular_bound is not None else ''))
    lines.append(f"genericity: {report.certificates.genericity}")
    m_prime = report.certificates.m_prime
    if m_prime is not None:
        lines.append(f"M': rank {m_prime.rank}" + (f", det {m_prime.determinant}"
                                                   if m_prime.determinant is not None else ''))
    center = report.certificates.coefficient_points
    if center is not None:
        lines.append(f"coefficient points: rank {center.rank}/{center.maximal_rank}, "
                     f"center {', '.join(center.center) or 'empty'}, meets S: {center.center_meets_segre}")
    for v in report.verdicts:
        detail = f" expected {v.expected}, observed {v.observed}" if v.status != NOT_APPLICABLE else ''
        note = f" ({v.note})" if v.note else ''
        lines.append(f"[{v.status}] {v.claim}{detail}{note}")
    return '\n'.join(lines) + '\n'
