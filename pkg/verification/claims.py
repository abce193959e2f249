"""
Registry of every claim a comparison report can give a verdict on.

Formula claims are checked on any instance with two or more factors; example
claims pin the values stated for the built-in example scenarios.
"""

from dataclasses import dataclass

from lib.algebra.exceptions import InputError

FORMULA = 'formula'
TABLE = 'table'
EXAMPLE = 'example'


@dataclass(frozen=True)
class Claim:
    identifier: str
    kind: str
    statement: str


@dataclass(frozen=True)
class ExampleClaim:
    """
    A stated value for a built-in example. ``comparison`` is ``eq``, ``ge``
    or ``point`` (equality of projective points); non-strict claims are
    reported but never fail a run.
    """

    field: str
    expected: object
    comparison: str = 'eq'
    strict: bool = True
    note: str = ''


FORMULA_CLAIMS = (
    Claim('dimension_sum', FORMULA, "dim of the product equals the sum of the factor dimensions"),
    Claim('degree_multinomial', FORMULA,
          "deg of the product equals multinomial(sum r; r_1..r_l) times the product of the factor degrees"),
    Claim('hf_multiplicative', FORMULA, "in the large regime HF of the product is the product of the factor HFs"),
    Claim('hf_drop_at_1', FORMULA, "in the small regime HF(1) of the product is below the product of the HF(1)s"),
    Claim('smooth_prediction', FORMULA, "the product is smooth when n >= dim sigma_2(S) or n >= N"),
    Claim('singular_bound', FORMULA, "dim Sing of the product is at least 2 sum(r) - n"),
    Claim('secant_dimension', FORMULA, "sampled dim sigma_2(S) agrees with the closed form"),
    Claim('lemma_tables', TABLE, "every matching table row's inequality holds"),
)


EXAMPLES = {
    '4.1': {
        'file': 'ex4_1.txt',
        'claims': (
            ExampleClaim('dimension', 2),
            ExampleClaim('degree', 4),
            ExampleClaim('singular_dimension', 0),
            ExampleClaim('singular_degree', 5, note='saturated Jacobian ideal, not its radical'),
            ExampleClaim('m_prime_determinant', '0'),
            ExampleClaim('hf_product_fails', True),
        ),
    },
    '4.2': {
        'file': 'ex4_2.txt',
        'claims': (
            ExampleClaim('dimension', 2),
            ExampleClaim('degree', 3),
            ExampleClaim('degree_below_formula', True),
            ExampleClaim('smooth', True),
            ExampleClaim('coefficient_rank', 5),
            ExampleClaim('center_point', (0, 0, -2, 0, 0, 1), 'point'),
            ExampleClaim('center_in_segre', True),
        ),
    },
    '4.3': {
        'file': 'ex4_3.txt',
        'claims': (
            ExampleClaim('dimension', 2),
            ExampleClaim('degree', 4),
            ExampleClaim('singular_dimension', 1),
        ),
    },
    '4.4': {
        'file': None,
        'claims': None,
    },
}


def conic_times_space_claims(k):
    """Stated values for a conic times a k-space in P^(2k+1)."""
    return (
        ExampleClaim('dimension', k + 1),
        ExampleClaim('degree', 2 * (k + 1)),
        ExampleClaim('singular_dimension', 1, 'ge'),
    )


def example_claims(example_id, k=1):
    if example_id not in EXAMPLES:
        raise InputError(f"unknown example '{example_id}' (known: {', '.join(EXAMPLES)})")
    if example_id == '4.4':
        return conic_times_space_claims(k)
    return EXAMPLES[example_id]['claims']


def example_claim_id(example_id, field):
    return f"example.{example_id}.{field}"


def registry():
    """Every claim identifier a report may reference."""
    claims = {c.identifier: c for c in FORMULA_CLAIMS}
    for example_id in EXAMPLES:
        for claim in example_claims(example_id):
            identifier = example_claim_id(example_id, claim.field)
            claims[identifier] = Claim(identifier, EXAMPLE, f"{claim.field} of example {example_id}")
    return claims


def is_registered(identifier):
    return identifier in registry()
