"""
Exact coefficient arithmetic.

Rationals are ``fractions.Fraction`` values (always normalized: positive
denominator, lowest terms, zero as 0/1). Prime-field elements are
``PrimeFieldElement`` values at the API boundary; inside polynomials and
matrices a prime field stores bare residues in ``[0, p)`` and does its
arithmetic through the ``PrimeField`` object.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from .conf import setting
from .exceptions import BadPrimeError, DivisionByZeroError, InputError

logger = logging.getLogger(__name__)

Rational = Fraction

DEFAULT_PRIME = 65521


def rat_normalize(num, den):
    """
    Build the rational num/den in lowest terms with a positive denominator.

    Args:
        num (int): numerator
        den (int): denominator, nonzero

    Returns:
        Fraction: the normalized value
    """
    if den == 0:
        raise InputError("zero denominator")
    return Fraction(num, den)


@lru_cache(maxsize=64)
def _is_prime(p):
    return bool(sympy.isprime(p))


def _require_prime(p):
    if not isinstance(p, int) or p < 2 or not _is_prime(p):
        raise InputError(f"{p} is not a prime")


@dataclass(frozen=True)
class PrimeFieldElement:
    residue: int
    modulus: int

    def __post_init__(self):
        _require_prime(self.modulus)
        object.__setattr__(self, 'residue', self.residue % self.modulus)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise InputError(f"mixed moduli {self.modulus} and {other.modulus}")
            return other.residue
        if isinstance(other, int):
            return other % self.modulus
        if isinstance(other, Fraction):
            return rat_to_fp(other, self.modulus).residue
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement(self.residue + b, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement(self.residue - b, self.modulus)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement(b - self.residue, self.modulus)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement(self.residue * b, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.modulus)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * fp_inv(PrimeFieldElement(b, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def inverse(self):
        return fp_inv(self)

    def __str__(self):
        return f"{self.residue} mod {self.modulus}"


def fp_inv(a):
    """Multiplicative inverse of a nonzero prime-field element."""
    if a.residue == 0:
        raise DivisionByZeroError(f"0 has no inverse modulo {a.modulus}")
    return PrimeFieldElement(pow(a.residue, -1, a.modulus), a.modulus)


def rat_to_fp(r, p):
    """
    Reduce a rational number modulo a prime.

    Raises:
        BadPrimeError: when p divides the denominator of r
    """
    r = Fraction(r)
    if r.denominator % p == 0:
        raise BadPrimeError(f"{p} divides the denominator of {r}")
    return PrimeFieldElement(r.numerator * pow(r.denominator, -1, p), p)


class RationalField:
    """The field of rational numbers; elements are Fractions."""

    name = 'rational'
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, value):
        if isinstance(value, PrimeFieldElement):
            raise InputError("cannot lift a prime-field element to a rational")
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"invalid rational '{value}'") from exc
        return Fraction(value)

    def element(self, value):
        return self.convert(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZeroError("division by zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZeroError("division by zero")
        return a / b

    def is_zero(self, a):
        return a == 0

    def format(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash('rational')

    def __repr__(self):
        return 'QQ'


@dataclass(frozen=True)
class PrimeField:
    """The prime field Z/p; elements are residues in [0, p)."""

    modulus: int

    def __post_init__(self):
        _require_prime(self.modulus)

    name = 'prime'

    @property
    def characteristic(self):
        return self.modulus

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def convert(self, value):
        if isinstance(value, PrimeFieldElement):
            if value.modulus != self.modulus:
                raise InputError(f"element of GF({value.modulus}) used in GF({self.modulus})")
            return value.residue
        if isinstance(value, int):
            return value % self.modulus
        if isinstance(value, str):
            value = RationalField().convert(value)
        return rat_to_fp(value, self.modulus).residue

    def element(self, value):
        return PrimeFieldElement(self.convert(value), self.modulus)

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def inv(self, a):
        return fp_inv(PrimeFieldElement(a, self.modulus)).residue

    def div(self, a, b):
        return (a * self.inv(b)) % self.modulus

    def is_zero(self, a):
        return a == 0

    def format(self, a):
        return str(a)

    def __repr__(self):
        return f'GF({self.modulus})'


QQ = RationalField()


@lru_cache(maxsize=32)
def GF(p):
    return PrimeField(p)


def working_prime():
    return setting('MODULAR_PRIME', DEFAULT_PRIME)


def prime_sequence(start=None):
    """
    Yield primes downward from ``start`` (the working prime by default).

    Used when a modular result must be confirmed by a second prime or when a
    prime turns out to divide an input denominator.
    """
    p = start if start is not None else working_prime()
    if not _is_prime(p):
        p = sympy.prevprime(p)
    while p > 2:
        yield int(p)
        p = sympy.prevprime(p)
