"""
Multivariate polynomial rings with named variables.

A ``RingContext`` fixes the variable names, the coefficient field and the
active ``MonomialOrder``; a ``Polynomial`` is an immutable map from exponent
tuples to nonzero coefficients bound to one ring. Monomials are plain tuples
of nonnegative integers, one entry per ring variable.

The textual grammar is::

    expr        := ['+'|'-'] term (('+'|'-') term)*
    term        := factor ('*' factor)*
    factor      := coefficient | variable ('^' uint)? | '(' expr ')'
    coefficient := ['+'|'-'] uint ('/' uint)?

``str(poly)`` prints in that grammar with terms in descending order, so
``parse_poly(str(f), f.ring) == f``.
"""

import enum
import re
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property, lru_cache

from .arith import QQ
from .exceptions import (
    DivisionByZeroError,
    InputError,
    PolynomialSyntaxError,
    RingMismatchError,
    UnknownVariableError,
)


class Comparison(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


# Monomials ------------------------------------------------------------------

def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(a, b):
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def monomial_degree(a):
    return sum(a)


def _revneg(m):
    return tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """
    A monomial order.

    ``kind`` is ``lex``, ``degrevlex`` or ``block``. A block order compares the
    first ``block_sizes[0]`` variables first (with the ``inner`` order), then
    the next block, and so on; it eliminates the first block.
    """

    kind: str = 'degrevlex'
    block_sizes: tuple = ()
    inner: str = 'degrevlex'

    def __post_init__(self):
        if self.kind not in ('lex', 'degrevlex', 'block'):
            raise InputError(f"unknown monomial order '{self.kind}'")
        if self.kind == 'block' and (not self.block_sizes or min(self.block_sizes) < 1):
            raise InputError("block order needs positive block sizes")
        if self.inner not in ('lex', 'degrevlex'):
            raise InputError(f"unknown inner order '{self.inner}'")

    @classmethod
    def lex(cls):
        return cls('lex')

    @classmethod
    def degrevlex(cls):
        return cls('degrevlex')

    @classmethod
    def block(cls, sizes, inner='degrevlex'):
        return cls('block', tuple(sizes), inner)

    @cached_property
    def key(self):
        """Sort key function: a larger key means a larger monomial."""
        return _key_function(self)

    def __getstate__(self):
        state = dict(self.__dict__)
        state.pop('key', None)
        return state

    def compare(self, m1, m2):
        k1, k2 = self.key(m1), self.key(m2)
        if k1 == k2:
            return Comparison.EQUAL
        return Comparison.GREATER if k1 > k2 else Comparison.LESS


def _key_function(order):
    if order.kind == 'lex':
        return tuple
    memo = {}
    if order.kind == 'degrevlex':
        def key(m):
            k = memo.get(m)
            if k is None:
                k = memo[m] = (sum(m), _revneg(m))
            return k
        return key
    bounds = []
    start = 0
    for size in order.block_sizes:
        bounds.append((start, start + size))
        start += size
    lex_inner = order.inner == 'lex'

    def key(m):
        k = memo.get(m)
        if k is None:
            parts = [m[a:b] for a, b in bounds]
            if lex_inner:
                k = tuple(parts)
            else:
                k = tuple((sum(part), _revneg(part)) for part in parts)
            memo[m] = k
        return k
    return key


DEGREVLEX = MonomialOrder.degrevlex()
LEX = MonomialOrder.lex()


def compare_monomials(order, m1, m2):
    if len(m1) != len(m2):
        raise RingMismatchError("monomials of different length")
    return order.compare(tuple(m1), tuple(m2))


# Rings ----------------------------------------------------------------------

_NAME = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


@dataclass(frozen=True)
class RingContext:
    """
    Polynomial ring over ``field`` in the named ``variables``.

    ``blocks`` optionally partitions the variables into consecutive named
    blocks, e.g. ``(('y', ('y0', 'y1')), ('x', ('x0', 'x1', 'x2')))``.
    """

    variables: tuple
    field: object = QQ
    order: MonomialOrder = DEGREVLEX
    blocks: tuple = dataclass_field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'variables', tuple(self.variables))
        object.__setattr__(self, 'blocks', tuple((name, tuple(names)) for name, names in self.blocks))
        if not self.variables:
            raise InputError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise InputError("variable names must be distinct")
        for name in self.variables:
            if not _NAME.match(name):
                raise InputError(f"invalid variable name '{name}'")
        if self.blocks:
            flat = tuple(v for _, names in self.blocks for v in names)
            if flat != self.variables:
                raise InputError("blocks must partition the variables in order")
        if self.order.kind == 'block' and sum(self.order.block_sizes) != len(self.variables):
            raise InputError("block order sizes do not match the variable count")

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(name) from None

    @property
    def _index(self):
        return _variable_index(self.variables)

    def with_order(self, order):
        if order == self.order:
            return self
        return RingContext(self.variables, self.field, order, self.blocks)

    def with_field(self, field):
        if field == self.field:
            return self
        return RingContext(self.variables, field, self.order, self.blocks)

    def block_order(self, inner='degrevlex'):
        if not self.blocks:
            return self.order
        return MonomialOrder.block([len(names) for _, names in self.blocks], inner)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, value):
        c = self.field.convert(value)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name):
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def gens(self):
        return tuple(self.var(name) for name in self.variables)

    def monomial(self, exponents, coefficient=1):
        exponents = tuple(exponents)
        if len(exponents) != self.nvars or min(exponents) < 0:
            raise InputError("bad exponent vector")
        c = self.field.convert(coefficient)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {exponents: c})

    def from_dict(self, terms):
        """Build a polynomial from ``{exponent tuple: coefficient}``."""
        result = {}
        for m, c in terms.items():
            c = self.field.convert(c)
            if not self.field.is_zero(c):
                result[tuple(m)] = c
        return Polynomial(self, result)

    def parse(self, text):
        return parse_poly(text, self)

    def compatible(self, other):
        return self.variables == other.variables and self.field == other.field

    def __str__(self):
        return f"{self.field!r}[{', '.join(self.variables)}]"


@lru_cache(maxsize=256)
def _variable_index(variables):
    return {name: i for i, name in enumerate(variables)}


def projective_ring(n, prefix='x', field=QQ):
    """Coordinate ring of P^n with variables x0..xn and degrevlex order."""
    return RingContext(tuple(f"{prefix}{i}" for i in range(n + 1)), field)


def elimination_ring(ring, drop, inner='degrevlex'):
    """
    Reorder ``ring`` so the ``drop`` variables come first under a block order
    that eliminates them.
    """
    drop = [v for v in ring.variables if v in set(drop)]
    keep = [v for v in ring.variables if v not in set(drop)]
    if not drop:
        return ring.with_order(DEGREVLEX), tuple(keep)
    if not keep:
        raise InputError("cannot eliminate every variable")
    blocks = (('drop', tuple(drop)), ('keep', tuple(keep)))
    order = MonomialOrder.block((len(drop), len(keep)), inner)
    return RingContext(tuple(drop) + tuple(keep), ring.field, order, blocks), tuple(keep)


# Polynomials ----------------------------------------------------------------

class Polynomial:
    """Immutable multivariate polynomial; see the module docstring."""

    __slots__ = ('ring', '_terms', '_sorted', '_hash')

    def __init__(self, ring, terms):
        self.ring = ring
        self._terms = terms
        self._sorted = None
        self._hash = None

    # access

    def items(self):
        """(monomial, coefficient) pairs in no particular order."""
        return self._terms.items()

    def coefficient(self, monomial):
        return self._terms.get(tuple(monomial), self.ring.field.zero)

    @property
    def terms(self):
        """(coefficient, monomial) pairs, strictly descending in the ring order."""
        if self._sorted is None:
            key = self.ring.order.key
            ordered = sorted(self._terms, key=key, reverse=True)
            self._sorted = tuple((self._terms[m], m) for m in ordered)
        return self._sorted

    def monomials(self):
        return tuple(m for _, m in self.terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    @property
    def leading_term(self):
        if not self._terms:
            raise InputError("the zero polynomial has no leading term")
        if self._sorted is not None:
            return self._sorted[0]
        m = max(self._terms, key=self.ring.order.key)
        return self._terms[m], m

    @property
    def leading_monomial(self):
        return self.leading_term[1]

    @property
    def leading_coefficient(self):
        return self.leading_term[0]

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self):
        return multidegree(self, [self.ring.variables]) is not None or not self._terms

    def variables_used(self):
        used = set()
        for m in self._terms:
            used.update(self.ring.variables[i] for i, e in enumerate(m) if e)
        return tuple(v for v in self.ring.variables if v in used)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if not self.ring.compatible(other.ring):
                raise RingMismatchError(f"{self.ring} and {other.ring}")
            return other
        try:
            return self.ring.constant(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.ring.field
        result = dict(self._terms)
        for m, c in other._terms.items():
            s = field.add(result.get(m, field.zero), c)
            if field.is_zero(s):
                result.pop(m, None)
            else:
                result[m] = s
        return Polynomial(self.ring, result)

    __radd__ = __add__

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {m: field.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.ring.field
        result = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = field.add(result.get(m, field.zero), field.mul(c1, c2))
                if field.is_zero(s):
                    result.pop(m, None)
                else:
                    result[m] = s
        return Polynomial(self.ring, result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise InputError("polynomial powers need a nonnegative integer exponent")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c):
        field = self.ring.field
        c = field.convert(c)
        if field.is_zero(c):
            return self.ring.zero()
        return Polynomial(self.ring, {m: field.mul(a, c) for m, a in self._terms.items()})

    def mul_term(self, monomial, c):
        field = self.ring.field
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(m, monomial)): field.mul(a, c) for m, a in self._terms.items()},
        )

    def monic(self):
        if not self._terms:
            return self
        field = self.ring.field
        inv = field.inv(self.leading_coefficient)
        return Polynomial(self.ring, {m: field.mul(c, inv) for m, c in self._terms.items()})

    def derivative(self, name):
        i = self.ring.index(name)
        field = self.ring.field
        result = {}
        for m, c in self._terms.items():
            if m[i]:
                d = field.mul(c, field.convert(m[i]))
                if not field.is_zero(d):
                    result[m[:i] + (m[i] - 1,) + m[i + 1:]] = d
        return Polynomial(self.ring, result)

    def evaluate(self, values):
        """Value at a point given as a sequence (ring order) or a name->value dict."""
        field = self.ring.field
        if isinstance(values, dict):
            values = [values[name] for name in self.ring.variables]
        if len(values) != self.ring.nvars:
            raise InputError("wrong number of values")
        point = [field.convert(v) for v in values]
        total = field.zero
        for m, c in self._terms.items():
            term = c
            for v, e in zip(point, m):
                if e:
                    for _ in range(e):
                        term = field.mul(term, v)
            total = field.add(total, term)
        return total

    def substitute(self, images, target):
        """
        Compose with a ring map: every variable of this ring is replaced by the
        polynomial ``images[name]`` of ``target`` (missing names map to the
        same-named variable of ``target``).
        """
        subs = []
        for name in self.ring.variables:
            image = images.get(name)
            if image is None:
                image = target.var(name)
            elif not isinstance(image, Polynomial):
                image = target.constant(image)
            subs.append(image)
        powers = [{0: target.one()} for _ in subs]
        result = target.zero()
        for m, c in self._terms.items():
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    cache = powers[i]
                    if e not in cache:
                        cache[e] = subs[i] ** e
                    term = term * cache[e]
            result = result + term
        return result

    def embed(self, target, rename=None):
        """
        Move this polynomial into ``target`` by variable name (optionally
        through ``rename``); every used variable must exist in ``target``.
        """
        rename = rename or {}
        positions = []
        for i, name in enumerate(self.ring.variables):
            positions.append(target._index.get(rename.get(name, name)))
        field = target.field
        result = {}
        for m, c in self._terms.items():
            exps = [0] * target.nvars
            for i, e in enumerate(m):
                if e:
                    j = positions[i]
                    if j is None:
                        raise RingMismatchError(
                            f"variable '{self.ring.variables[i]}' does not exist in {target}"
                        )
                    exps[j] += e
            if field == self.ring.field:
                value = c
            else:
                value = field.convert(c)
                if field.is_zero(value):
                    continue
            key = tuple(exps)
            if key in result:
                value = field.add(result[key], value)
                if field.is_zero(value):
                    del result[key]
                    continue
            result[key] = value
        return Polynomial(target, result)

    def in_ring(self, ring):
        """Re-tag with a ring that has the same variables and field (e.g. another order)."""
        if ring is self.ring:
            return self
        if not ring.compatible(self.ring):
            raise RingMismatchError(f"{self.ring} and {ring}")
        return Polynomial(ring, self._terms)

    # comparison and printing

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.compatible(other.ring) and self._terms == other._terms
        if isinstance(other, (int,)) or hasattr(other, 'denominator'):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def poly_mul(f, g):
    """Exact product of two polynomials of the same ring."""
    if not f.ring.compatible(g.ring):
        raise RingMismatchError(f"{f.ring} and {g.ring}")
    return f * g


def multidegree(f, blocks):
    """
    Multidegree of ``f`` with respect to ``blocks`` (sequences of variable
    names partitioning the ring), or None when f is not multihomogeneous.
    The zero polynomial also returns None.
    """
    indices = [[f.ring.index(name) for name in block] for block in blocks]
    if sorted(i for block in indices for i in block) != list(range(f.ring.nvars)):
        raise InputError("blocks must partition the ring variables")
    degree = None
    for m in f._terms:
        d = tuple(sum(m[i] for i in block) for block in indices)
        if degree is None:
            degree = d
        elif d != degree:
            return None
    return degree


# Printing -------------------------------------------------------------------

def _format_monomial(ring, m):
    parts = []
    for name, e in zip(ring.variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return '*'.join(parts)


def format_poly(f):
    if not f._terms:
        return '0'
    field = f.ring.field
    pieces = []
    for i, (c, m) in enumerate(f.terms):
        negative = field.characteristic == 0 and c < 0
        magnitude = -c if negative else c
        mono = _format_monomial(f.ring, m)
        coeff = field.format(magnitude)
        if mono and coeff == '1':
            body = mono
        elif mono:
            body = f"{coeff}*{mono}"
        else:
            body = coeff
        if i == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return ''.join(pieces)


# Parsing --------------------------------------------------------------------

_TOKEN = re.compile(
    r'(?P<space>\s+)|(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])|(?P<bad>.)'
)


def _tokenize(text):
    tokens = []
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        if kind == 'space':
            continue
        if kind == 'bad':
            raise PolynomialSyntaxError(f"unexpected character '{match.group()}'", match.start())
        tokens.append((kind, match.group(), match.start()))
    tokens.append(('end', '', len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, value):
        kind, text, where = self.take()
        if text != value:
            found = text or 'end of input'
            raise PolynomialSyntaxError(f"expected '{value}', found '{found}'", where)

    def parse(self):
        result = self.expr()
        kind, text, where = self.peek()
        if kind != 'end':
            raise PolynomialSyntaxError(f"unexpected '{text}'", where)
        return result

    def expr(self):
        sign = None
        if self.peek()[1] in ('+', '-'):
            sign = self.take()[1]
        result = self.term()
        if sign == '-':
            result = -result
        while self.peek()[1] in ('+', '-'):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == '+' else result - rhs
        return result

    def term(self):
        result = self.factor()
        while self.peek()[1] == '*':
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        kind, text, where = self.take()
        sign = ''
        if text in ('+', '-') and self.peek()[0] == 'number':
            sign = text
            kind, text, where = self.take()
        if kind == 'number':
            numerator = int(sign + text)
            if self.peek()[1] == '/':
                self.take()
                kind2, text2, where2 = self.take()
                if kind2 != 'number':
                    raise PolynomialSyntaxError("expected a denominator", where2)
                if int(text2) == 0:
                    raise PolynomialSyntaxError("zero denominator", where2)
                return self.ring.constant(f"{numerator}/{text2}")
            return self.ring.constant(numerator)
        if kind == 'name':
            if text not in self.ring._index:
                raise UnknownVariableError(text)
            base = self.ring.var(text)
            if self.peek()[1] == '^':
                self.take()
                kind2, text2, where2 = self.take()
                if kind2 != 'number':
                    raise PolynomialSyntaxError("expected an exponent", where2)
                return base ** int(text2)
            return base
        if text == '(':
            inner = self.expr()
            self.expect(')')
            return inner
        raise PolynomialSyntaxError(f"unexpected '{text or 'end of input'}'", where)


def parse_poly(text, ring):
    """
    Parse ``text`` (see the module grammar) into a polynomial of ``ring``.

    Raises:
        PolynomialSyntaxError: with the offending position
        UnknownVariableError: for names not declared in the ring
    """
    try:
        return _Parser(text, ring).parse()
    except DivisionByZeroError as exc:
        raise PolynomialSyntaxError(str(exc), 0) from exc


_SUBSCRIPT = re.compile(r'([A-Za-z])_\{?(\d+)\}?')
_CHUNK = re.compile(r'[A-Za-z0-9_]+|[-+*/^()]|\S')


def _split_chunk(chunk, names):
    digits = re.match(r'\d*', chunk).group()
    pieces = [digits] if digits else []
    rest = chunk[len(digits):]
    while rest:
        for name in names:
            if rest.startswith(name):
                pieces.append(name)
                rest = rest[len(name):]
                break
        else:
            raise UnknownVariableError(rest)
    return pieces


def _is_atom(token):
    return token[0].isalnum() or token[0] == '_'


def normalize_juxtaposed(text, names):
    """
    Rewrite handwritten input such as ``2x_0x_2 - x_1^2`` into the strict
    grammar (``2*x0*x2 - x1^2``) by splitting runs of letters and digits into
    the declared variable names and inserting the implicit products.
    """
    names = sorted(names, key=len, reverse=True)
    text = _SUBSCRIPT.sub(r'\1\2', text)
    tokens = []
    for chunk in _CHUNK.findall(text):
        if _is_atom(chunk):
            tokens.extend(_split_chunk(chunk, names))
        else:
            tokens.append(chunk)
    out = []
    for token in tokens:
        if out:
            prev = out[-1]
            ends = _is_atom(prev) or prev == ')'
            starts = _is_atom(token) or token == '('
            if ends and starts:
                out.append('*')
        out.append(token)
    return ''.join(out)
