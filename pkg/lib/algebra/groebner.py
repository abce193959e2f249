"""
Gröbner bases and ideal calculus.

Buchberger's algorithm with normal pair selection (smallest lcm first, sugar
as tie-break) and the Gebauer-Möller pair criteria; every result is the
reduced, monic basis sorted by descending leading monomial. Elimination,
saturation and intersection are all built on block-order eliminations.
"""

import contextlib
import contextvars
import heapq
import logging
from dataclasses import dataclass

from .conf import setting
from .exceptions import BudgetExceededError, InputError, RingMismatchError, UnknownVariableError
from .poly import (
    DEGREVLEX,
    Polynomial,
    RingContext,
    elimination_ring,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Budget:
    pairs: int
    terms: int

    @classmethod
    def default(cls):
        return cls(
            pairs=setting('GROEBNER_PAIR_BUDGET', 1000000),
            terms=setting('GROEBNER_TERM_BUDGET', 200000),
        )


_active_budget = contextvars.ContextVar('groebner_budget', default=None)


def current_budget():
    return _active_budget.get() or Budget.default()


@contextlib.contextmanager
def budget_limit(pairs=None, terms=None):
    """Temporarily cap every Buchberger run in this context."""
    base = current_budget()
    token = _active_budget.set(Budget(pairs or base.pairs, terms or base.terms))
    try:
        yield
    finally:
        _active_budget.reset(token)


# Reduction ------------------------------------------------------------------

def _reducer(g):
    """(leading monomial, inverse leading coefficient, tail items) of a nonzero polynomial."""
    field = g.ring.field
    c, m = g.leading_term
    tail = [(mm, cc) for mm, cc in g.items() if mm != m]
    return m, field.inv(c), tail


def _reduce(terms, reducers, field, key, term_budget):
    p = dict(terms)
    remainder = {}
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        for lm, inv, tail in reducers:
            if monomial_divides(lm, m):
                q = monomial_div(m, lm)
                factor = field.mul(c, inv)
                for gm, gc in tail:
                    mm = tuple(a + b for a, b in zip(gm, q))
                    v = field.sub(p.get(mm, field.zero), field.mul(factor, gc))
                    if field.is_zero(v):
                        p.pop(mm, None)
                    else:
                        p[mm] = v
                break
        else:
            remainder[m] = c
        if len(p) > term_budget:
            raise BudgetExceededError(f"intermediate polynomial exceeds {term_budget} terms")
    return remainder


def _in_order(f, order):
    return f.in_ring(f.ring.with_order(order))


def normal_form(f, basis, order=None):
    """
    Fully reduce ``f`` by ``basis``. Among several reducers for a term the
    first one in list order is used.
    """
    order = order or f.ring.order
    ring = f.ring.with_order(order)
    reducers = []
    for g in basis:
        if not ring.compatible(g.ring):
            raise RingMismatchError(f"{f.ring} and {g.ring}")
        if g:
            reducers.append(_reducer(_in_order(g, order)))
    terms = _reduce(f._terms, reducers, ring.field, order.key, current_budget().terms)
    return Polynomial(ring, terms)


def s_polynomial(f, g):
    field = f.ring.field
    cf, mf = f.leading_term
    cg, mg = g.leading_term
    lcm = monomial_lcm(mf, mg)
    return (f.mul_term(monomial_div(lcm, mf), field.inv(cf))
            - g.mul_term(monomial_div(lcm, mg), field.inv(cg)))


# Buchberger -----------------------------------------------------------------

def _update(lms, pairs, new):
    """Gebauer-Möller update of the pair set when basis element ``new`` is added."""
    lmf = lms[new]
    kept = set()
    for i, j in pairs:
        l_ij = monomial_lcm(lms[i], lms[j])
        if (not monomial_divides(lmf, l_ij)
                or l_ij == monomial_lcm(lms[i], lmf)
                or l_ij == monomial_lcm(lms[j], lmf)):
            kept.add((i, j))
    by_lcm = {}
    for i in range(new):
        by_lcm.setdefault(monomial_lcm(lms[i], lmf), []).append(i)
    minimal = []
    for lcm in sorted(by_lcm, key=lambda m: (sum(m), m)):
        if all(not monomial_divides(other, lcm) for other in minimal):
            minimal.append(lcm)
    fresh = set()
    for lcm in minimal:
        # coprime leading monomials: the pair reduces to zero
        if not any(monomial_lcm(lms[i], lmf) == monomial_mul(lms[i], lmf) for i in by_lcm[lcm]):
            fresh.add((min(by_lcm[lcm]), new))
    return kept, fresh


def _minimalize(basis, key):
    minimal = []
    for g in sorted(basis, key=lambda h: key(h.leading_monomial)):
        if all(not monomial_divides(h.leading_monomial, g.leading_monomial) for h in minimal):
            minimal.append(g)
    return minimal


def _interreduce(basis, key, term_budget):
    reduced = []
    for i, g in enumerate(basis):
        others = [_reducer(h) for k, h in enumerate(basis) if k != i]
        lc, lm = g.leading_term
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _reduce(tail, others, g.ring.field, key, term_budget)
        tail[lm] = lc
        reduced.append(Polynomial(g.ring, tail).monic())
    return reduced


def buchberger(ideal, order=None, budget=None):
    """
    Reduced Gröbner basis of ``ideal`` (an Ideal or a sequence of
    polynomials of one ring) for ``order``.

    Raises:
        BudgetExceededError: when the pair-reduction or term budget is used up
    """
    generators = ideal.generators if isinstance(ideal, Ideal) else tuple(ideal)
    generators = [g for g in generators if g]
    if not generators:
        return ()
    ring0 = generators[0].ring
    for g in generators:
        if not ring0.compatible(g.ring):
            raise RingMismatchError(f"{ring0} and {g.ring}")
    order = order or ring0.order
    ring = ring0.with_order(order)
    field = ring.field
    key = order.key
    budget = budget or current_budget()

    basis = []
    reducers = []
    lms = []
    sugar = []
    heap = []
    active = set()

    def add(poly, poly_sugar):
        poly = poly.monic()
        basis.append(poly)
        reducers.append(_reducer(poly))
        lms.append(poly.leading_monomial)
        sugar.append(poly_sugar)
        new = len(basis) - 1
        kept, fresh = _update(lms, active, new)
        active.intersection_update(kept)
        for i, j in fresh:
            lcm = monomial_lcm(lms[i], lms[j])
            s = max(sugar[i] + sum(lcm) - sum(lms[i]), sugar[j] + sum(lcm) - sum(lms[j]))
            heapq.heappush(heap, (sum(lcm), key(lcm), s, i, j))
            active.add((i, j))

    for g in sorted((_in_order(g, order) for g in generators), key=lambda h: key(h.leading_monomial)):
        if g.is_constant():
            logger.debug("constant generator: unit ideal")
            return (ring.one(),)
        add(g, g.total_degree())

    reductions = 0
    while heap:
        _, _, s, i, j = heapq.heappop(heap)
        if (i, j) not in active:
            continue
        active.discard((i, j))
        reductions += 1
        if reductions > budget.pairs:
            logger.error("Buchberger pair budget of %d exhausted", budget.pairs)
            raise BudgetExceededError(f"more than {budget.pairs} pair reductions")
        spoly = s_polynomial(basis[i], basis[j])
        remainder = _reduce(spoly._terms, reducers, field, key, budget.terms)
        if remainder:
            r = Polynomial(ring, remainder)
            if r.is_constant():
                logger.debug("unit ideal reached after %d reductions", reductions)
                return (ring.one(),)
            add(r, s)

    logger.debug("Buchberger: %d reductions, %d elements before reduction", reductions, len(basis))
    reduced = _interreduce(_minimalize(basis, key), key, budget.terms)
    reduced.sort(key=lambda g: key(g.leading_monomial), reverse=True)
    return tuple(reduced)


def is_groebner_basis(basis, order=None):
    """Buchberger criterion: every S-polynomial of the basis reduces to zero."""
    basis = [g for g in basis if g]
    if not basis:
        return True
    order = order or basis[0].ring.order
    basis = [_in_order(g, order) for g in basis]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(s_polynomial(basis[i], basis[j]), basis, order):
                return False
    return True


# Ideals ---------------------------------------------------------------------

class Ideal:
    """
    An ideal given by generators in one ring; reduced Gröbner bases are
    computed on demand and cached per monomial order.
    """

    def __init__(self, ring, generators=()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.constant(g)
            if not ring.compatible(g.ring):
                raise RingMismatchError(f"generator of {g.ring} in an ideal of {ring}")
            if g:
                gens.append(g.in_ring(ring))
        self.ring = ring
        self.generators = tuple(gens)
        self._bases = {}

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    @classmethod
    def parse(cls, ring, texts):
        return cls(ring, [ring.parse(text) for text in texts])

    def groebner_basis(self, order=None):
        order = order or DEGREVLEX
        basis = self._bases.get(order)
        if basis is None:
            basis = buchberger(self, order)
            self._bases[order] = basis
        return basis

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        basis = self.groebner_basis()
        return len(basis) == 1 and basis[0].is_constant()

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def leading_monomials(self, order=None):
        return tuple(g.leading_monomial for g in self.groebner_basis(order))

    def contains(self, f):
        return ideal_member(f, self)

    def __add__(self, other):
        if isinstance(other, Ideal):
            other = other.generators
        return Ideal(self.ring, self.generators + tuple(other))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        if not self.generators:
            return '(0)'
        return '(' + ', '.join(str(g) for g in self.generators) + ')'

    def __repr__(self):
        return f"Ideal({self.ring}, {self})"


def eliminate(ideal, drop, target=None):
    """
    I ∩ K[remaining variables] from a block-order basis that puts ``drop``
    first. The result lives in ``target`` (by default a degrevlex ring on the
    remaining variables in their original order).
    """
    ring = ideal.ring
    for name in drop:
        if name not in ring._index:
            raise UnknownVariableError(name)
    if not drop:
        return Ideal(ring, ideal.groebner_basis())
    work, keep = elimination_ring(ring, drop)
    if target is None:
        target = RingContext(keep, ring.field)
    elif set(target.variables) != set(keep):
        raise RingMismatchError(f"elimination target {target} does not carry {keep}")
    logger.info("eliminating %d of %d variables from %d generators", len(drop), ring.nvars, len(ideal))
    basis = buchberger([g.embed(work) for g in ideal.generators], work.order)
    dropped = range(len(work.variables) - len(keep))
    survivors = [g for g in basis if not any(m[i] for m in g._terms for i in dropped)]
    logger.info("elimination basis: %d elements, %d survive", len(basis), len(survivors))
    return Ideal(target, [g.embed(target) for g in survivors])


def ideal_member(f, ideal):
    if not f.ring.compatible(ideal.ring):
        raise RingMismatchError(f"{f.ring} and {ideal.ring}")
    if not f:
        return True
    return not normal_form(f, ideal.groebner_basis(), DEGREVLEX)


def _fresh_name(ring, stem='t'):
    name = f"_{stem}"
    i = 0
    while name in ring._index:
        i += 1
        name = f"_{stem}{i}"
    return name


def _with_extra_variable(ring):
    t = _fresh_name(ring)
    return RingContext((t,) + ring.variables, ring.field), t


def colon_saturate(ideal, f):
    """(I : f^∞), from eliminating t out of I + (1 - t*f)."""
    if not f:
        raise InputError("cannot saturate by the zero polynomial")
    if f.is_constant() or ideal.is_zero():
        return Ideal(ideal.ring, ideal.generators)
    ext, t = _with_extra_variable(ideal.ring)
    gens = [g.embed(ext) for g in ideal.generators]
    gens.append(ext.one() - ext.var(t) * f.embed(ext))
    return eliminate(Ideal(ext, gens), [t], target=ideal.ring)


def intersect(first, second):
    """I ∩ J, from eliminating t out of t*I + (1 - t)*J."""
    if not first.ring.compatible(second.ring):
        raise RingMismatchError(f"{first.ring} and {second.ring}")
    if first.is_zero() or second.is_zero():
        return Ideal(first.ring)
    if first.is_unit():
        return Ideal(second.ring, second.groebner_basis())
    if second.is_unit():
        return Ideal(first.ring, first.groebner_basis())
    ext, t = _with_extra_variable(first.ring)
    tv = ext.var(t)
    gens = [tv * g.embed(ext) for g in first.generators]
    gens += [(ext.one() - tv) * g.embed(ext) for g in second.generators]
    return eliminate(Ideal(ext, gens), [t], target=first.ring)


def saturate_irrelevant(ideal):
    """∩_i (I : x_i^∞) over all ring variables."""
    result = None
    for x in ideal.ring.gens():
        part = colon_saturate(ideal, x)
        result = part if result is None else intersect(result, part)
    return result


def ideal_equal(first, second, order=None):
    if not first.ring.compatible(second.ring):
        raise RingMismatchError(f"{first.ring} and {second.ring}")
    return first.groebner_basis(order) == second.groebner_basis(order)
