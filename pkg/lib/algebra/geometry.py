"""
Projective constructions around Hadamard products of varieties.

Varieties are given parametrically (n+1 forms in parameter variables, one
common multidegree) or implicitly (a homogeneous ideal in x0..xn). Hadamard
products are computed by a single elimination; the linear-algebra side
(M', coefficient points, the projection center) is kept as an independent
certificate of genericity.
"""

import logging
import random
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations_with_replacement, product as cartesian
from math import comb, prod

from .arith import QQ
from .conf import setting
from .exceptions import (
    AmbientMismatchError,
    BudgetExceededError,
    CannotCompleteError,
    DegeneratePresentationError,
    DegreeMismatchError,
    InputError,
    NonLinearFactorError,
    RingMismatchError,
    UndefinedProductError,
)
from .groebner import Ideal, budget_limit, current_budget, eliminate, saturate_irrelevant
from .invariants import hf_product_check, variety_invariants
from .linalg import (
    ExactMatrix,
    complete_to_invertible,
    determinant,
    echelon_form,
    jacobian,
    kernel_basis,
    minors,
    rank,
)
from .poly import RingContext, multidegree, projective_ring

logger = logging.getLogger(__name__)

PARAMETRIC = 'parametric'
IMPLICIT = 'implicit'

BLOCK_LETTERS = 'yztuvw'


def block_names(index, size):
    """Canonical names of the index-th parameter (or copy) block."""
    letter = BLOCK_LETTERS[index] if index < len(BLOCK_LETTERS) else f"w{index}_"
    return tuple(f"{letter}{i}" for i in range(size))


def multinomial(parts):
    parts = list(parts)
    result = 1
    total = 0
    for r in parts:
        total += r
        result *= comb(total, r)
    return result


# Points -----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    coordinates: tuple
    field: object = QQ

    def __post_init__(self):
        coords = tuple(self.field.convert(x) for x in self.coordinates)
        if not coords:
            raise InputError("a projective point needs coordinates")
        if all(self.field.is_zero(x) for x in coords):
            raise InputError("all coordinates of a projective point are zero")
        object.__setattr__(self, 'coordinates', coords)

    @property
    def ambient(self):
        return len(self.coordinates) - 1

    def normalized(self):
        """Coordinates scaled so the first nonzero one is 1."""
        lead = next(x for x in self.coordinates if not self.field.is_zero(x))
        inv = self.field.inv(lead)
        return tuple(self.field.mul(x, inv) for x in self.coordinates)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.field == other.field and self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __str__(self):
        return '[' + ':'.join(self.field.format(x) for x in self.coordinates) + ']'


def hadamard_point(p, q):
    """Coordinatewise product of two points of the same P^n."""
    if p.ambient != q.ambient:
        raise AmbientMismatchError(f"points of P^{p.ambient} and P^{q.ambient}")
    if p.field != q.field:
        raise RingMismatchError("points over different fields")
    field = p.field
    coords = tuple(field.mul(a, b) for a, b in zip(p.coordinates, q.coordinates))
    if all(field.is_zero(x) for x in coords):
        raise UndefinedProductError(f"{p} * {q} has no nonzero coordinate")
    return ProjectivePoint(coords, field)


def point_on(point, ideal):
    """True when every generator of ``ideal`` vanishes at ``point``."""
    return all(ideal.ring.field.is_zero(g.evaluate(point.coordinates)) for g in ideal.generators)


# Presentations ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class VarietyPresentation:
    """
    A subvariety of P^ambient, parametric or implicit.

    Parametric presentations carry ``forms`` (one per coordinate) in
    ``param_ring`` whose variables are split into ``param_blocks``; every
    nonzero form has multidegree ``multidegree`` with respect to those
    blocks. Implicit presentations carry a homogeneous ``ideal`` of
    ``x_ring``. ``dimension``, ``degree`` and ``span`` are the claimed r, d
    and h.
    """

    kind: str
    x_ring: RingContext
    forms: tuple = ()
    param_ring: RingContext = None
    param_blocks: tuple = ()
    multidegree: tuple = ()
    ideal: Ideal = None
    dimension: int = None
    degree: int = None
    span: int = None
    name: str = ''
    _cache: dict = dataclass_field(default_factory=dict, repr=False)

    @property
    def ambient(self):
        return self.x_ring.nvars - 1

    @property
    def field(self):
        return self.x_ring.field

    @property
    def is_parametric(self):
        return self.kind == PARAMETRIC

    @property
    def is_linear(self):
        return self.is_parametric and self.multidegree == (1,)

    @classmethod
    def parametric(cls, forms, param_ring, blocks=None, name='', dimension=None, degree=None, span=None):
        forms = tuple(forms)
        if len(forms) < 2:
            raise InputError("a parametric presentation needs at least two coordinates")
        x_ring = projective_ring(len(forms) - 1, field=param_ring.field)
        clash = set(x_ring.variables) & set(param_ring.variables)
        if clash:
            raise InputError(f"parameter names {sorted(clash)} clash with the coordinates")
        if blocks is None:
            blocks = tuple(names for _, names in param_ring.blocks) or (param_ring.variables,)
        blocks = tuple(tuple(b) for b in blocks)
        degree_vector = None
        for f in forms:
            if not param_ring.compatible(f.ring):
                raise RingMismatchError(f"coordinate form of {f.ring} in {param_ring}")
            if not f:
                continue
            d = multidegree(f, blocks)
            if d is None:
                raise DegreeMismatchError(f"coordinate form {f} is not multihomogeneous")
            if degree_vector is None:
                degree_vector = d
            elif d != degree_vector:
                raise DegreeMismatchError(f"coordinate forms of multidegrees {degree_vector} and {d}")
        if degree_vector is None:
            degree_vector = tuple(0 for _ in blocks)
        if dimension is None:
            dimension = sum(len(b) - 1 for b in blocks)
        if degree is None and len(blocks) == 1:
            degree = degree_vector[0]
        return cls(
            PARAMETRIC, x_ring, tuple(f.in_ring(param_ring) for f in forms), param_ring, blocks,
            degree_vector, None, dimension, degree, span, name,
        )

    @classmethod
    def implicit(cls, ideal, name='', dimension=None, degree=None, span=None):
        if not ideal.is_homogeneous():
            raise DegreeMismatchError("an implicit presentation needs a homogeneous ideal")
        x_ring = projective_ring(ideal.ring.nvars - 1, field=ideal.ring.field)
        if ideal.ring.variables != x_ring.variables:
            ideal = Ideal(x_ring, [g.embed(x_ring) for g in ideal.generators])
        return cls(IMPLICIT, x_ring, ideal=ideal, dimension=dimension, degree=degree, span=span, name=name)

    def implicit_ideal(self):
        """I(V) in the x-ring (implicitized once for parametric presentations)."""
        if not self.is_parametric:
            return self.ideal
        found = self._cache.get('ideal')
        if found is None:
            found = self._cache['ideal'] = implicitize(self)
        return found

    def __str__(self):
        label = self.name or self.kind
        return f"{label} in P^{self.ambient}"


@dataclass(frozen=True)
class HadamardResult:
    ideal: Ideal
    factors: tuple
    closure: bool = True
    parametrization: VarietyPresentation = None


@dataclass(frozen=True)
class SegreVeroneseSpec:
    degrees: tuple
    dims: tuple
    ambient: int
    presentation: VarietyPresentation
    monomials: tuple

    def implicit_ideal(self):
        return self.presentation.implicit_ideal()


@dataclass(frozen=True)
class ProjectionSpec:
    matrix: ExactMatrix
    center: tuple
    center_dimension: int
    rank: int

    @property
    def is_generic(self):
        return self.rank == self.matrix.rows

    def center_points(self):
        return tuple(ProjectivePoint(v, self.matrix.field) for v in self.center)


@dataclass(frozen=True)
class SecantInfo:
    dimension: int
    method: str


@dataclass(frozen=True)
class SingularReport:
    ideal: Ideal
    invariants: object
    smooth: bool
    method: str = 'minors'


@dataclass(frozen=True)
class EquivalenceCertificate:
    m_prime_rank: int
    completed: bool
    determinant_nonzero: bool
    substitution_vanishes: object
    hf_equal: bool

    @property
    def holds(self):
        return (self.completed and self.determinant_nonzero and self.hf_equal
                and self.substitution_vanishes is not False)


@dataclass(frozen=True)
class GenericInstance:
    factors: tuple
    certified: bool
    rank: int
    attempts: int


# Implicitization and products -------------------------------------------------

def implicitize(variety):
    """Ideal of the closure of the image: eliminate the parameters from (x_i - f_i)."""
    if not variety.is_parametric:
        raise InputError("only parametric presentations can be implicitized")
    params = variety.param_ring.variables
    ring = RingContext(params + variety.x_ring.variables, variety.field)
    gens = [ring.var(x) - f.embed(ring) for x, f in zip(variety.x_ring.variables, variety.forms)]
    return eliminate(Ideal(ring, gens), params, target=variety.x_ring)


def _check_factors(factors):
    if len(factors) < 2:
        raise InputError("a Hadamard product needs at least two factors")
    first = factors[0]
    for other in factors[1:]:
        if other.ambient != first.ambient:
            raise AmbientMismatchError(f"factors in P^{first.ambient} and P^{other.ambient}")
        if other.field != first.field:
            raise RingMismatchError("factors over different fields")


def _canonical_blocks(variety, start):
    """Rename map sending each parameter block to canonical block names from ``start``."""
    rename = {}
    blocks = []
    for k, block in enumerate(variety.param_blocks):
        names = block_names(start + k, len(block))
        rename.update(zip(block, names))
        blocks.append(names)
    return rename, blocks


def product_parametrization(first, second):
    """Forms f_i * g_i over the union of both factors' parameter blocks."""
    rename_a, blocks_a = _canonical_blocks(first, 0)
    rename_b, blocks_b = _canonical_blocks(second, len(blocks_a))
    blocks = blocks_a + blocks_b
    ring = RingContext(
        tuple(v for b in blocks for v in b), first.field,
        blocks=tuple((b[0][:-1], b) for b in blocks),
    )
    forms = [f.embed(ring, rename_a) * g.embed(ring, rename_b) for f, g in zip(first.forms, second.forms)]
    return VarietyPresentation.parametric(
        forms, ring, blocks=blocks,
        name=f"{first.name or 'X'}*{second.name or 'Y'}",
        dimension=first.dimension + second.dimension,
    )


def _eliminate_product(parts):
    """
    Ideal of the Hadamard product of ``parts``: in K[blocks, x] take every
    implicit factor's ideal on its own copy of the coordinates, add
    x_j - prod_i(block_i)_j and eliminate the blocks.
    """
    x_ring = parts[0].x_ring
    ring_blocks = []
    per_part = []
    index = 0
    for part in parts:
        if part.is_parametric:
            rename, blocks = _canonical_blocks(part, index)
            index += len(blocks)
            ring_blocks.extend(blocks)
            per_part.append(('forms', rename))
        else:
            names = block_names(index, x_ring.nvars)
            index += 1
            ring_blocks.append(names)
            per_part.append(('copy', dict(zip(x_ring.variables, names))))
    params = tuple(v for b in ring_blocks for v in b)
    ring = RingContext(params + x_ring.variables, x_ring.field)
    gens = []
    coordinate_terms = [ring.one() for _ in x_ring.variables]
    for part, (how, rename) in zip(parts, per_part):
        if how == 'forms':
            for j, f in enumerate(part.forms):
                coordinate_terms[j] = coordinate_terms[j] * f.embed(ring, rename)
        else:
            gens.extend(g.embed(ring, rename) for g in part.ideal.generators)
            for j, x in enumerate(x_ring.variables):
                coordinate_terms[j] = coordinate_terms[j] * ring.var(rename[x])
    gens.extend(ring.var(x) - term for x, term in zip(x_ring.variables, coordinate_terms))
    return eliminate(Ideal(ring, gens), params, target=x_ring)


def hadamard_product(factors, ambient=None):
    """
    Ideal of X1 * X2 * ... (the closure of all coordinatewise products),
    folded left to right. Parametric factors stay parametric through the
    fold, so a product of parametric factors costs one elimination.
    """
    factors = tuple(factors)
    _check_factors(factors)
    if ambient is not None and factors[0].ambient != ambient:
        raise AmbientMismatchError(f"factors live in P^{factors[0].ambient}, not P^{ambient}")
    logger.info("Hadamard product of %d factors in P^%d", len(factors), factors[0].ambient)
    acc = factors[0]
    for nxt in factors[1:]:
        if acc.is_parametric and nxt.is_parametric:
            acc = product_parametrization(acc, nxt)
        else:
            ideal = _eliminate_product([acc, nxt])
            acc = VarietyPresentation.implicit(ideal, name=f"{acc.name or 'X'}*{nxt.name or 'Y'}")
    if acc.is_parametric:
        return HadamardResult(acc.implicit_ideal(), factors, True, acc)
    return HadamardResult(acc.ideal, factors, True, None)


# Segre-Veronese -----------------------------------------------------------------

def _block_monomials(size, degree):
    """Exponent vectors of degree ``degree`` in ``size`` variables, x0^d first."""
    out = []
    for combo in combinations_with_replacement(range(size), degree):
        exps = [0] * size
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


def segre_veronese(degrees, dims, ambient=None, field=QQ):
    """
    Segre-Veronese embedding of P^r1 x ... x P^rl by multidegree (d1..dl):
    every product of one degree-d_i monomial per block, blocks nested left to
    right, graded-lex inside each block.
    """
    degrees, dims = tuple(degrees), tuple(dims)
    if not degrees or len(degrees) != len(dims):
        raise InputError("degrees and dimensions must be nonempty and of equal length")
    if min(degrees) < 1 or min(dims) < 1:
        raise InputError("degrees and dimensions must be positive")
    big_n = prod(comb(r + d, d) for r, d in zip(dims, degrees)) - 1
    if ambient is not None and ambient < big_n:
        raise InputError(f"ambient P^{ambient} is smaller than P^{big_n}")
    blocks = [block_names(k, r + 1) for k, r in enumerate(dims)]
    ring = RingContext(
        tuple(v for b in blocks for v in b), field,
        blocks=tuple((b[0][:-1], b) for b in blocks),
    )
    per_block = [_block_monomials(r + 1, d) for r, d in zip(dims, degrees)]
    monomials = tuple(tuple(e for part in choice for e in part) for choice in cartesian(*per_block))
    forms = [ring.monomial(m) for m in monomials]
    degree = multinomial(dims) * prod(d ** r for r, d in zip(dims, degrees))
    presentation = VarietyPresentation.parametric(
        forms, ring, blocks=blocks, name=f"S{degrees}",
        dimension=sum(dims), degree=degree, span=big_n,
    )
    return SegreVeroneseSpec(degrees, dims, big_n, presentation, monomials)


# M', coefficient points and the projection center --------------------------------

def _coefficient_matrix(variety, monomials=None):
    """Rows: coordinate forms; columns: monomials (all monomials of the multidegree by default)."""
    if monomials is None:
        per_block = [_block_monomials(len(b), d) for b, d in zip(variety.param_blocks, variety.multidegree)]
        monomials = [tuple(e for part in choice for e in part) for choice in cartesian(*per_block)]
    rows = [[f.coefficient(m) for m in monomials] for f in variety.forms]
    return ExactMatrix.from_rows(rows, variety.field), monomials


def build_m_prime(factors):
    """
    Row i holds the products a_{i,j1} * b_{i,j2} * ... of the linear
    coefficients of every factor, indices nested with the first factor slowest.
    """
    factors = tuple(factors)
    if not factors:
        raise InputError("M' needs at least one factor")
    for f in factors:
        if not f.is_linear:
            raise NonLinearFactorError(f"{f} is not a linear parametrization")
    if len({f.ambient for f in factors}) != 1:
        raise AmbientMismatchError("factors in different ambient spaces")
    field = factors[0].field
    rows = []
    for i in range(factors[0].ambient + 1):
        coefficient_lists = [[f.forms[i].coefficient(m) for m in _block_monomials(len(f.param_ring.variables), 1)]
                             for f in factors]
        row = []
        for choice in cartesian(*coefficient_lists):
            value = field.one
            for c in choice:
                value = field.mul(value, c)
            row.append(value)
        rows.append(row)
    return ExactMatrix.from_rows(rows, field)


def coefficient_points(factors):
    """
    P_i = coefficient vector of the product form f_i * g_i * ... in the
    Segre-Veronese monomial order of the factors' (dims, degrees).
    """
    factors = tuple(factors)
    _check_factors(factors)
    for f in factors:
        if not f.is_parametric or len(f.param_blocks) != 1:
            raise InputError("coefficient points need single-block parametric factors")
    spec = segre_veronese(
        [f.multidegree[0] for f in factors], [len(f.param_blocks[0]) - 1 for f in factors],
        field=factors[0].field,
    )
    acc = factors[0]
    for nxt in factors[1:]:
        acc = product_parametrization(acc, nxt)
    points = []
    for i, form in enumerate(acc.forms):
        form = form.embed(spec.presentation.param_ring)
        coords = [form.coefficient(m) for m in spec.monomials]
        if all(acc.field.is_zero(c) for c in coords):
            raise UndefinedProductError(f"product form {i} is zero")
        points.append(ProjectivePoint(coords, acc.field))
    return points


def projection_center(points):
    """Matrix with the points as rows, its kernel (the center) and the center's dimension."""
    points = list(points)
    if not points:
        raise InputError("no points")
    field = points[0].field
    matrix = ExactMatrix.from_rows([p.coordinates for p in points], field)
    r = rank(matrix)
    center = tuple(kernel_basis(matrix))
    return ProjectionSpec(matrix, center, matrix.cols - 1 - r, r)


def center_meets(projection, segre):
    """True when the projection center meets the Segre-Veronese variety."""
    ideal = segre.implicit_ideal()
    ring = ideal.ring
    if projection.matrix.cols != ring.nvars:
        raise AmbientMismatchError("center and Segre-Veronese variety in different spaces")
    forms = []
    for i in range(projection.matrix.rows):
        form = ring.zero()
        for c, x in zip(projection.matrix.row(i), ring.gens()):
            if not ring.field.is_zero(c):
                form = form + x.scale(c)
        forms.append(form)
    meets = variety_invariants(ideal + forms, truncation=1).dimension >= 0
    logger.info("center %s the Segre-Veronese variety", "meets" if meets else "misses")
    return meets


def linear_span(variety, name=None, block=0):
    """
    Linear parametrization of the smallest linear space containing the
    variety; its dimension is h. For parametric presentations the columns are
    the pivot columns of the coefficient matrix, for implicit ones a kernel
    basis of the linear forms in the ideal.
    """
    field = variety.field
    if variety.is_parametric:
        matrix, _ = _coefficient_matrix(variety)
        _, pivots = echelon_form(matrix)
        columns = [matrix.column(j) for j in pivots]
    else:
        basis = variety.ideal.groebner_basis()
        linear = [g for g in basis if g.total_degree() == 1]
        if any(g.is_constant() for g in basis):
            raise DegeneratePresentationError("the empty variety has no linear span")
        ring = variety.x_ring
        if linear:
            matrix = ExactMatrix.from_rows([[g.coefficient(m) for m in _block_monomials(ring.nvars, 1)]
                                            for g in linear], field)
            columns = kernel_basis(matrix)
        else:
            columns = [tuple(field.one if i == j else field.zero for i in range(ring.nvars))
                       for j in range(ring.nvars)]
    if not columns:
        raise DegeneratePresentationError("the presentation spans nothing")
    params = block_names(block, len(columns))
    ring = RingContext(params, field)
    gens = ring.gens()
    forms = []
    for i in range(variety.ambient + 1):
        form = ring.zero()
        for column, t in zip(columns, gens):
            if not field.is_zero(column[i]):
                form = form + t.scale(column[i])
        forms.append(form)
    h = len(columns) - 1
    return VarietyPresentation.parametric(forms, ring, name=name or f"span({variety.name})",
                                          dimension=h, degree=1, span=h)


def span_dimension(variety):
    return linear_span(variety).dimension


def _span_coordinates(variety):
    """
    Polynomials phi_j in the variety's parameters with f_i = sum_j V_ij phi_j,
    V the pivot columns of the coefficient matrix.
    """
    matrix, monomials = _coefficient_matrix(variety)
    rows, pivots = echelon_form(matrix)
    field = variety.field
    out = []
    for r in range(len(pivots)):
        terms = {m: c for m, c in zip(monomials, rows[r]) if not field.is_zero(c)}
        out.append(variety.param_ring.from_dict(terms))
    return out


def equivalence_certificate(factors, result, truncation=None):
    """
    Large-ambient certificate that X1 * ... * Xl is projectively equivalent to
    the Segre image of the factors: M' (built from the linear spans) completes
    to an invertible M, the composed parametrization M' o sigma o (params)
    satisfies every generator of the product ideal, and HF is multiplicative.
    """
    factors = tuple(factors)
    spans = [linear_span(f, block=k) for k, f in enumerate(factors)]
    m_prime = build_m_prime(spans)
    m_rank = rank(m_prime)
    try:
        completed = complete_to_invertible(m_prime)
        completes = True
        nonzero = not m_prime.field.is_zero(determinant(completed))
    except (CannotCompleteError, InputError):
        completes, nonzero = False, False

    vanishes = None
    if all(f.is_parametric and len(f.param_blocks) == 1 for f in factors):
        acc = factors[0]
        for nxt in factors[1:]:
            acc = product_parametrization(acc, nxt)
        ring = acc.param_ring
        coordinates = []
        for k, f in enumerate(factors):
            rename, _ = _canonical_blocks(f, k)
            coordinates.append([phi.embed(ring, rename) for phi in _span_coordinates(f)])
        segre_image = [prod(choice, start=ring.one()) for choice in cartesian(*coordinates)]
        composed = []
        for i in range(m_prime.rows):
            form = ring.zero()
            for c, s in zip(m_prime.row(i), segre_image):
                if not ring.field.is_zero(c):
                    form = form + s.scale(c)
            composed.append(form)
        images = dict(zip(result.ideal.ring.variables, composed))
        vanishes = all(not g.substitute(images, ring) for g in result.ideal.generators)

    product_report = variety_invariants(result.ideal, truncation)
    factor_reports = [variety_invariants(f.implicit_ideal(), truncation) for f in factors]
    hf_equal = all(hf_product_check(factor_reports, product_report, truncation))
    return EquivalenceCertificate(m_rank, completes, nonzero, vanishes, hf_equal)


# Singular locus -----------------------------------------------------------------

def _homogeneous_combinations(jac, gens, count, rng, bound):
    """
    ``count`` random combinations sum_k h_k * grad(g_k), each h_k a random
    form of degree ``top - deg g_k`` so every entry is homogeneous of degree
    ``top - 1``. The rows span a sub-module of the Jacobian row module.
    """
    ring = gens[0].ring
    degrees = [g.total_degree() for g in gens]
    top = max(degrees)
    rows = []
    for _ in range(count):
        weights = [_random_form(rng, ring, top - d, bound) for d in degrees]
        rows.append([
            sum((jac.entry(k, j) * w for k, w in enumerate(weights) if w), ring.zero())
            for j in range(jac.cols)
        ])
    return ExactMatrix.from_polynomial_rows(rows, ring)


def _precheck_smooth(ideal, jac, gens, codim, seed):
    rng = random.Random(seed)
    reduced = _homogeneous_combinations(jac, gens, codim, rng, setting('SAMPLING_RANGE', 100))
    candidate = ideal + [m for m in minors(reduced, codim) if m]
    pairs = min(setting('SINGULAR_PRECHECK_PAIRS', 2000), current_budget().pairs)
    try:
        with budget_limit(pairs=pairs):
            return variety_invariants(candidate, truncation=1).dimension < 0
    except BudgetExceededError:
        logger.info("smoothness precheck gave up after %d pair reductions", pairs)
        return False


def singular_locus(ideal, ambient=None, dimension=None, seed=0, precheck=None):
    """
    Singular locus by the Jacobian criterion: I plus the c x c minors of the
    Jacobian (c the codimension), saturated by the irrelevant ideal.

    When enabled, a cheaper sufficient test runs first: the minors of c
    random combinations of the Jacobian rows generate a sub-ideal of the
    minor ideal, so an empty zero set there already proves smoothness.
    """
    ring = ideal.ring
    ambient = ring.nvars - 1 if ambient is None else ambient
    if ambient != ring.nvars - 1:
        raise AmbientMismatchError(f"ideal of P^{ring.nvars - 1} read in P^{ambient}")
    if dimension is None:
        dimension = variety_invariants(ideal, truncation=1).dimension
    unit = Ideal.unit(ring)
    if dimension < 0:
        return SingularReport(unit, variety_invariants(unit, 1), True, 'empty')
    codim = ambient - dimension
    if codim <= 0:
        return SingularReport(unit, variety_invariants(unit, 1), True, 'ambient')
    gens = list(dict.fromkeys(ideal.generators))
    if codim > len(gens):
        logger.warning("%d generators for codimension %d: every point is singular", len(gens), codim)
        sing = saturate_irrelevant(ideal)
        return SingularReport(sing, variety_invariants(sing), False, 'minors')
    jac = jacobian(gens, ring)

    precheck = setting('SINGULAR_PRECHECK', True) if precheck is None else precheck
    if precheck and codim < len(gens) and _precheck_smooth(ideal, jac, gens, codim, seed):
        logger.info("smoothness certified by random Jacobian combinations")
        return SingularReport(unit, variety_invariants(unit, 1), True, 'precheck')

    sing = ideal + [m for m in dict.fromkeys(minors(jac, codim)) if m]
    sing = saturate_irrelevant(sing)
    report = variety_invariants(sing)
    smooth = sing.is_unit()
    logger.info("singular locus: dim %d, degree %s", report.dimension, report.degree)
    return SingularReport(sing, report, smooth, 'minors')


# Sampling -----------------------------------------------------------------------

def _sampling_range():
    return setting('SAMPLING_RANGE', 100)


def sample_point(variety, seed=0, sampling_range=None):
    """Image of seeded random integer parameters, redrawn while every coordinate is zero."""
    if not variety.is_parametric:
        raise InputError("points are sampled from parametric presentations")
    bound = _sampling_range() if sampling_range is None else sampling_range
    rng = random.Random(seed)
    field = variety.field
    retries = setting('SAMPLING_RETRIES', 100)
    for _ in range(retries + 1):
        values = [rng.randint(-bound, bound) for _ in variety.param_ring.variables]
        coords = [f.evaluate(values) for f in variety.forms]
        if any(not field.is_zero(c) for c in coords):
            return ProjectivePoint(coords, field)
    raise DegeneratePresentationError(f"{variety} produced only zero points in {retries} redraws")


def terracini_secant_dim(segre, seed=0, seeds=None):
    """
    Estimate dim of the secant line variety: the rank of the stacked tangent
    spaces of the affine cone at two random points, minus one; the maximum
    over several seeds.
    """
    seeds = setting('TERRACINI_SEEDS', 5) if seeds is None else seeds
    presentation = segre.presentation
    ring = presentation.param_ring
    jac = jacobian(presentation.forms, ring)
    bound = _sampling_range()
    best = -1
    for k in range(seeds):
        rng = random.Random(f"{seed}:{k}")
        first = jac.evaluate([rng.randint(-bound, bound) for _ in ring.variables])
        second = jac.evaluate([rng.randint(-bound, bound) for _ in ring.variables])
        stacked = ExactMatrix.from_rows(
            [list(first.row(i)) + list(second.row(i)) for i in range(first.rows)], first.field
        )
        best = max(best, rank(stacked) - 1)
    return SecantInfo(best, 'terracini-sample')


def _random_form(rng, ring, degree, bound):
    terms = {m: rng.randint(-bound, bound) for m in _block_monomials(ring.nvars, degree)}
    return ring.from_dict(terms)


def _draw_factor(rng, index, r, d, ambient, field, bound, retries):
    params = block_names(index, r + 1)
    ring = RingContext(params, field)
    forms = []
    for _ in range(ambient + 1):
        form = _random_form(rng, ring, d, bound)
        attempts = 0
        while not form and attempts < retries:
            form = _random_form(rng, ring, d, bound)
            attempts += 1
        forms.append(form)
    return VarietyPresentation.parametric(forms, ring, name=f"X{index + 1}", dimension=r, degree=d)


def genericity_rank(factors):
    """Rank of the coefficient-point matrix and the maximal rank it could have."""
    factors = tuple(factors)
    big_n = prod(comb(f.dimension + f.degree, f.degree) for f in factors) - 1
    maximal = min(factors[0].ambient + 1, big_n + 1)
    try:
        points = coefficient_points(factors)
    except (UndefinedProductError, InputError):
        return 0, maximal
    return projection_center(points).rank, maximal


def sample_generic_instance(signatures, ambient, seed=0, sampling_range=None, retries=None):
    """
    Random parametric factors with signatures (r_i, d_i) in P^ambient, redrawn
    until the coefficient-point matrix has maximal rank or retries run out.
    """
    if ambient < 1:
        raise InputError("ambient dimension must be at least 1")
    signatures = [tuple(s) for s in signatures]
    if not signatures or any(r < 1 or d < 1 for r, d in signatures):
        raise InputError("signatures need r, d >= 1")
    bound = _sampling_range() if sampling_range is None else sampling_range
    retries = setting('GENERIC_RETRIES', 10) if retries is None else retries
    form_retries = setting('SAMPLING_RETRIES', 100)
    rng = random.Random(seed)
    field = QQ
    factors, achieved = (), 0
    for attempt in range(1, retries + 1):
        factors = tuple(
            _draw_factor(rng, k, r, d, ambient, field, bound, form_retries)
            for k, (r, d) in enumerate(signatures)
        )
        if len(factors) < 2:
            return GenericInstance(factors, True, 0, attempt)
        achieved, maximal = genericity_rank(factors)
        if achieved == maximal:
            return GenericInstance(factors, True, achieved, attempt)
        logger.warning("draw %d is not generic (rank %d < %d), redrawing", attempt, achieved, maximal)
    return GenericInstance(factors, False, achieved, retries)
