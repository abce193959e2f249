"""
Line-oriented scenario files.

    ambient <n>
    field rational | field prime <p>
    factor <name> param vars <v0 .. vr> degree <d>
    coord <i> = <poly>             (n + 1 lines, one per coordinate)
    factor <name> ideal
    gen = <poly>                   (any number of lines)
    truncate <T>
    seed <u64>
    budget <pairs>

Blank lines and ``#`` comments are ignored. ``ambient`` and ``field`` must
precede the first factor. Polynomials use the strict grammar of
``lib.algebra.poly``; handwritten juxtaposition (``2x_0x_2``) is accepted too.
"""

import logging
import re
from dataclasses import dataclass, replace
from pathlib import Path

from lib.algebra.arith import GF, QQ
from lib.algebra.conf import setting
from lib.algebra.exceptions import InputError, PolynomialSyntaxError, ScenarioError, UnknownVariableError
from lib.algebra.geometry import VarietyPresentation, sample_generic_instance
from lib.algebra.groebner import Ideal
from lib.algebra.poly import RingContext, format_poly, normalize_juxtaposed, parse_poly, projective_ring

from .claims import EXAMPLES
from .serializers import ScenarioOptionsSerializer, first_error

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent / 'data'

MAX_CONIC_SPACE = 2


@dataclass(frozen=True)
class Scenario:
    ambient: int
    field: object
    factors: tuple
    truncation: int
    seed: int = 0
    budget: int = None
    source: str = ''
    name: str = ''

    @property
    def prime(self):
        return self.field.characteristic or None

    def factor(self, name):
        for f in self.factors:
            if f.name == name:
                return f
        raise InputError(f"no factor named '{name}' in {self.name or 'the scenario'}")

    def over_prime(self, p):
        """The same scenario re-read over GF(p)."""
        return parse_scenario(self.source, name=self.name, prime=p)


@dataclass
class _FactorDraft:
    name: str
    kind: str
    line: int
    variables: tuple = ()
    degree: int = None
    coords: dict = None
    gens: list = None


def _parse_poly_text(text, line, ring):
    try:
        return parse_poly(text, ring)
    except (PolynomialSyntaxError, UnknownVariableError):
        pass
    try:
        return parse_poly(normalize_juxtaposed(text, ring.variables), ring)
    except InputError as error:
        raise ScenarioError(str(error), line) from error


def _integer(token, what, line):
    try:
        return int(token)
    except ValueError:
        raise ScenarioError(f"{what} must be an integer, got '{token}'", line) from None


_COORD = re.compile(r'^coord\s+(\d+)\s*=\s*(.+)$')
_GEN = re.compile(r'^gen\s*=\s*(.+)$')


def parse_scenario(text, name='', prime=None):
    """
    Read a scenario. ``prime`` overrides the field line (used to rerun a
    scenario over another prime).
    """
    ambient = None
    field = None
    options = {}
    drafts = []
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        words = line.split()
        keyword = words[0]
        if keyword == 'ambient':
            if ambient is not None or len(words) != 2:
                raise ScenarioError("expected a single 'ambient <n>' line", number)
            ambient = _integer(words[1], 'ambient', number)
            if ambient < 1:
                raise ScenarioError("ambient dimension must be at least 1", number)
        elif keyword == 'field':
            if drafts:
                raise ScenarioError("'field' must precede the factors", number)
            if words[1:] == ['rational']:
                field = QQ
            elif len(words) == 3 and words[1] == 'prime':
                field = GF(_integer(words[2], 'prime', number))
            else:
                raise ScenarioError("expected 'field rational' or 'field prime <p>'", number)
        elif keyword == 'factor':
            if ambient is None:
                raise ScenarioError("'ambient' must precede the factors", number)
            current = _factor_header(words, number)
            if any(d.name == current.name for d in drafts):
                raise ScenarioError(f"duplicate factor name '{current.name}'", number)
            drafts.append(current)
        elif keyword == 'coord':
            match = _COORD.match(line)
            if current is None or current.kind != 'param' or not match:
                raise ScenarioError("'coord <i> = <poly>' outside a param factor", number)
            index = int(match.group(1))
            if index in current.coords:
                raise ScenarioError(f"coordinate {index} given twice", number)
            current.coords[index] = (match.group(2), number)
        elif keyword == 'gen':
            match = _GEN.match(line)
            if current is None or current.kind != 'ideal' or not match:
                raise ScenarioError("'gen = <poly>' outside an ideal factor", number)
            current.gens.append((match.group(1), number))
        elif keyword in ('truncate', 'seed', 'budget'):
            if len(words) != 2:
                raise ScenarioError(f"expected '{keyword} <integer>'", number)
            options[keyword] = _integer(words[1], keyword, number)
        else:
            raise ScenarioError(f"unknown keyword '{keyword}'", number)

    if ambient is None:
        raise ScenarioError("missing 'ambient' line")
    if not drafts:
        raise ScenarioError("no factors")
    serializer = ScenarioOptionsSerializer(data=options)
    if not serializer.is_valid():
        raise ScenarioError(first_error(serializer.errors))
    if prime is not None:
        field = GF(prime)
    field = field or QQ
    factors = tuple(_build_factor(d, ambient, field) for d in drafts)
    return Scenario(
        ambient=ambient,
        field=field,
        factors=factors,
        truncation=options.get('truncate', setting('HILBERT_TRUNCATION', 5)),
        seed=options.get('seed', 0),
        budget=options.get('budget'),
        source=text,
        name=name,
    )


def _factor_header(words, number):
    if len(words) == 3 and words[2] == 'ideal':
        return _FactorDraft(words[1], 'ideal', number, gens=[])
    if len(words) >= 6 and words[2:4] == ['param', 'vars'] and words[-2] == 'degree':
        variables = tuple(v for chunk in words[4:-2] for v in chunk.split(',') if v)
        if not variables:
            raise ScenarioError("a param factor needs parameter variables", number)
        return _FactorDraft(words[1], 'param', number, variables=variables,
                            degree=_integer(words[-1], 'degree', number), coords={})
    raise ScenarioError("expected 'factor <name> param vars <v..> degree <d>' or 'factor <name> ideal'", number)


def _build_factor(draft, ambient, field):
    try:
        if draft.kind == 'ideal':
            ring = projective_ring(ambient, field=field)
            gens = [_parse_poly_text(text, line, ring) for text, line in draft.gens]
            return VarietyPresentation.implicit(Ideal(ring, gens), name=draft.name)
        if sorted(draft.coords) != list(range(ambient + 1)):
            raise ScenarioError(f"factor {draft.name} needs coord lines 0..{ambient}", draft.line)
        ring = RingContext(draft.variables, field)
        forms = [_parse_poly_text(*draft.coords[i], ring) for i in range(ambient + 1)]
        presentation = VarietyPresentation.parametric(forms, ring, name=draft.name)
    except ScenarioError:
        raise
    except InputError as error:
        raise ScenarioError(str(error), draft.line) from error
    nonzero = [f for f in forms if f]
    if nonzero and presentation.multidegree != (draft.degree,):
        raise ScenarioError(
            f"factor {draft.name} declares degree {draft.degree} but its forms have degree "
            f"{presentation.multidegree[0]}", draft.line,
        )
    return presentation


def format_scenario(scenario):
    """Scenario text that reads back to the same scenario."""
    lines = []
    if scenario.name:
        lines.append(f"# {scenario.name}")
    lines.append(f"ambient {scenario.ambient}")
    lines.append("field rational" if scenario.prime is None else f"field prime {scenario.prime}")
    for factor in scenario.factors:
        if factor.is_parametric:
            if len(factor.param_blocks) != 1:
                raise InputError(f"factor {factor.name} has several parameter blocks")
            lines.append(f"factor {factor.name} param vars {' '.join(factor.param_ring.variables)} "
                         f"degree {factor.multidegree[0]}")
            lines.extend(f"coord {i} = {format_poly(f)}" for i, f in enumerate(factor.forms))
        else:
            lines.append(f"factor {factor.name} ideal")
            lines.extend(f"gen = {format_poly(g)}" for g in factor.ideal.generators)
    lines.append(f"truncate {scenario.truncation}")
    lines.append(f"seed {scenario.seed}")
    if scenario.budget is not None:
        lines.append(f"budget {scenario.budget}")
    return '\n'.join(lines) + '\n'


def load_scenario(path, prime=None):
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as error:
        raise InputError(f"cannot read scenario {path}: {error.strerror}") from error
    return parse_scenario(text, name=path.stem, prime=prime)


def scenario_from_instance(instance, ambient, seed=0, truncation=None, name=''):
    """Wrap sampled factors as a scenario (and its text form)."""
    truncation = setting('HILBERT_TRUNCATION', 5) if truncation is None else truncation
    draft = Scenario(ambient, QQ, tuple(instance.factors), truncation, seed, name=name)
    return replace(draft, source=format_scenario(draft))


def conic_times_space(k=1, seed=0):
    """A generic conic and a generic k-space in P^(2k+1)."""
    if not 1 <= k <= MAX_CONIC_SPACE:
        raise InputError(f"k must be between 1 and {MAX_CONIC_SPACE}")
    ambient = 2 * k + 1
    instance = sample_generic_instance([(1, 2), (k, 1)], ambient, seed=seed)
    return scenario_from_instance(instance, ambient, seed=seed, name=f"ex4_4_k{k}")


def builtin_scenario(example_id, k=1, seed=0):
    if example_id not in EXAMPLES:
        raise InputError(f"unknown example '{example_id}' (known: {', '.join(EXAMPLES)})")
    if example_id == '4.4':
        return conic_times_space(k, seed)
    return load_scenario(DATA_DIR / EXAMPLES[example_id]['file'])
