"""
Seeded suites of generic instances run through the comparison harness.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from itertools import product as cartesian

import django
from tqdm import tqdm

from lib.algebra.conf import setting
from lib.algebra.exceptions import AlgebraError, BudgetExceededError, InputError
from lib.algebra.geometry import sample_generic_instance
from lib.algebra.predictor import ambient_threshold

from .harness import compare_scenario
from .scenarios import scenario_from_instance
from .serializers import SuiteConfigSerializer, first_error

logger = logging.getLogger(__name__)

PASSED = 'passed'
FAILED = 'failed'
ERROR = 'error'
NOT_GENERIC = 'not-generic'


@dataclass(frozen=True)
class SuiteConfig:
    """Every combination of one signature list, one ambient dimension and one seed."""

    signatures: tuple
    ambients: tuple
    seeds: tuple
    truncation: int = None

    def tasks(self):
        runs = cartesian(self.signatures, self.ambients, self.seeds)
        return [(i, sigs, n, seed, self.truncation) for i, (sigs, n, seed) in enumerate(runs)]


@dataclass(frozen=True)
class SuiteInstance:
    index: int
    signatures: tuple
    ambient: int
    seed: int
    status: str
    mismatches: tuple = ()
    note: str = ''
    report: object = None


@dataclass
class SuiteReport:
    instances: list = dataclass_field(default_factory=list)

    def _count(self, status):
        return sum(1 for i in self.instances if i.status == status)

    @property
    def passed(self):
        return self._count(PASSED)

    @property
    def failed(self):
        return self._count(FAILED)

    @property
    def errors(self):
        return self._count(ERROR)

    @property
    def not_generic(self):
        return self._count(NOT_GENERIC)

    @property
    def exit_code(self):
        return 1 if self.failed else 0


# Desk-scale presets: line/conic products at n = N, and the (2,1,1,s) window
# rows of the singular-window table.
PRESETS = {
    'large': SuiteConfig(
        signatures=(((1, 1), (1, 1)), ((1, 1), (1, 2)), ((1, 1), (1, 1), (1, 1)), ((1, 2), (1, 2))),
        ambients=(),
        seeds=(0, 1, 2),
    ),
    'small': SuiteConfig(
        signatures=(((1, 2), (1, 1)), ((1, 1), (1, 2))),
        ambients=(3, 4),
        seeds=(0, 1, 2),
    ),
    'smooth': SuiteConfig(
        signatures=(((2, 2), (1, 1)),),
        ambients=(8,),
        seeds=(0,),
    ),
}


def validate_config(signatures, ambients, seeds):
    """Desk-scale bounds from the settings, via the DRF serializer."""
    data = {
        'signatures': [{'r': r, 'd': d} for r, d in signatures],
        'ambients': list(ambients),
        'seeds': list(seeds),
    }
    serializer = SuiteConfigSerializer(
        data=data,
        max_sum_r=setting('SUITE_MAX_SUM_R', 4),
        max_degree=setting('SUITE_MAX_DEGREE', 3),
        max_ambient=setting('SUITE_MAX_AMBIENT', 12),
    )
    if not serializer.is_valid():
        raise InputError(first_error(serializer.errors))


def expand_preset(name):
    if name not in PRESETS:
        raise InputError(f"unknown suite preset '{name}' (known: {', '.join(PRESETS)})")
    config = PRESETS[name]
    if config.ambients:
        return [config]
    return [SuiteConfig((sigs,), (ambient_threshold(sigs),), config.seeds, config.truncation)
            for sigs in config.signatures]


def run_instance(task):
    """One suite instance: sample, certify, compare. Never raises for algebra errors."""
    index, signatures, ambient, seed, truncation = task
    try:
        instance = sample_generic_instance(signatures, ambient, seed=seed)
        if not instance.certified:
            return SuiteInstance(index, signatures, ambient, seed, NOT_GENERIC,
                                 note=f"rank {instance.rank} after {instance.attempts} draws")
        scenario = scenario_from_instance(instance, ambient, seed=seed, truncation=truncation,
                                          name=f"suite-{index}")
        report = compare_scenario(scenario)
    except BudgetExceededError as error:
        logger.error("instance %d exceeded the Gröbner budget: %s", index, error)
        return SuiteInstance(index, signatures, ambient, seed, ERROR, note=f"budget: {error}")
    except AlgebraError as error:
        logger.error("instance %d failed: %s", index, error)
        return SuiteInstance(index, signatures, ambient, seed, ERROR, note=str(error))
    if report.certificates.genericity == 'failed':
        return SuiteInstance(index, signatures, ambient, seed, NOT_GENERIC,
                             note="genericity certificate failed", report=report)
    mismatches = tuple(v.claim for v in report.mismatches)
    status = FAILED if mismatches else PASSED
    return SuiteInstance(index, signatures, ambient, seed, status, mismatches, report=report)


def _init_worker():
    django.setup()


def _run_detached(task):
    """run_instance without the full report, for transfer between processes."""
    instance = run_instance(task)
    return SuiteInstance(instance.index, instance.signatures, instance.ambient, instance.seed,
                         instance.status, instance.mismatches, instance.note)


def suite_generic(configs, workers=None, progress=False):
    """
    Run every task of the given configurations; results are merged in task
    order whatever the number of worker processes.
    """
    if isinstance(configs, SuiteConfig):
        configs = [configs]
    tasks = []
    for config in configs:
        for sigs in config.signatures:
            validate_config(sigs, config.ambients, config.seeds)
        tasks.extend(config.tasks())
    tasks = [(i,) + task[1:] for i, task in enumerate(tasks)]
    workers = setting('SUITE_WORKERS', 1) if workers is None else workers
    logger.info("suite of %d instances on %d worker(s)", len(tasks), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker) as pool:
            results = pool.map(_run_detached, tasks)
            results = list(tqdm(results, total=len(tasks), disable=not progress, desc='suite'))
    else:
        results = [run_instance(t) for t in tqdm(tasks, disable=not progress, desc='suite')]
    report = SuiteReport(sorted(results, key=lambda i: i.index))
    logger.info("suite: %d passed, %d failed, %d errors, %d not generic",
                report.passed, report.failed, report.errors, report.not_generic)
    return report
