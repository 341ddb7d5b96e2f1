import logging
from typing import Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, validator

from ..oracles import GeneratorConfig, generate
from ..sieve import AlgoConfig, run
from ..types import LevelSearch, Mode
from ..util import dump_canonical
from .bounds import validate_run
from .bruteforce import brute_force_opt
from .properties import estimate_alpha


logger = logging.getLogger(__name__)


class SuiteConfig(BaseModel):

    """
    Seeded acceptance corpus. Each case draws n in [1, n], k in [1, k] and
    a generator seed from `numpy.random.default_rng(seed)`, so the corpus
    is fixed by `seed` and `count`

    In alpha mode every case runs with alpha set to `estimate_alpha` of
    its oracle on the instance box
    """

    family: str = "coverage"
    count: int = 200
    n: int = 5
    b_max: int = 3
    k: int = 6
    seed: int = 0
    cost_max: float = 0.5
    mode: Mode = Mode.SUBMODULAR
    t: Union[float, str] = "auto"
    epsilon: float = 0.05
    level_search: Optional[LevelSearch] = None
    workers: int = 1

    class Config:
        allow_mutation = False

    @validator("count")
    def validate_count(cls, count: int) -> int:
        if count < 0:
            raise ValueError(f"count must be >= 0, got {count}")
        return count


class SuiteCase(BaseModel):
    """One corpus instance: run, optimum, bounds and violations"""
    index: int
    seed: int
    n: int
    k: int
    alpha: Optional[float]
    objective: float
    opt_value: float
    worst_case_bound: Optional[float]
    realized_bound: Optional[float]
    live_instances: int
    peak_live: int
    live_bound: Optional[int]
    oracle_calls: int
    violations: List[str]
    satisfied: bool


class SuiteReport(BaseModel):

    """
    Corpus results. `audit` summarizes objective minus the worst case
    bound rho_g g(x*) - rho_c c(x*) over all cases; it is observational
    and never fails the suite
    """

    config: SuiteConfig
    cases: List[SuiteCase]
    skipped: List[int]
    violation_count: int
    audit: Dict[str, Optional[float]]
    satisfied: bool

    def canonical(self) -> bytes:
        return dump_canonical(self)


def _audit(cases: List[SuiteCase]) -> Dict[str, Optional[float]]:
    gaps = np.array(
        [case.objective - case.worst_case_bound for case in cases if case.worst_case_bound is not None],
        dtype=float
    )
    optima = np.array([case.opt_value for case in cases], dtype=float)
    achieved = np.array([case.objective for case in cases], dtype=float)
    positive = optima > 0
    if not gaps.size:
        return {"cases": float(len(cases)), "min_gap": None, "mean_gap": None,
                "q05_gap": None, "median_gap": None, "meets_bound": None, "mean_ratio": None}
    return {
        "cases": float(len(cases)),
        "min_gap": float(gaps.min()),
        "mean_gap": float(gaps.mean()),
        "q05_gap": float(np.quantile(gaps, 0.05)),
        "median_gap": float(np.median(gaps)),
        "meets_bound": float(np.mean(gaps >= 0)),
        "mean_ratio": float(np.mean(achieved[positive] / optima[positive])) if positive.any() else None,
    }

def run_suite(config: SuiteConfig) -> SuiteReport:
    """
    Generate, solve, brute force and validate every corpus instance.
    The suite is satisfied when no case reports a violation
    """
    rng = np.random.default_rng(config.seed)
    cases: List[SuiteCase] = []
    skipped: List[int] = []
    for index in range(config.count):
        n = int(rng.integers(1, config.n + 1))
        k = int(rng.integers(1, config.k + 1))
        seed = int(rng.integers(2 ** 31))
        inst = generate(GeneratorConfig(
            family=config.family,
            n=n,
            b_max=config.b_max,
            k=k,
            seed=seed,
            cost_max=config.cost_max
        ))
        alpha = None
        if config.mode is Mode.ALPHA:
            alpha = estimate_alpha(inst.gain, inst.constraint)
            if alpha <= 0.0:
                logger.warning("case %i has alpha = 0, skipped", index)
                skipped.append(index)
                continue
        cfg = AlgoConfig(
            mode=config.mode,
            t=config.t,
            alpha=alpha if alpha is not None else 1.0,
            epsilon=config.epsilon,
            level_search=config.level_search,
            workers=config.workers
        )
        calls_before = inst.gain.calls
        report = run(inst, cfg)
        opt = brute_force_opt(inst)
        verification = validate_run(report, inst, cfg, opt)
        if not verification.satisfied:
            logger.warning("case %i (seed %i) failed: %s", index, seed, verification.violations)
        cases.append(SuiteCase(
            index=index,
            seed=seed,
            n=n,
            k=k,
            alpha=alpha,
            objective=report.objective,
            opt_value=opt.value,
            worst_case_bound=verification.worst_case_bound,
            realized_bound=verification.realized_bound,
            live_instances=len(report.instances),
            peak_live=report.peak_live,
            live_bound=report.live_bound,
            oracle_calls=inst.gain.calls - calls_before,
            violations=verification.violations,
            satisfied=verification.satisfied
        ))
    violation_count = sum(len(case.violations) for case in cases)
    logger.info("suite finished: %i cases, %i violations", len(cases), violation_count)
    return SuiteReport(
        config=config,
        cases=cases,
        skipped=skipped,
        violation_count=violation_count,
        audit=_audit(cases),
        satisfied=violation_count == 0
    )
