import logging
import math
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from ..exceptions import GuaranteeViolation
from ..guarantees import theorem_bound, theorem_ratios
from ..lattice import LatticeVector
from ..oracles import ProblemInstance
from ..sieve import AlgoConfig, InstanceReport, LedgerEntry, SolutionReport
from ..types import LevelSearch, Mode
from .bruteforce import OptimalSolution


logger = logging.getLogger(__name__)


class GuaranteeReport(BaseModel):

    """
    Outcome of checking one threshold instance against its guarantee

    - **lemma**: *"full"* when x(E) = k, *"partial"* otherwise
    - **mu**, **nu**: x_bar(E) / k and x(E) / k, clamped to [0, 1]; `clamped`
    flags an out of range value
    - **param**: t in submodular mode, alpha in alpha mode
    - **lemma_bound**: right hand side the objective must reach
    - **terms**: the pieces of the bound and of the objective
    - **checks**: every individual inequality and whether it held
    - **ledger**: accepted levels, dumped only when a check fails
    """

    lemma: str
    mode: Mode
    tau: float
    k: int
    total: int
    mu: Optional[float]
    nu: float
    clamped: bool = False
    param: float
    objective: float
    lemma_bound: float
    theorem_ratios: Optional[Tuple[float, float]]
    terms: Dict[str, float]
    checks: Dict[str, bool]
    satisfied: bool
    ledger: Optional[List[LedgerEntry]]


class VerificationReport(BaseModel):

    """
    Every check `validate_run` performs on a finished run

    - **guarantees**: one report per live threshold instance
    - **memory_ok**: peak live instances and stored totals within bounds
    - **queries_ok**: oracle calls per element within the level search bound
    - **optimum_dominates**: g(x*) - c(x*) >= objective of the output
    - **worst_case_bound**: rho_g g(x*) - rho_c c(x*) at mu = 1, nu = 0
    - **realized_bound**: the same at the output's realized mu and nu
    """

    x_star: Optional[LatticeVector]
    opt_value: Optional[float]
    mu: Optional[float]
    nu: Optional[float]
    guarantees: List[GuaranteeReport]
    memory_ok: bool
    queries_ok: bool
    optimum_dominates: Optional[bool]
    worst_case_bound: Optional[float]
    realized_bound: Optional[float]
    violations: List[str]
    satisfied: bool


def check_tolerance(cfg: AlgoConfig, k: int) -> float:
    """Slack for guarantee inequalities, one acceptance tolerance per unit of budget"""
    return cfg.tolerance * (1 + k)

def _ratio(count: int, k: int) -> Tuple[float, bool]:
    value = count / k
    return min(max(value, 0.0), 1.0), not 0.0 <= value <= 1.0

def _ledger_checks(
    run: InstanceReport,
    tau: float,
    scale: float,
    tolerance: float
) -> Dict[str, bool]:
    accepted = sum(entry.gain - scale * entry.cost for entry in run.ledger)
    return {
        "ledger_entries": all(entry.value >= tau - tolerance for entry in run.ledger),
        "ledger_sum": accepted >= tau * run.total - tolerance,
        "ledger_replay": (
            sum(run.accepted_levels) == run.total
            and abs(sum(entry.gain for entry in run.ledger) - run.gain_value) <= tolerance
        ),
    }

def _finish(report: GuaranteeReport, run: InstanceReport) -> GuaranteeReport:
    if not report.satisfied:
        report.ledger = list(run.ledger)
        logger.debug(
            "%s guarantee failed for tau %.6g: %s",
            report.lemma, report.tau, [name for name, ok in report.checks.items() if not ok]
        )
    return report

def validate_lemma_full(
    instance_run: InstanceReport,
    tau: float,
    cfg: AlgoConfig = None,
    k: int = None
) -> GuaranteeReport:
    """
    Guarantee for an instance that spent its whole budget: g(x) - c(x) >= k tau
    and the stronger g(x) - s c(x) >= k tau, plus the per unit ledger
    checks. `k` defaults to the instance's total

    Raises:
        - ValueError: x(E) differs from k
    """
    cfg = cfg or AlgoConfig()
    k = instance_run.total if k is None else k
    if instance_run.total != k:
        raise ValueError(f"Full budget check needs x(E) = k, got {instance_run.total} and {k}")
    tolerance = check_tolerance(cfg, k)
    scale = cfg.scale
    objective = instance_run.gain_value - instance_run.cost_value
    scaled = instance_run.gain_value - scale * instance_run.cost_value
    bound = k * tau
    checks = {
        "objective": objective >= bound - tolerance,
        "scaled_objective": scaled >= bound - tolerance,
        **_ledger_checks(instance_run, tau, scale, tolerance),
    }
    report = GuaranteeReport(
        lemma="full",
        mode=cfg.mode,
        tau=tau,
        k=k,
        total=instance_run.total,
        mu=None,
        nu=1.0 if k else 0.0,
        param=cfg.resolved_t if cfg.mode is Mode.SUBMODULAR else cfg.alpha,
        objective=objective,
        lemma_bound=bound,
        theorem_ratios=None,
        terms={
            "gain": instance_run.gain_value,
            "cost": instance_run.cost_value,
            "scaled_objective": scaled,
        },
        checks=checks,
        satisfied=all(checks.values()),
        ledger=None
    )
    return _finish(report, instance_run)

def validate_lemma_partial(
    instance_run: InstanceReport,
    tau: float,
    opt: OptimalSolution,
    cfg: AlgoConfig = None,
    k: int = None
) -> GuaranteeReport:
    """
    Guarantee for an instance that finished below budget, in terms of the
    realized mu = (x* - x)(E) / k and nu = x(E) / k

    - submodular: g(x) - c(x) >= ((t-1)/t) g(x*) - (t-1) c(x*) + k tau (nu/t - ((t-1)/t) mu)
    - alpha: g(x) - c(x) >= (alpha/(1+alpha)) g(x*) - c(x*) + k tau (nu - mu) / (1+alpha)

    Raises:
        - ValueError: k is not given or x(E) >= k
    """
    cfg = cfg or AlgoConfig()
    if k is None or instance_run.total >= k:
        raise ValueError(f"Partial budget check needs x(E) < k, got {instance_run.total} and {k}")
    tolerance = check_tolerance(cfg, k)
    x_bar = opt.x_star.multiset_diff(instance_run.x)
    mu, mu_clamped = _ratio(x_bar.total, k)
    nu, nu_clamped = _ratio(instance_run.total, k)
    g_star, c_star = opt.gain_value, opt.cost_value

    if cfg.mode is Mode.SUBMODULAR:
        param = t = cfg.resolved_t
        gain_term = (t - 1.0) / t * g_star
        cost_term = (t - 1.0) * c_star
        threshold_term = k * tau * (nu / t - (t - 1.0) / t * mu)
    else:
        param = alpha = cfg.alpha
        gain_term = alpha / (1.0 + alpha) * g_star
        cost_term = c_star
        threshold_term = k * tau * (nu - mu) / (1.0 + alpha)
    bound = gain_term - cost_term + threshold_term
    objective = instance_run.gain_value - instance_run.cost_value
    ratios = theorem_ratios(cfg.mode, param, mu, nu)
    checks = {
        "objective": objective >= bound - tolerance,
        **_ledger_checks(instance_run, tau, cfg.scale, tolerance),
    }
    report = GuaranteeReport(
        lemma="partial",
        mode=cfg.mode,
        tau=tau,
        k=k,
        total=instance_run.total,
        mu=mu,
        nu=nu,
        clamped=mu_clamped or nu_clamped,
        param=param,
        objective=objective,
        lemma_bound=bound,
        theorem_ratios=(ratios.rho_g, ratios.rho_c),
        terms={
            "gain": instance_run.gain_value,
            "cost": instance_run.cost_value,
            "gain_term": gain_term,
            "cost_term": cost_term,
            "threshold_term": threshold_term,
        },
        checks=checks,
        satisfied=all(checks.values()),
        ledger=None
    )
    return _finish(report, instance_run)

def query_bound(ceiling: int, level_search: LevelSearch) -> int:
    """
    Oracle calls one step may make with search ceiling L: 2 ceil(log2(L + 1)) + 4
    for binary search, L + 2 for the linear scan
    """
    if level_search is LevelSearch.BINARY:
        return 2 * math.ceil(math.log2(ceiling + 1)) + 4
    return ceiling + 2

def validate_run(
    report: SolutionReport,
    inst: ProblemInstance,
    cfg: AlgoConfig,
    opt: OptimalSolution = None
) -> VerificationReport:
    """
    Check a finished run. Every live instance gets the full budget check
    when x(E) = k and the partial check otherwise (only with `opt`). Also
    checks the memory bound, the per element query bound and, with `opt`,
    that the optimum dominates the output
    """
    k = inst.k
    tolerance = check_tolerance(cfg, k)
    violations: List[str] = []

    guarantees: List[GuaranteeReport] = []
    for run in report.instances:
        if run.total == k:
            guarantee = validate_lemma_full(run, run.tau, cfg, k)
        elif opt is not None:
            guarantee = validate_lemma_partial(run, run.tau, opt, cfg, k)
        else:
            continue
        guarantees.append(guarantee)
        if not guarantee.satisfied:
            failed = [name for name, ok in guarantee.checks.items() if not ok]
            violations.append(f"{guarantee.lemma} guarantee failed for tau {run.tau:.9g}: {failed}")

    memory_ok = True
    if report.live_bound is not None and report.peak_live > report.live_bound:
        memory_ok = False
        violations.append(f"peak live instances {report.peak_live} exceed {report.live_bound}")
    for run in report.instances:
        if run.total > k:
            memory_ok = False
            violations.append(f"instance tau {run.tau:.9g} stores {run.total} > k = {k}")

    queries_ok = True
    for run in report.instances:
        for step in run.steps:
            limit = query_bound(step.ceiling, cfg.level_search)
            if step.calls > limit:
                queries_ok = False
                violations.append(
                    f"instance tau {run.tau:.9g} made {step.calls} calls on "
                    f"{step.element}, limit {limit}"
                )

    x_star = opt_value = mu = nu = dominates = worst = realized = None
    if opt is not None:
        x_star, opt_value = opt.x_star, opt.value
        dominates = opt.value >= report.objective - tolerance
        if not dominates:
            violations.append(f"output objective {report.objective:.9g} beats optimum {opt.value:.9g}")
        if k > 0:
            mu, _ = _ratio(opt.x_star.multiset_diff(report.x).total, k)
            nu, _ = _ratio(report.x.total, k)
            param = cfg.resolved_t if cfg.mode is Mode.SUBMODULAR else cfg.alpha
            worst = theorem_bound(cfg.mode, param, opt.gain_value, opt.cost_value)
            realized = theorem_bound(cfg.mode, param, opt.gain_value, opt.cost_value, mu, nu)

    return VerificationReport(
        x_star=x_star,
        opt_value=opt_value,
        mu=mu,
        nu=nu,
        guarantees=guarantees,
        memory_ok=memory_ok,
        queries_ok=queries_ok,
        optimum_dominates=dominates,
        worst_case_bound=worst,
        realized_bound=realized,
        violations=violations,
        satisfied=not violations
    )

def raise_for_violation(report: VerificationReport) -> None:
    """
    Raises:
        - GuaranteeViolation: any check in `report` failed
    """
    if not report.satisfied:
        raise GuaranteeViolation(
            f"{len(report.violations)} guarantee violation(s): {report.violations[0]}",
            report=report
        )
