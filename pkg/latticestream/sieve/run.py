import logging
from typing import List, Optional

from ..guarantees import theorem_ratios
from ..lattice import ZERO
from ..oracles import ProblemInstance
from .config import AlgoConfig
from .grid import live_bound
from .instance import ThresholdInstance
from .report import InstanceReport, SolutionReport
from .state import SieveState, sieve_step


logger = logging.getLogger(__name__)


def run(inst: ProblemInstance, cfg: AlgoConfig) -> SolutionReport:
    """
    Single pass over `inst.stream_order` with lazily guessed thresholds.
    Returns the live instance with the largest g(x) - c(x); ties go to
    the smaller tau. An empty stream yields x = 0 with objective 0
    """
    calls_before = inst.gain.calls
    with SieveState(inst, cfg) as state:
        for e in inst.stream_order:
            sieve_step(state, inst, cfg, e)
        live = state.live()
    logger.debug(
        "stream finished: %i elements, %i live instances, m = %.6g",
        state.position, len(live), state.m
    )
    reports = [instance.report(inst) for instance in live]
    return _build_report(
        inst,
        cfg,
        reports,
        calls_before=calls_before,
        singleton_max=state.m,
        elements_seen=state.position,
        spawned=state.spawned,
        dropped=state.dropped,
        peak_live=state.peak_live,
        bound=live_bound(inst.k, cfg)
    )

def run_fixed(inst: ProblemInstance, cfg: AlgoConfig, tau: float) -> SolutionReport:
    """
    One threshold instance with a caller supplied tau over the whole
    stream, no threshold guessing
    """
    calls_before = inst.gain.calls
    instance = ThresholdInstance(tau)
    for e in inst.stream_order:
        instance.step(inst, cfg, e)
    return _build_report(
        inst,
        cfg,
        [instance.report(inst)],
        calls_before=calls_before,
        singleton_max=0.0,
        elements_seen=len(inst.stream_order),
        spawned=1,
        dropped=0,
        peak_live=1,
        bound=None
    )

def _build_report(
    inst: ProblemInstance,
    cfg: AlgoConfig,
    reports: List[InstanceReport],
    *,
    calls_before: int,
    singleton_max: float,
    elements_seen: int,
    spawned: int,
    dropped: int,
    peak_live: int,
    bound: Optional[int]
) -> SolutionReport:
    best: Optional[InstanceReport] = None
    for report in reports:
        if best is None or report.objective > best.objective:
            best = report
    ratios = theorem_ratios(cfg.mode, cfg.mode_param)
    common = dict(
        mode=cfg.mode,
        config=cfg.dict(),
        k=inst.k,
        singleton_max=singleton_max,
        elements_seen=elements_seen,
        spawned=spawned,
        dropped=dropped,
        peak_live=peak_live,
        live_bound=bound,
        total_oracle_calls=inst.gain.calls - calls_before,
        theorem_ratios=(ratios.rho_g, ratios.rho_c),
        instances=reports,
    )
    # an instance whose best is still the empty vector does not beat x = 0
    if best is None or best.objective <= 0.0 and best.x.is_zero:
        return SolutionReport(
            tau=best.tau if best is not None else None,
            exponent=best.exponent if best is not None else None,
            x=ZERO,
            gain_value=0.0,
            cost_value=0.0,
            objective=0.0,
            **common
        )
    return SolutionReport(
        tau=best.tau,
        exponent=best.exponent,
        x=best.x,
        gain_value=best.gain_value,
        cost_value=best.cost_value,
        objective=best.objective,
        **common
    )
