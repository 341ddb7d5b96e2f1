import logging
from typing import List, Optional

from ..lattice import ZERO, LatticeVector
from ..oracles import ProblemInstance
from ..types import Element
from .config import AlgoConfig
from .level import search_level
from .report import InstanceReport, LedgerEntry, StepRecord


logger = logging.getLogger(__name__)


class ThresholdInstance:

    """
    One single-threshold streaming run. Owns its solution vector, the
    ledger of accepted levels and per step oracle counters. tau is fixed
    for the lifetime of the instance

    **Parameters**

    - **tau** (*float*): acceptance threshold, >= 0
    - **exponent** (*Optional(int)*): grid exponent when spawned by a sieve
    - **spawned_at** (*int*): stream position at creation
    """

    def __init__(self, tau: float, exponent: int = None, spawned_at: int = 0) -> None:
        if tau < 0:
            raise ValueError(f"tau must be nonnegative, got {tau}")
        self._tau = float(tau)
        self.exponent = exponent
        self.spawned_at = spawned_at
        self.x: LatticeVector = ZERO
        # cached g(x), None until the first oracle query
        self.base_value: Optional[float] = None
        self.ledger: List[LedgerEntry] = []
        self.steps: List[StepRecord] = []
        self.calls = 0

    @property
    def tau(self) -> float:
        return self._tau

    def step(self, inst: ProblemInstance, cfg: AlgoConfig, e: Element) -> StepRecord:
        """See `stream_step`"""
        if self.x.total >= inst.k:
            record = StepRecord(element=e, level=0, ceiling=0, calls=0)
        else:
            meter = inst.gain.metered()
            level, ceiling, probe = search_level(
                inst,
                cfg,
                self.x,
                e,
                self._tau,
                base_value=self.base_value,
                oracle=meter
            )
            if probe is not None:
                self.base_value = probe.base_value
            if level >= 1:
                # the search ceiling already enforces the budget
                assert self.x.total + level <= inst.k
                entry = LedgerEntry(
                    element=e,
                    level=level,
                    gain=probe.marginal(level),
                    cost=inst.cost.unit(e) * level,
                    value=probe.value(level)
                )
                self.x = self.x.add_scaled(e, level)
                self.base_value = probe.gain_at(level)
                self.ledger.append(entry)
                logger.debug(
                    "tau %.6g accepted %s at level %i, x(E) = %i",
                    self._tau, e, level, self.x.total
                )
            record = StepRecord(element=e, level=level, ceiling=ceiling, calls=meter.calls)
        self.calls += record.calls
        self.steps.append(record)
        return record

    def current_value(self, inst: ProblemInstance) -> float:
        """g(x), from the cache when available"""
        if self.base_value is None:
            self.base_value = inst.gain.evaluate(self.x)
        return self.base_value

    def report(self, inst: ProblemInstance) -> InstanceReport:
        gain_value = self.current_value(inst)
        cost_value = inst.cost.evaluate(self.x)
        return InstanceReport(
            exponent=self.exponent,
            tau=self._tau,
            spawned_at=self.spawned_at,
            x=self.x,
            total=self.x.total,
            gain_value=gain_value,
            cost_value=cost_value,
            objective=gain_value - cost_value,
            calls=self.calls,
            max_step_calls=max((step.calls for step in self.steps), default=0),
            ledger=list(self.ledger),
            steps=list(self.steps)
        )

    def __repr__(self) -> str:
        return f"ThresholdInstance(tau={self._tau:.6g}, exponent={self.exponent}, x={self.x.to_dict()})"


def stream_step(
    state: ThresholdInstance,
    inst: ProblemInstance,
    cfg: AlgoConfig,
    e: Element
) -> StepRecord:
    """
    Offer the next stream element to one threshold instance. No-op when
    x(E) >= k. Otherwise finds the level with `bs_level` and adds l chi_e
    when l >= 1. Returns the level, search ceiling and oracle calls
    """
    return state.step(inst, cfg, e)
