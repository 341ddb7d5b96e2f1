import logging
from concurrent.futures import ThreadPoolExecutor
from types import TracebackType
from typing import Dict, List, Optional, Set, Type

from ..lattice import LatticeVector
from ..oracles import ProblemInstance
from ..types import Element
from .config import AlgoConfig
from .grid import EDGE_SLACK, Window, grid_exponents, grid_window
from .instance import ThresholdInstance


logger = logging.getLogger(__name__)


class SieveState:

    """
    One-pass threshold guessing. Tracks the running maximum net singleton
    value m, lazily spawns a threshold instance for every power of
    1 + epsilon entering the admissible window and drops instances once
    the window moves past them

    **Usage**

    ```python
    with SieveState(inst, cfg) as state:
        for e in inst.stream_order:
            sieve_step(state, inst, cfg, e)
        best = max(state.live(), key=...)
    ```

    **Parameters**

    - **inst** (*ProblemInstance*): problem being solved
    - **cfg** (*AlgoConfig*): grid ratio, mode and worker count
    """

    def __init__(self, inst: ProblemInstance, cfg: AlgoConfig) -> None:
        self.inst = inst
        self.cfg = cfg
        self.m = 0.0
        self.window: Optional[Window] = None
        self.instances: Dict[int, ThresholdInstance] = {}
        self.position = 0
        self.peak_live = 0
        self.spawned = 0
        self.dropped = 0
        self.singleton_calls = 0
        self._seen_exponents: Set[int] = set()
        self._executor: Optional[ThreadPoolExecutor] = None
        if cfg.workers > 1:
            self._executor = ThreadPoolExecutor(max_workers=cfg.workers)

    def live(self) -> List[ThresholdInstance]:
        """Live instances in ascending tau order"""
        return [self.instances[j] for j in sorted(self.instances)]

    def observe(self, e: Element) -> None:
        """Fold the net singleton value of e into m"""
        if self.inst.constraint.cap(e) < 1:
            return
        meter = self.inst.gain.metered()
        value = meter.evaluate(LatticeVector.unit(e)) - self.cfg.scale * self.inst.cost.unit(e)
        self.singleton_calls += meter.calls
        if value > self.m:
            logger.debug("singleton maximum raised from %.6g to %.6g by %s", self.m, value, e)
            self.m = value

    def refresh_grid(self) -> None:
        """Spawn instances entering the window, drop those left behind"""
        window = grid_window(self.m, self.inst.k, self.cfg)
        if window is None:
            return
        self.window = window
        ratio = self.cfg.ratio
        for j in grid_exponents(window, ratio):
            if j in self._seen_exponents:
                continue
            self._seen_exponents.add(j)
            self.instances[j] = ThresholdInstance(ratio ** j, exponent=j, spawned_at=self.position)
            self.spawned += 1
            logger.debug("spawned threshold instance j=%i tau=%.6g", j, ratio ** j)
        floor = window[0] / ratio * (1.0 - EDGE_SLACK)
        for j in [j for j, instance in self.instances.items() if instance.tau < floor]:
            del self.instances[j]
            self.dropped += 1
            logger.debug("dropped threshold instance j=%i, window now [%.6g, %.6g]", j, *window)
        self.peak_live = max(self.peak_live, len(self.instances))

    def advance(self, e: Element) -> None:
        """Offer e to every live instance. Instances own their state so they may run in parallel"""
        live = self.live()
        if self._executor is not None and len(live) > 1:
            futures = [
                self._executor.submit(instance.step, self.inst, self.cfg, e)
                for instance in live
            ]
            for future in futures:
                future.result()
        else:
            for instance in live:
                instance.step(self.inst, self.cfg, e)

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def __enter__(self) -> "SieveState":
        return self

    def __exit__(
        self,
        exc_type: Type[BaseException] = None,
        exc_value: BaseException = None,
        traceback: TracebackType = None,
    ) -> None:
        self.close()


def sieve_step(state: SieveState, inst: ProblemInstance, cfg: AlgoConfig, e: Element) -> None:
    """
    Process the next stream element: (1) update m with
    [g(chi_e) - s c(chi_e)]+, (2) spawn instances for grid exponents
    entering the window, (3) drop instances with tau below lo / (1 + eps),
    (4) run `stream_step` on every live instance
    """
    state.observe(e)
    state.refresh_grid()
    state.advance(e)
    state.position += 1
