from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel

from ..lattice import LatticeVector
from ..types import Element, Mode
from ..util import dump_canonical


class LedgerEntry(BaseModel):
    """One accepted (element, level) with the values that cleared tau"""
    element: Element
    level: int
    gain: float
    cost: float
    value: float


class StepRecord(BaseModel):
    """Outcome of one stream step on one threshold instance"""
    element: Element
    level: int
    ceiling: int
    calls: int


class InstanceReport(BaseModel):

    """
    Final state and counters of one threshold instance

    - **exponent**: grid exponent j with tau = (1 + epsilon)^j, None for a fixed tau run
    - **spawned_at**: stream position of the element that created the instance
    - **ledger**: accepted levels in arrival order
    - **steps**: per element level, search ceiling and oracle calls
    """

    exponent: Optional[int]
    tau: float
    spawned_at: int
    x: LatticeVector
    total: int
    gain_value: float
    cost_value: float
    objective: float
    calls: int
    max_step_calls: int
    ledger: List[LedgerEntry]
    steps: List[StepRecord]

    @property
    def accepted_levels(self) -> List[int]:
        return [entry.level for entry in self.ledger]


class SolutionReport(BaseModel):

    """
    Result of a streaming run. `mu` and `nu` stay None until an optimum
    is known; verify-lab fills them in

    **Usage**

    ```python
    report = run(inst, AlgoConfig(epsilon=0.1))
    report.x, report.objective, report.theorem_ratios
    ```
    """

    mode: Mode
    config: Dict[str, Any]
    k: int
    tau: Optional[float]
    exponent: Optional[int]
    x: LatticeVector
    gain_value: float
    cost_value: float
    objective: float
    singleton_max: float
    elements_seen: int
    spawned: int
    dropped: int
    peak_live: int
    live_bound: Optional[int]
    total_oracle_calls: int
    theorem_ratios: Tuple[float, float]
    mu: Optional[float] = None
    nu: Optional[float] = None
    instances: List[InstanceReport]

    def best_instance(self) -> Optional[InstanceReport]:
        for instance in self.instances:
            if instance.exponent == self.exponent and instance.tau == self.tau:
                return instance
        return None

    def canonical(self) -> bytes:
        """Canonical JSON bytes, identical across reruns"""
        return dump_canonical(self)
