import math
from typing import Dict, Mapping

from ...lattice import LatticeVector
from ...types import Element
from ..base import GainOracle, OracleClass


class BudgetAllocation(GainOracle):

    """
    Budget allocation g(x) = sum_t w_t * (1 - prod_s (1 - p_ts)^x(s)).
    Each unit of budget placed on source s independently activates target
    t with probability p_ts

    **Parameters**

    - **weights** (*Mapping[str, float]*): target weights w_t >= 0
    - **probabilities** (*Mapping[str, Mapping[str, float]]*): target -> source -> p_ts in [0, 1]
    - **box** (*Mapping[str, int]*): declared domain over sources
    - **claim** (*Optional(OracleClass)*): declared class, lattice-submodular by default
    """

    kind = "budget-allocation"
    default_claim = OracleClass.LATTICE_SUBMODULAR

    def __init__(
        self,
        weights: Mapping[str, float],
        probabilities: Mapping[str, Mapping[Element, float]],
        box: Mapping[Element, object],
        claim: OracleClass = None
    ) -> None:
        super().__init__(box, claim)
        missing = [t for t in probabilities if t not in weights]
        if missing:
            raise ValueError(f"Targets {missing} have probabilities but no weight")
        for t, w in weights.items():
            if w < 0:
                raise ValueError(f"Weight for target '{t}' must be nonnegative, got {w}")
        for t, row in probabilities.items():
            for s, p in row.items():
                if not 0.0 <= p <= 1.0:
                    raise ValueError(f"Probability p[{t}][{s}] must be in [0, 1], got {p}")
        self.weights: Dict[str, float] = {t: float(weights[t]) for t in probabilities}
        self.probabilities: Dict[str, Dict[Element, float]] = {
            t: {s: float(p) for s, p in row.items() if p} for t, row in probabilities.items()
        }

    def _value(self, x: LatticeVector) -> float:
        value = 0.0
        for t in sorted(self.probabilities):
            row = self.probabilities[t]
            miss = math.prod((1.0 - p) ** x[s] for s, p in row.items() if x[s])
            value += self.weights[t] * (1.0 - miss)
        return value

    def _spec_fields(self) -> Dict[str, object]:
        return {
            "weights": dict(self.weights),
            "probabilities": {t: dict(row) for t, row in self.probabilities.items()},
        }
