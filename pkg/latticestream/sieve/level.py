import logging
from typing import Dict, Optional, Tuple

from ..lattice import LatticeVector
from ..oracles import ProblemInstance
from ..types import Element, GainOracleType, LevelSearch
from .config import AlgoConfig


logger = logging.getLogger(__name__)


class LevelProbe:

    """
    Evaluates the per-unit acceptance value of adding l copies of one
    element to a fixed base vector, caching g(x + l chi_e) so each level
    costs at most one oracle call

    **Parameters**

    - **inst** (*ProblemInstance*): problem being solved
    - **cfg** (*AlgoConfig*): supplies the cost scale s
    - **x** (*LatticeVector*): base vector
    - **e** (*str*): arriving element
    - **oracle** (*Optional*): oracle to query, usually a meter over `inst.gain`
    - **base_value** (*Optional(float)*): cached g(x); evaluated when absent
    """

    def __init__(
        self,
        inst: ProblemInstance,
        cfg: AlgoConfig,
        x: LatticeVector,
        e: Element,
        oracle: GainOracleType = None,
        base_value: float = None
    ) -> None:
        self.x = x
        self.e = e
        self.scale = cfg.scale
        self.unit_cost = inst.cost.unit(e)
        self._oracle = oracle if oracle is not None else inst.gain
        self.base_value = base_value if base_value is not None else self._oracle.evaluate(x)
        self._gains: Dict[int, float] = {}

    def gain_at(self, l: int) -> float:
        """g(x + l chi_e)"""
        if l == 0:
            return self.base_value
        value = self._gains.get(l)
        if value is None:
            value = self._oracle.evaluate(self.x.add_scaled(self.e, l))
            self._gains[l] = value
        return value

    def marginal(self, l: int) -> float:
        """g(l chi_e | x)"""
        return self.gain_at(l) - self.base_value

    def value(self, l: int) -> float:
        """[g(l chi_e | x) - s c(l chi_e)] / l"""
        if l < 1:
            raise ValueError(f"Level must be >= 1, got {l}")
        return (self.marginal(l) - self.scale * self.unit_cost * l) / l


def acceptance_value(
    inst: ProblemInstance,
    cfg: AlgoConfig,
    x: LatticeVector,
    e: Element,
    l: int,
    *,
    base_value: float = None,
    oracle: GainOracleType = None
) -> float:
    """
    Per-unit acceptance value [g(l chi_e | x) - s c(l chi_e)] / l with
    s = t in submodular mode and s = 1 + alpha in alpha mode

    Raises:
        - ValueError: l < 1
        - OracleDomainError: x + l chi_e is outside the oracle box
    """
    probe = LevelProbe(inst, cfg, x, e, oracle=oracle, base_value=base_value)
    return probe.value(l)

def search_level(
    inst: ProblemInstance,
    cfg: AlgoConfig,
    x: LatticeVector,
    e: Element,
    tau: float,
    *,
    base_value: float = None,
    oracle: GainOracleType = None
) -> Tuple[int, int, Optional[LevelProbe]]:
    """
    Level search returning (level, ceiling, probe). The probe is None when
    the ceiling is 0 and no oracle call was made
    """
    ceiling = inst.constraint.headroom(x, e)
    if ceiling <= 0:
        return 0, ceiling, None
    probe = LevelProbe(inst, cfg, x, e, oracle=oracle, base_value=base_value)
    threshold = tau - cfg.tolerance

    def passes(l: int) -> bool:
        return probe.value(l) >= threshold

    if not passes(1):
        return 0, ceiling, probe
    if ceiling == 1 or passes(ceiling):
        return ceiling, ceiling, probe
    if cfg.level_search is LevelSearch.BINARY:
        # invariant: low passes, high fails
        low, high = 1, ceiling
        while high - low > 1:
            mid = (low + high) // 2
            if passes(mid):
                low = mid
            else:
                high = mid
        return low, ceiling, probe
    for l in range(ceiling - 1, 1, -1):
        if passes(l):
            return l, ceiling, probe
    return 1, ceiling, probe

def bs_level(
    inst: ProblemInstance,
    cfg: AlgoConfig,
    x: LatticeVector,
    e: Element,
    tau: float,
    *,
    base_value: float = None,
    oracle: GainOracleType = None
) -> int:
    """
    Largest level l in [0, L], L = min{b(e) - x(e), k - x(E)}, whose
    per-unit acceptance value clears tau. Returns 0 when L = 0 or level 1
    fails, L when level L passes. Otherwise binary search (sound for
    DR-submodular g) or descending linear scan per `cfg.level_search`

    Postcondition: acceptance_value(l) >= tau and either l = L or
    acceptance_value(l + 1) < tau
    """
    level, _, _ = search_level(
        inst, cfg, x, e, tau, base_value=base_value, oracle=oracle
    )
    return level
