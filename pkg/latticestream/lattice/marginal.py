from ..types import GainOracleType
from .vector import LatticeVector


def marginal(g: GainOracleType, delta: LatticeVector, base: LatticeVector) -> float:
    """
    f(delta | base) = f(base + delta) - f(base). Costs exactly two oracle
    evaluations; the oracle raises OracleDomainError when base + delta
    leaves its box
    """
    return g.evaluate(base + delta) - g.evaluate(base)
