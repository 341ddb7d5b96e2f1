from .base import GainOracle, OracleClass, OracleMeter
from .cost import CostModel
from .families import BudgetAllocation, ConcaveCoverage, ConvexCoverage, TableOracle
from .generate import GENERATORS, GeneratorConfig, adversarial_table, generate
from .models import OracleSpec, ProblemInstance, eval_cost, eval_gain, objective

__all__ = [
    "BudgetAllocation",
    "ConcaveCoverage",
    "ConvexCoverage",
    "CostModel",
    "GENERATORS",
    "GainOracle",
    "GeneratorConfig",
    "OracleClass",
    "OracleMeter",
    "OracleSpec",
    "ProblemInstance",
    "TableOracle",
    "adversarial_table",
    "eval_cost",
    "eval_gain",
    "generate",
    "objective",
]
