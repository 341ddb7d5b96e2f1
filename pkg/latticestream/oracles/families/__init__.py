from .budget import BudgetAllocation
from .coverage import CONCAVE_PHI, CONVEX_PHI, ConcaveCoverage, ConvexCoverage
from .table import TableOracle

__all__ = [
    "BudgetAllocation",
    "CONCAVE_PHI",
    "CONVEX_PHI",
    "ConcaveCoverage",
    "ConvexCoverage",
    "TableOracle",
]
