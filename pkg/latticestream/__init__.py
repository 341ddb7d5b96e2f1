from .exceptions import (
    ConfigError,
    GuaranteeViolation,
    InfeasibleError,
    InstanceTooLargeError,
    LatticeError,
    LatticeStreamException,
    OracleDomainError,
    ProblemError,
    StreamFormatError
)
from .lattice import *
from .oracles import *
from .sieve import *
from .types import LevelSearch, Mode
from .verify import *

__all__ = [
    "AlgoConfig",
    "BudgetAllocation",
    "ConcaveCoverage",
    "ConfigError",
    "ConstraintSpec",
    "ConvexCoverage",
    "CostModel",
    "GainOracle",
    "GroundSet",
    "GuaranteeViolation",
    "InfeasibleError",
    "InstanceTooLargeError",
    "LatticeError",
    "LatticeStreamException",
    "LatticeVector",
    "LevelSearch",
    "Mode",
    "OracleDomainError",
    "OracleSpec",
    "ProblemError",
    "ProblemInstance",
    "SolutionReport",
    "StreamFormatError",
    "TableOracle",
    "ThresholdInstance",
    "brute_force_opt",
    "bs_level",
    "check_dr",
    "check_lattice_submodular",
    "estimate_alpha",
    "run",
    "run_fixed",
    "theorem_ratios",
    "validate_run",
]
