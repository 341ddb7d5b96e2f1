from .config import AlgoConfig
from .grid import grid_exponents, grid_taus, grid_window, live_bound
from .instance import ThresholdInstance, stream_step
from .level import LevelProbe, acceptance_value, bs_level, search_level
from .report import InstanceReport, LedgerEntry, SolutionReport, StepRecord
from .run import run, run_fixed
from .state import SieveState, sieve_step

__all__ = [
    "AlgoConfig",
    "InstanceReport",
    "LedgerEntry",
    "LevelProbe",
    "SieveState",
    "SolutionReport",
    "StepRecord",
    "ThresholdInstance",
    "acceptance_value",
    "bs_level",
    "grid_exponents",
    "grid_taus",
    "grid_window",
    "live_bound",
    "run",
    "run_fixed",
    "search_level",
    "sieve_step",
    "stream_step",
]
