import math
from typing import List, Optional, Tuple

from ..types import Mode
from .config import AlgoConfig


Window = Tuple[float, float]

# relative slack when testing whether a power of 1 + epsilon sits on a window edge
EDGE_SLACK = 1e-12


def grid_window(m: float, k: int, cfg: AlgoConfig) -> Optional[Window]:
    """
    Admissible thresholds for the running singleton maximum m: the
    optimum lies in [m, k m] (submodular) or [m, k m / alpha] (alpha
    mode) and the target threshold is the optimum divided by k, giving
    [m / k, m] and [m / k, m / alpha]. Returns None, the empty window,
    when m <= 0 or k <= 0
    """
    if m <= cfg.tolerance or k <= 0:
        return None
    hi = m if cfg.mode is Mode.SUBMODULAR else m / cfg.alpha
    return m / k, hi

def grid_exponents(window: Optional[Window], ratio: float) -> List[int]:
    """Integers j with ratio^j inside the closed window, ascending"""
    if window is None:
        return []
    lo, hi = window
    log_ratio = math.log(ratio)
    j_lo = math.floor(math.log(lo) / log_ratio) - 1
    j_hi = math.ceil(math.log(hi) / log_ratio) + 1
    return [
        j for j in range(j_lo, j_hi + 1)
        if lo * (1.0 - EDGE_SLACK) <= ratio ** j <= hi * (1.0 + EDGE_SLACK)
    ]

def grid_taus(window: Optional[Window], ratio: float) -> List[float]:
    return [ratio ** j for j in grid_exponents(window, ratio)]

def live_bound(k: int, cfg: AlgoConfig) -> int:
    """
    Most threshold instances alive at once: ceil(log_{1+eps} k) + 2, or
    ceil(log_{1+eps}(k / alpha)) + 2 in alpha mode
    """
    if k <= 0:
        return 0
    span = k if cfg.mode is Mode.SUBMODULAR else k / cfg.alpha
    return math.ceil(math.log(span) / math.log(cfg.ratio) - EDGE_SLACK) + 2
