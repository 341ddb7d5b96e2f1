import math
from typing import NamedTuple, Optional, Union

from .types import Mode
from .util import TOLERANCE


# t at the worst case mu = 1, nu = 0: (3 + sqrt(5)) / 2
AUTO_T = (3.0 + math.sqrt(5.0)) / 2.0

WORST_MU = 1.0
WORST_NU = 0.0


class TheoremRatios(NamedTuple):
    """Bicriteria pair: output >= rho_g * g(x*) - rho_c * c(x*)"""
    rho_g: float
    rho_c: float
    t1: Optional[float] = None


def delta(mu: float, nu: float) -> float:
    """mu^2 + 4 - 4 nu"""
    return mu * mu + 4.0 - 4.0 * nu

def root_t(mu: float, nu: float) -> float:
    """
    t1 = (2 + mu + sqrt(delta)) / 2, the root of rho_c(t) = 1. Satisfies
    t1 >= 1 + mu with equality only at nu = 1
    """
    return (2.0 + mu + math.sqrt(delta(mu, nu))) / 2.0

def check_unit_interval(name: str, value: float) -> float:
    """
    Raises:
        - ValueError: value outside [0, 1]
    """
    if not -TOLERANCE <= value <= 1.0 + TOLERANCE:
        raise ValueError(f"{name} must be in [0, 1], got {value}")
    return min(max(value, 0.0), 1.0)

def theorem_ratios(
    mode: Union[Mode, str],
    param: Union[float, str, None],
    mu: float = WORST_MU,
    nu: float = WORST_NU
) -> TheoremRatios:
    """
    Coefficient pair of the bicriteria guarantee

    - submodular: ((t-1) / (t + mu(t-1) - nu), t (t-1) / (t + mu(t-1) - nu)).
    `param` is t, or "auto"/None to use t1(mu, nu)
    - alpha: (alpha / (1 + alpha + mu - nu), (1 + alpha) / (1 + alpha + mu - nu)).
    `param` is alpha

    Raises:
        - ValueError: mu or nu outside [0, 1], t < 1, alpha outside (0, 1]
    """
    mode = Mode(mode)
    mu = check_unit_interval("mu", mu)
    nu = check_unit_interval("nu", nu)
    if mode is Mode.SUBMODULAR:
        t1 = None
        if param is None or param == "auto":
            t = t1 = root_t(mu, nu)
            if t1 < 1.0 + mu - TOLERANCE:
                raise ArithmeticError(f"t1 = {t1} fell below 1 + mu = {1.0 + mu}")
        else:
            t = float(param)
            if t < 1.0:
                raise ValueError(f"t must be >= 1, got {t}")
        denominator = t + mu * (t - 1.0) - nu
        # only t = 1 and nu = 1 reach zero, where the numerator vanishes too.
        # Along the root rho_c stays 1, so its limit is (1 / t1, 1)
        if denominator <= 0.0:
            if t1 is not None:
                return TheoremRatios(1.0 / t1, 1.0, t1)
            return TheoremRatios(0.0, 0.0, t1)
        rho_g = (t - 1.0) / denominator
        return TheoremRatios(rho_g, rho_g * t, t1)
    alpha = float(param)
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    denominator = 1.0 + alpha + mu - nu
    return TheoremRatios(alpha / denominator, (1.0 + alpha) / denominator)

def theorem_bound(
    mode: Union[Mode, str],
    param: Union[float, str, None],
    g_star: float,
    c_star: float,
    mu: float = WORST_MU,
    nu: float = WORST_NU
) -> float:
    """rho_g * g(x*) - rho_c * c(x*)"""
    ratios = theorem_ratios(mode, param, mu, nu)
    return ratios.rho_g * g_star - ratios.rho_c * c_star
