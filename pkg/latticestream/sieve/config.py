import math
from typing import Dict, Optional, Union

from pydantic import BaseModel, root_validator, validator

from ..guarantees import AUTO_T
from ..types import LevelSearch, Mode
from ..util import TOLERANCE


class AlgoConfig(BaseModel):

    """
    Configuration for the streaming algorithms

    **Parameters**

    - **mode** (*Mode*): *"submodular"* (acceptance scale t) or *"alpha"*
    (acceptance scale 1 + alpha)
    - **t** (*float | "auto"*): submodular mode scale, t >= 1. *"auto"*
    resolves to (3 + sqrt(5)) / 2
    - **alpha** (*float*): alpha mode weak submodularity ratio in (0, 1]
    - **epsilon** (*float*): threshold grid ratio 1 + epsilon, epsilon in (0, 1)
    - **level_search** (*Optional(LevelSearch)*): *"binary"* or *"linear"*.
    Defaults to binary in submodular mode and linear in alpha mode
    - **workers** (*int*): threads used to advance threshold instances on
    one element; 1 runs sequentially
    - **tolerance** (*float*): absolute tolerance for value comparisons
    """

    mode: Mode = Mode.SUBMODULAR
    t: Union[float, str] = "auto"
    alpha: float = 1.0
    epsilon: float = 0.1
    level_search: Optional[LevelSearch] = None
    workers: int = 1
    tolerance: float = TOLERANCE

    class Config:
        allow_mutation = False

    @validator("t", pre=True)
    def validate_t(cls, t: Union[float, str]) -> Union[float, str]:
        """t is "auto" or a real >= 1"""
        if isinstance(t, str):
            if t.strip().lower() == "auto":
                return "auto"
            try:
                t = float(t)
            except ValueError:
                raise ValueError(f"t must be 'auto' or a real >= 1, got '{t}'")
        if not math.isfinite(t) or t < 1.0:
            raise ValueError(f"t must be >= 1, got {t}")
        return float(t)

    @validator("alpha")
    def validate_alpha(cls, alpha: float) -> float:
        if not 0.0 < alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {alpha}")
        return alpha

    @validator("epsilon")
    def validate_epsilon(cls, epsilon: float) -> float:
        if not 0.0 < epsilon < 1.0:
            raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
        return epsilon

    @validator("workers")
    def validate_workers(cls, workers: int) -> int:
        if workers < 1:
            raise ValueError("workers cannot be less than 1")
        return workers

    @validator("tolerance")
    def validate_tolerance(cls, tolerance: float) -> float:
        if not 0.0 <= tolerance < 1e-3:
            raise ValueError(f"tolerance must be in [0, 1e-3), got {tolerance}")
        return tolerance

    @root_validator(skip_on_failure=True)
    def default_level_search(cls, values: Dict[str, object]) -> Dict[str, object]:
        """Binary search is only sound for DR-submodular g, alpha mode scans"""
        if values.get("level_search") is None:
            mode = values["mode"]
            values["level_search"] = (
                LevelSearch.BINARY if mode is Mode.SUBMODULAR else LevelSearch.LINEAR
            )
        return values

    @property
    def resolved_t(self) -> float:
        return AUTO_T if self.t == "auto" else float(self.t)

    @property
    def scale(self) -> float:
        """Cost multiplier s in the acceptance value: t or 1 + alpha"""
        if self.mode is Mode.SUBMODULAR:
            return self.resolved_t
        return 1.0 + self.alpha

    @property
    def ratio(self) -> float:
        """Grid ratio 1 + epsilon"""
        return 1.0 + self.epsilon

    @property
    def mode_param(self) -> Union[float, str]:
        """t (possibly "auto") in submodular mode, alpha otherwise"""
        return self.t if self.mode is Mode.SUBMODULAR else self.alpha
