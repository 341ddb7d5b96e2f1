from enum import Enum
from typing import(
    Dict,
    List,
    Mapping,
    Protocol,
    Union
)


Element = str

Multiplicity = int

# finite bounds are ints, unbounded entries are math.inf
BoxBound = Union[int, float]

JSONPrimitive = Union[
    str,
    float,
    bool,
    int,
    None,
]

JSONType = Union[
    "JSONType",
    JSONPrimitive,
    Dict[str, "JSONType"],
    List["JSONType"]
]


class VectorType(Protocol):
    @property
    def total(self) -> int:
        ...

    def __getitem__(self, e: Element) -> int:
        ...


class GainOracleType(Protocol):
    @property
    def box(self) -> Mapping[Element, BoxBound]:
        ...

    @property
    def calls(self) -> int:
        ...

    def evaluate(self, x: VectorType) -> float:
        ...


class Mode(str, Enum):
    """Which algorithm family runs: submodular g or alpha-weakly submodular g"""
    SUBMODULAR = "submodular"
    ALPHA = "alpha"

    @classmethod
    def _missing_(cls, value: object) -> "Mode":
        if value == "alpha-weak":
            return cls.ALPHA
        return None


class LevelSearch(str, Enum):
    """How the level of an arriving element is located"""
    BINARY = "binary"
    LINEAR = "linear"

    @classmethod
    def _missing_(cls, value: object) -> "LevelSearch":
        if value == "linear-scan":
            return cls.LINEAR
        return None
