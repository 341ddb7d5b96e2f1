import logging
import math
import threading
from abc import ABC, abstractmethod
from enum import Enum
from typing import ClassVar, Dict, Mapping

from ..exceptions import OracleDomainError
from ..lattice import LatticeVector
from ..types import BoxBound, Element
from ..util import parse_bound


logger = logging.getLogger(__name__)


class OracleClass(str, Enum):
    """Submodularity class an oracle claims to belong to"""
    DR_SUBMODULAR = "DR-submodular"
    LATTICE_SUBMODULAR = "lattice-submodular"
    ALPHA_WEAK = "alpha-weak"


class GainOracle(ABC):

    """
    Base class for monotone normalized gain functions g on a box of N^E.
    Evaluation is pure; every call to `evaluate` is counted so the number
    of queries an algorithm makes is measured at the oracle

    Subclasses implement `_value` and `_spec_fields`

    **Parameters**

    - **box** (*Mapping[str, int | "unbounded"]*): declared domain. Evaluating
    a vector outside the box raises `OracleDomainError`
    - **claim** (*Optional(OracleClass)*): declared submodularity class,
    defaults to the family's class
    """

    kind: ClassVar[str]
    default_claim: ClassVar[OracleClass] = OracleClass.DR_SUBMODULAR

    def __init__(self, box: Mapping[Element, object], claim: OracleClass = None) -> None:
        self._box: Dict[Element, BoxBound] = {e: parse_bound(bound) for e, bound in box.items()}
        self.claim = OracleClass(claim) if claim is not None else self.default_claim
        self._calls = 0
        self._lock = threading.Lock()

    @property
    def box(self) -> Dict[Element, BoxBound]:
        return dict(self._box)

    @property
    def calls(self) -> int:
        """Evaluations since construction or the last `reset_calls`"""
        return self._calls

    def reset_calls(self) -> int:
        """Zero the call counter and return the previous count"""
        with self._lock:
            previous, self._calls = self._calls, 0
        return previous

    def evaluate(self, x: LatticeVector) -> float:
        """
        Return g(x)

        Raises:
            - OracleDomainError: x is outside the declared box
        """
        self.check_domain(x)
        with self._lock:
            self._calls += 1
        return self._value(x)

    def bound(self, e: Element) -> BoxBound:
        return self._box.get(e, 0)

    def check_domain(self, x: LatticeVector) -> None:
        for e, count in x.items():
            bound = self._box.get(e, 0)
            if count > bound:
                raise OracleDomainError(
                    f"{self.kind} oracle evaluated outside its box: "
                    f"x({e}) = {count} exceeds {bound}"
                )

    def metered(self) -> "OracleMeter":
        """Return a view that counts its own calls and forwards to this oracle"""
        return OracleMeter(self)

    def to_spec(self) -> Dict[str, object]:
        """Oracle specification content that rebuilds this oracle"""
        box = {e: ("unbounded" if math.isinf(b) else b) for e, b in self._box.items()}
        return {
            "kind": self.kind,
            "claim": self.claim.value,
            "box": box,
            **self._spec_fields()
        }

    def __call__(self, x: LatticeVector) -> float:
        return self.evaluate(x)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={len(self._box)}, claim={self.claim.value})"

    @abstractmethod
    def _value(self, x: LatticeVector) -> float:
        ...

    @abstractmethod
    def _spec_fields(self) -> Dict[str, object]:
        ...


class OracleMeter:

    """
    Counting view over a GainOracle. One meter belongs to one caller, so
    its local count is the number of queries that caller made; the parent
    oracle still sees every call
    """

    def __init__(self, oracle: GainOracle) -> None:
        self._oracle = oracle
        self.calls = 0

    @property
    def box(self) -> Dict[Element, BoxBound]:
        return self._oracle.box

    def evaluate(self, x: LatticeVector) -> float:
        value = self._oracle.evaluate(x)
        self.calls += 1
        return value
