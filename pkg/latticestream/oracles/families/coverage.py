import math
from typing import Callable, Dict, Mapping, Sequence, Union

from ...lattice import LatticeVector
from ...types import Element
from ..base import GainOracle, OracleClass


PHI: Dict[str, Callable[[float, float], float]] = {
    "capped-linear": lambda z, cap: min(z, cap),
    "sqrt": lambda z, cap: math.sqrt(z),
    "exp": lambda z, cap: 1.0 - math.exp(-z),
    "square": lambda z, cap: z * z,
}

CONCAVE_PHI = ("capped-linear", "sqrt", "exp")
CONVEX_PHI = ("square",)


class ConcaveCoverage(GainOracle):

    """
    Concave coverage g(x) = sum_j w_j * phi_j(sum_e a_je * x(e)). With
    nonnegative weights and incidence and a concave nondecreasing phi_j
    with phi_j(0) = 0, g is monotone, normalized and DR-submodular

    **Parameters**

    - **weights** (*Mapping[str, float]*): group weights w_j >= 0
    - **incidence** (*Mapping[str, Mapping[str, float]]*): a_je >= 0, group -> element -> coefficient
    - **phi** (*str | Mapping[str, str]*): one of *"capped-linear"*, *"sqrt"*,
    *"exp"* for every group or per group
    - **cap** (*float | Mapping[str, float]*): saturation level for *"capped-linear"*
    - **box** (*Mapping[str, int]*): declared domain
    - **claim** (*Optional(OracleClass)*): declared class, DR-submodular by default
    """

    kind = "concave-coverage"
    default_claim = OracleClass.DR_SUBMODULAR
    allowed_phi = CONCAVE_PHI

    def __init__(
        self,
        weights: Mapping[str, float],
        incidence: Mapping[str, Mapping[Element, float]],
        box: Mapping[Element, object],
        phi: Union[str, Mapping[str, str]] = "capped-linear",
        cap: Union[float, Mapping[str, float]] = 1.0,
        claim: OracleClass = None
    ) -> None:
        super().__init__(box, claim)
        groups = list(incidence)
        missing = [j for j in groups if j not in weights]
        if missing:
            raise ValueError(f"Groups {missing} have incidence but no weight")
        for j, w in weights.items():
            if w < 0:
                raise ValueError(f"Weight for group '{j}' must be nonnegative, got {w}")
        for j, row in incidence.items():
            for e, a in row.items():
                if a < 0:
                    raise ValueError(f"Incidence a[{j}][{e}] must be nonnegative, got {a}")
        phis = {j: phi for j in groups} if isinstance(phi, str) else dict(phi)
        caps = {j: cap for j in groups} if not isinstance(cap, Mapping) else dict(cap)
        for j in groups:
            kind = phis.get(j)
            if kind not in self.allowed_phi:
                raise ValueError(
                    f"phi for group '{j}' must be one of {list(self.allowed_phi)}, got {kind!r}"
                )
            if kind == "capped-linear" and caps.get(j, 0) <= 0:
                raise ValueError(f"capped-linear group '{j}' needs a positive cap")
        self.weights: Dict[str, float] = {j: float(weights[j]) for j in groups}
        self.incidence: Dict[str, Dict[Element, float]] = {
            j: {e: float(a) for e, a in incidence[j].items() if a} for j in groups
        }
        self.phi: Dict[str, str] = {j: phis[j] for j in groups}
        self.cap: Dict[str, float] = {j: float(caps.get(j, 1.0)) for j in groups}
        # element -> [(group, coefficient)] for sparse evaluation
        self._columns: Dict[Element, list] = {}
        for j, row in self.incidence.items():
            for e, a in row.items():
                self._columns.setdefault(e, []).append((j, a))

    @classmethod
    def per_element(
        cls,
        elements: Sequence[Element],
        box: Mapping[Element, object],
        phi: str = "capped-linear",
        cap: float = 1.0,
        weight: float = 1.0,
        **kwargs
    ) -> "ConcaveCoverage":
        """One group per element: g(x) = sum_e weight * phi(x(e))"""
        weights = {e: weight for e in elements}
        incidence = {e: {e: 1.0} for e in elements}
        return cls(weights, incidence, box, phi=phi, cap=cap, **kwargs)

    def _value(self, x: LatticeVector) -> float:
        loads: Dict[str, float] = {}
        for e, count in x.items():
            for j, a in self._columns.get(e, ()):
                loads[j] = loads.get(j, 0.0) + a * count
        value = 0.0
        for j, z in sorted(loads.items()):
            value += self.weights[j] * PHI[self.phi[j]](z, self.cap[j])
        return value

    def _spec_fields(self) -> Dict[str, object]:
        return {
            "weights": dict(self.weights),
            "incidence": {j: dict(row) for j, row in self.incidence.items()},
            "phi": dict(self.phi),
            "cap": dict(self.cap),
        }


class ConvexCoverage(ConcaveCoverage):

    """
    Coverage with convex phi(z) = z^2. Monotone and normalized but not
    DR-submodular; used as a negative control for the property checkers.
    Its claim defaults to DR-submodular so the checkers have a false
    claim to refute
    """

    kind = "adversarial-test"
    allowed_phi = CONVEX_PHI

    def __init__(
        self,
        weights: Mapping[str, float],
        incidence: Mapping[str, Mapping[Element, float]],
        box: Mapping[Element, object],
        phi: Union[str, Mapping[str, str]] = "square",
        cap: Union[float, Mapping[str, float]] = 1.0,
        claim: OracleClass = None
    ) -> None:
        super().__init__(weights, incidence, box, phi=phi, cap=cap, claim=claim)
