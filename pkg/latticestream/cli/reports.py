from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from pydantic import BaseModel

from ..exceptions import ConfigError
from ..lattice import LatticeVector
from ..oracles import ProblemInstance
from ..sieve import SolutionReport
from ..util import dump_canonical
from ..verify import VerificationReport


class RunReport(BaseModel):

    """
    Report written by `run` and `verify`. Serialized canonically so two
    runs over the same input produce identical bytes; wall clock timing
    goes to a sidecar file

    - **config**: algorithm configuration echo
    - **instance**: ground set size, budget and oracle kind
    - **tau**, **x**, **objective**: the chosen instance's threshold and solution
    - **ratio**: theoretical (rho_g, rho_c) at mu = 1, nu = 0
    - **counters**: oracle calls and live instance counts
    - **solution**: the full per instance report
    - **verification**: present when the run was verified
    """

    config: Dict[str, Any]
    instance: Dict[str, Any]
    tau: Optional[float]
    x: LatticeVector
    objective: float
    ratio: Tuple[float, float]
    counters: Dict[str, Optional[int]]
    solution: SolutionReport
    verification: Optional[VerificationReport]

    @classmethod
    def from_solution(
        cls,
        inst: ProblemInstance,
        solution: SolutionReport,
        verification: VerificationReport = None
    ) -> "RunReport":
        return cls(
            config=solution.config,
            instance={
                "n": inst.ground.n,
                "k": inst.k,
                "stream_length": len(inst.stream_order),
                "oracle": inst.gain.kind,
                "claim": inst.gain.claim.value,
            },
            tau=solution.tau,
            x=solution.x,
            objective=solution.objective,
            ratio=solution.theorem_ratios,
            counters={
                "total_oracle_calls": solution.total_oracle_calls,
                "peak_live": solution.peak_live,
                "live_bound": solution.live_bound,
                "spawned": solution.spawned,
                "dropped": solution.dropped,
                "elements_seen": solution.elements_seen,
            },
            solution=solution,
            verification=verification
        )

    def canonical(self) -> bytes:
        return dump_canonical(self)


def timing_path(out: Union[str, Path]) -> Path:
    """Sidecar for wall clock fields: r.json -> r.json.timing.json"""
    out = Path(out)
    return out.with_name(f"{out.name}.timing.json")

def write_report(out: Union[str, Path], content: bytes, timing: Dict[str, float]) -> None:
    """
    Raises:
        - ConfigError: the report or its timing sidecar cannot be written
    """
    out = Path(out)
    try:
        out.write_bytes(content)
        timing_path(out).write_bytes(dump_canonical(timing))
    except OSError as err:
        raise ConfigError(f"Cannot write report '{out}': {err}") from err
