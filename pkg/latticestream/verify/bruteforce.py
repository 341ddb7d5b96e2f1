import logging

from pydantic import BaseModel

from ..lattice import LatticeVector
from ..lattice.enumerate import ensure_enumerable, iter_budget
from ..oracles import ProblemInstance


logger = logging.getLogger(__name__)

# lattice points brute_force_opt will enumerate before giving up
BRUTE_FORCE_LIMIT = 10 ** 7


class OptimalSolution(BaseModel):

    """
    Exact optimum of g(x) - c(x) over the feasible lattice

    - **x_star**: lexicographically smallest maximizer in ground set order
    - **value**: g(x*) - c(x*)
    - **gain_value**, **cost_value**: g(x*) and c(x*) separately
    - **enumerated_count**: feasible points evaluated
    """

    x_star: LatticeVector
    value: float
    gain_value: float
    cost_value: float
    enumerated_count: int


def brute_force_opt(inst: ProblemInstance, limit: int = BRUTE_FORCE_LIMIT) -> OptimalSolution:
    """
    Enumerate every x <= b with x(E) <= k and return the maximizer of
    g(x) - c(x). Ties go to the lexicographically smallest count vector

    Raises:
        - InstanceTooLargeError: prod_e (min(b(e), k) + 1) exceeds `limit`
    """
    elements = list(inst.ground.elements)
    caps = [inst.constraint.cap(e) for e in elements]
    ensure_enumerable(caps, limit, what="instance")

    best_point = None
    best_value = best_gain = best_cost = 0.0
    count = 0
    for point in iter_budget(caps, inst.k):
        x = LatticeVector.from_dense(elements, point)
        gain = inst.gain.evaluate(x)
        cost = inst.cost.evaluate(x)
        count += 1
        if best_point is None or gain - cost > best_value:
            best_point = x
            best_value, best_gain, best_cost = gain - cost, gain, cost

    logger.debug("brute force enumerated %i points, optimum %.6g", count, best_value)
    return OptimalSolution(
        x_star=best_point,
        value=best_value,
        gain_value=best_gain,
        cost_value=best_cost,
        enumerated_count=count
    )
