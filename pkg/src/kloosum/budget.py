"""Operation budget guard.

Exact evaluators cost p^(r-1), p^2*r, (HM)^2, ... inner operations; callers
may pass an explicit budget, otherwise DEFAULT_OP_BUDGET applies.
"""

from .errors import Infeasible

DEFAULT_OP_BUDGET = 200_000_000


def check_budget(ops: int, budget: int | None, what: str) -> None:
    """Raise Infeasible when `ops` exceeds the effective budget."""
    limit = DEFAULT_OP_BUDGET if budget is None else int(budget)
    if ops > limit:
        raise Infeasible(
            f"{what} needs {ops} inner operations, budget is {limit}; "
            "raise the budget to proceed"
        )
