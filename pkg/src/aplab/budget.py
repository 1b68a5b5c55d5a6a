"""Search budgets shared by the exhaustive enumerators and the solver.

The default DFS budget is 1e8 nodes; the APLAB_BUDGET_NODES environment
variable overrides it, and an explicit argument overrides both. The env
var is read at call time so tests and long-running processes can adjust
it without reimporting.
"""

import os

DEFAULT_NODE_BUDGET = 10 ** 8


class BudgetExceededError(RuntimeError):
    """An exhaustive search would exceed (or exceeded) its node budget.

    Carries the refused cost estimate and the budget so callers can report
    both; signals that sampling or interval mode should be used instead.
    """

    def __init__(self, message, cost=None, budget=None):
        super().__init__(message)
        self.cost = cost
        self.budget = budget


def node_budget(override=None):
    """Resolve the active node budget: argument > env var > default."""
    if override is not None:
        budget = int(override)
    else:
        env = os.environ.get("APLAB_BUDGET_NODES", "").strip()
        budget = int(env) if env else DEFAULT_NODE_BUDGET
    if budget <= 0:
        raise ValueError("node budget must be positive")
    return budget


def check_upfront(cost, budget, what):
    """Refuse an exhaustive run whose known cost already exceeds budget."""
    if cost > budget:
        raise BudgetExceededError(
            f"{what} needs about {cost} nodes, over the budget of {budget}; "
            "use sampling or raise APLAB_BUDGET_NODES",
            cost=cost,
            budget=budget,
        )
