"""Work budgets for the exponential searches.

A budget is measured in backtracking node expansions. Exhaustive routines
charge it as they go and raise :class:`BudgetExceededError` once it runs dry,
so a runaway input fails loudly instead of hanging.
"""
from __future__ import annotations

import os

from .errors import BudgetExceededError

DEFAULT_BUDGET = 10**9
BUDGET_ENV_VAR = "POWERCOLOR_BUDGET"


def default_budget_limit() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


class Budget:
    """Mutable countdown of node expansions, shareable across sub-searches."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = default_budget_limit() if limit is None else int(limit)
        if self.limit <= 0:
            raise ValueError(f"budget limit must be positive, got {self.limit}")
        self.used = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceededError(
                f"work budget exceeded: {self.used} > {self.limit} node expansions"
            )

    @property
    def remaining(self) -> int:
        return max(self.limit - self.used, 0)

    def __repr__(self):
        return f"Budget(used={self.used}, limit={self.limit})"


def ensure_budget(budget: Budget | int | None) -> Budget:
    """Normalize an int / None / Budget argument into a Budget instance."""
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
