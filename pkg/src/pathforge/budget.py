"""Step budgets for the backtracking searches.

Search routines accept ``budget=None`` (unlimited), an integer step count, or
a :class:`Budget` instance shared across several calls.  Exhaustion raises
:class:`BudgetExhausted`, which callers must distinguish from a definite
negative answer.
"""

from __future__ import annotations

import os

ENV_VAR = "PATHFORGE_BUDGET"


class BudgetExhausted(RuntimeError):
    """Raised when a search runs out of steps before reaching a verdict."""

    def __init__(self, steps: int):
        super().__init__(f"search budget exhausted after {steps} steps")
        self.steps = steps


class Budget:
    """Mutable step counter with an optional hard limit."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted(self.used)

    @classmethod
    def coerce(cls, budget: "Budget | int | None") -> "Budget":
        if isinstance(budget, Budget):
            return budget
        return cls(budget)

    @classmethod
    def from_env(cls) -> "Budget":
        """Budget from the PATHFORGE_BUDGET environment variable (unlimited if unset)."""
        raw = os.environ.get(ENV_VAR)
        return cls(int(raw)) if raw else cls(None)
