"""Search budgets shared by every exponential search in the package."""

from __future__ import annotations

import os

DEFAULT_BUDGET_ENV = "ODDHOLE_BUDGET"


class SearchBudget:
    """Caps the number of expansion nodes a search may visit.

    Searches call :meth:`tick` once per node; when it returns False they stop
    and leave ``exhausted`` set so callers report Unknown instead of a
    truncated answer.  ``max_nodes=None`` means unlimited.
    """

    __slots__ = ("max_nodes", "used", "exhausted")

    def __init__(self, max_nodes: int | None = None):
        if max_nodes is not None and max_nodes < 0:
            raise ValueError("budget must be non-negative")
        self.max_nodes = max_nodes
        self.used = 0
        self.exhausted = False

    def tick(self, k: int = 1) -> bool:
        self.used += k
        if self.max_nodes is not None and self.used > self.max_nodes:
            self.exhausted = True
            return False
        return True

    def report(self) -> dict:
        return {"max_nodes": self.max_nodes, "used": self.used, "exhausted": self.exhausted}

    def __repr__(self) -> str:
        return f"SearchBudget(max_nodes={self.max_nodes}, used={self.used}, exhausted={self.exhausted})"


def default_budget_nodes() -> int | None:
    """Node cap from the ``ODDHOLE_BUDGET`` environment variable, if set."""
    raw = os.environ.get(DEFAULT_BUDGET_ENV)
    if raw is None or raw.strip() == "" or raw.strip().lower() in {"none", "unlimited"}:
        return None
    return int(raw)


def fresh(budget: SearchBudget | int | None) -> SearchBudget:
    """Normalize the budget arguments accepted across the public API."""
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(budget)


class BudgetedStream:
    """An iterator that remembers whether its search was cut short.

    Iterate it once; afterwards ``exhausted`` tells whether the budget ran
    out before the enumeration completed.
    """

    def __init__(self, gen, budget: SearchBudget):
        self._gen = gen
        self.budget = budget

    def __iter__(self):
        return self._gen

    def __next__(self):
        return next(self._gen)

    @property
    def exhausted(self) -> bool:
        return self.budget.exhausted
