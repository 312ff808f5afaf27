"""Resource bounds that keep every search either exact or explicitly unknown."""

from __future__ import annotations

import time
from dataclasses import dataclass


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for the class search and the cover search.

    ``None`` means unlimited.  A search that would exceed a bound stops with
    an Unknown verdict (or raises BudgetExhausted); it never guesses.
    """

    max_bfs_states: int | None = 5_000_000
    max_piece_candidates: int | None = 1_000_000
    time_limit: float | None = None

    def __post_init__(self):
        for name in ("max_bfs_states", "max_piece_candidates", "time_limit"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive or None, got {value!r}")

    def deadline(self) -> float | None:
        return None if self.time_limit is None else time.monotonic() + self.time_limit


DEFAULT_BUDGET = SearchBudget()
