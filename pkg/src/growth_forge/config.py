from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Budget:
    """Hard limits for enumeration; exceeding one raises ``BudgetExceeded``.

    ``run_limit`` caps the number of runs in a built prefix, ``char_limit`` the
    length of any materialized word, and ``span_limit`` the number of basis
    vectors (or distinct monomials / pairs) held by a span expansion.
    """

    run_limit: int = 10**6
    char_limit: int = 20_000_000
    span_limit: int = 2_000_000

    def __post_init__(self):
        for name in ("run_limit", "char_limit", "span_limit"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_BUDGET = Budget()
