"""Brute-force ground truth for independence numbers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import BudgetExceeded
from .graph import AbstractGraph, is_independent


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 40
    # Search nodes across all branch-and-bound calls of one query. Counting
    # nodes instead of seconds keeps the outcome reproducible.
    max_nodes: int = 200_000_000

    def __post_init__(self):
        if self.max_n <= 0 or self.max_nodes <= 0:
            raise ValueError("budget fields must be positive")
        if self.max_n > 62:
            raise ValueError("bitmask search supports at most 62 vertices")


def _as_abstract(g) -> AbstractGraph:
    return g if isinstance(g, AbstractGraph) else g.to_abstract()


def alpha_exact(g, budget: OracleBudget | None = None) -> tuple[int, frozenset]:
    """Independence number with the lexicographically smallest maximum set.

    Accepts an AbstractGraph or a PlaneGraph. Raises BudgetExceeded when the
    graph is larger than ``budget.max_n`` or the node budget runs out.
    """
    budget = budget or OracleBudget()
    g = _as_abstract(g)
    if g.n > budget.max_n:
        raise BudgetExceeded(f"n={g.n} exceeds oracle cap {budget.max_n}")
    if g.n == 0:
        return 0, frozenset()
    adj = g.bitmasks()
    left = budget.max_nodes

    def solve(cand):
        nonlocal left
        best, used, done = kernels.mis_bnb(adj, np.int64(cand), np.int64(left))
        left -= int(used)
        if not done:
            raise BudgetExceeded("oracle node budget exhausted")
        return int(best)

    full = (1 << g.n) - 1
    alpha = solve(full)
    # Fix vertices in ascending order, keeping each one whenever a maximum
    # set through it survives.
    chosen = []
    cand = full
    need = alpha
    for v in range(g.n):
        if need == 0:
            break
        bit = 1 << v
        if not cand & bit:
            continue
        rest = cand & ~(int(adj[v]) | bit)
        rest &= ~((bit << 1) - 1)
        if 1 + solve(rest) == need:
            chosen.append(v)
            cand = rest
            need -= 1
        else:
            cand &= ~bit
    return alpha, frozenset(chosen)


def verify_independent(g, s) -> tuple[bool, tuple | None]:
    """``(True, None)`` if ``s`` is independent, else ``(False, edge)``."""
    g = _as_abstract(g)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    return is_independent(g.adj, s)
