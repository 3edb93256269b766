"""Budgeted depth-first search shared by the collapse, qc and a-reduction searches."""

from __future__ import annotations

import enum


class Outcome(enum.Enum):
    """Non-success results of a bounded search.

    ``UNKNOWN`` means the node budget ran out.  The ``*_EXHAUSTED`` members
    mean the whole search tree was examined (or pruned by a proven invariant)
    without success, which is a definitive negative answer.
    """

    UNKNOWN = "UNKNOWN"
    NOT_COLLAPSIBLE_EXHAUSTED = "NOT_COLLAPSIBLE_EXHAUSTED"
    NOT_REDUCIBLE_EXHAUSTED = "NOT_REDUCIBLE_EXHAUSTED"
    NOT_SA_EXHAUSTED = "NOT_SA_EXHAUSTED"
    IMPOSSIBLE_EXHAUSTED = "IMPOSSIBLE_EXHAUSTED"

    @property
    def exhausted(self) -> bool:
        return self is not Outcome.UNKNOWN

    def __str__(self):
        return self.value


DEFAULT_BUDGET = 10**6


class _OutOfBudget(Exception):
    pass


def depth_first(root, expand, is_goal, key, budget, exhausted: Outcome):
    """Search for a move sequence from ``root`` to a goal node.

    ``expand(node)`` yields ``(move, child)`` pairs in the order they should be
    tried; it may be a lazy generator.  Nodes are memoized by ``key(node)``;
    every move must shrink the node so the search graph is acyclic.  Returns
    ``(moves, final_node)`` on success, ``exhausted`` when the tree is empty,
    or ``Outcome.UNKNOWN`` once more than ``budget`` nodes were expanded.
    """
    dead: set = set()
    path: list = []
    expanded = 0

    def go(node):
        nonlocal expanded
        if is_goal(node):
            return node
        k = key(node)
        if k in dead:
            return None
        expanded += 1
        if expanded > budget:
            raise _OutOfBudget
        for move, child in expand(node):
            path.append(move)
            found = go(child)
            if found is not None:
                return found
            path.pop()
        dead.add(k)
        return None

    try:
        final = go(root)
    except _OutOfBudget:
        return Outcome.UNKNOWN
    if final is None:
        return exhausted
    return list(path), final
