"""Exhaustive enumerators used as ground truth for the recursions.

Every function walks the objects one by one (depth-first, pruning dead
prefixes) and counts them; nothing is memoised, so the counts are
independent of any recurrence.  Sizes are capped by :data:`BUDGETS`.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations

BUDGETS = {
    "dyck": 14,
    "motzkin": 16,
    "secondary": 18,
    "delannoy": 10,
    "schroeder": 10,
    "permutations": 9,
    "partitions": 9,
}


class BudgetExceeded(ValueError):
    pass


def _check(family: str, n: int, budget: int | None) -> None:
    limit = BUDGETS[family] if budget is None else budget
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise BudgetExceeded(f"{family}: n={n} exceeds the enumeration budget {limit}")


def enum_dyck(n: int, budget: int | None = None) -> tuple[int, dict[int, int]]:
    """Count Dyck paths of length ``2n`` and histogram them by number of peaks."""
    _check("dyck", n, budget)
    hist: Counter[int] = Counter()
    length = 2 * n

    def walk(pos: int, height: int, last_up: bool, peaks: int) -> None:
        if pos == length:
            hist[peaks] += 1
            return
        remaining = length - pos
        if height < remaining:
            walk(pos + 1, height + 1, True, peaks)
        if height > 0:
            walk(pos + 1, height - 1, False, peaks + last_up)

    walk(0, 0, False, 0)
    return sum(hist.values()), dict(sorted(hist.items()))


def enum_motzkin(n: int, budget: int | None = None) -> int:
    """Count Motzkin paths with ``n`` steps."""
    _check("motzkin", n, budget)
    count = 0

    def walk(pos: int, height: int) -> None:
        nonlocal count
        if pos == n:
            count += 1
            return
        remaining = n - pos
        if height + 1 <= remaining - 1:
            walk(pos + 1, height + 1)
        if height <= remaining - 1:
            walk(pos + 1, height)
        if height > 0:
            walk(pos + 1, height - 1)

    walk(0, 0)
    return count


def enum_secondary(l: int, n: int, budget: int | None = None) -> int:
    """Count secondary structures of rank ``l`` on ``n`` vertices.

    Vertices are scanned left to right with a stack of open arcs: each
    vertex stays unpaired, opens an arc, or closes the innermost open arc
    (the stack discipline is exactly non-crossing).  An arc ``(i, j)`` needs
    ``j - i > l``.  For the degenerate rank ``-1`` the condition admits
    ``j = i``, a loop at a single vertex, as a further option.
    """
    _check("secondary", n, budget)
    if l < -1:
        raise ValueError("rank must be at least -1")
    count = 0
    stack: list[int] = []

    def walk(v: int) -> None:
        nonlocal count
        if v > n:
            if not stack:
                count += 1
            return
        remaining = n - v + 1
        if len(stack) > remaining:
            return
        walk(v + 1)
        if l == -1:
            walk(v + 1)  # loop at v
        if stack and v - stack[-1] > l:
            top = stack.pop()
            walk(v + 1)
            stack.append(top)
        if len(stack) < remaining - 1:
            stack.append(v)
            walk(v + 1)
            stack.pop()

    walk(1)
    return count


def enum_delannoy(n: int, budget: int | None = None) -> int:
    """King's paths from (0,0) to (n,n) with steps E, N and diagonal."""
    _check("delannoy", n, budget)
    return _lattice(n, below_diagonal=False)


def enum_schroeder(n: int, budget: int | None = None) -> int:
    """King's paths from (0,0) to (n,n) that never rise above ``y = x``."""
    _check("schroeder", n, budget)
    return _lattice(n, below_diagonal=True)


def _lattice(n: int, below_diagonal: bool) -> int:
    count = 0

    def walk(x: int, y: int) -> None:
        nonlocal count
        if x == n and y == n:
            count += 1
            return
        if x < n:
            walk(x + 1, y)
        if y < n and (not below_diagonal or y + 1 <= x):
            walk(x, y + 1)
        if x < n and y < n:
            walk(x + 1, y + 1)

    walk(0, 0)
    return count


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def enum_permutations_by_cycles(n: int, budget: int | None = None) -> list[int]:
    """``[c(n,1), ..., c(n,n)]`` by listing all permutations (``[1]`` for n = 0)."""
    _check("permutations", n, budget)
    if n == 0:
        return [1]
    row = [0] * n
    for p in permutations(range(n)):
        row[_cycle_count(p) - 1] += 1
    return row


def enum_partitions_by_blocks(n: int, budget: int | None = None) -> list[int]:
    """``[S(n,1), ..., S(n,n)]`` by listing restricted growth strings."""
    _check("partitions", n, budget)
    if n == 0:
        return [1]
    row = [0] * n

    def walk(i: int, blocks: int) -> None:
        if i == n:
            row[blocks - 1] += 1
            return
        for b in range(blocks):
            walk(i + 1, blocks)
        walk(i + 1, blocks + 1)

    walk(1, 1)
    return row


FAMILIES = {
    "dyck": lambda n: enum_dyck(n)[0],
    "motzkin": enum_motzkin,
    "delannoy": enum_delannoy,
    "schroeder": enum_schroeder,
}
