"""Exact shape verifiers for the construction targets."""

from __future__ import annotations

from typing import Optional

from ..model import Configuration


def verify_line(
    c: Configuration, n: int, states: Optional[tuple[str, ...]] = None
) -> tuple[bool, str]:
    """An n x 1 horizontal line of rigidly chained monomers.

    ``states``, when given, is the expected left-to-right state sequence.
    """
    if len(c) != n:
        return False, f"expected {n} monomers, found {len(c)}"
    x0, y0, x1, y1 = c.bbox()
    if (x1 - x0 + 1, y1 - y0 + 1) != (n, 1):
        return False, f"bounding box {(x1 - x0 + 1, y1 - y0 + 1)} != {(n, 1)}"
    for i in range(n):
        p = (x0 + i, y0)
        if not c.occupied(p):
            return False, f"hole at offset {i}"
        if states is not None and c.state_at(p) != states[i]:
            return False, f"state {c.state_at(p)} at offset {i}, expected {states[i]}"
    for i in range(n - 1):
        p, q = (x0 + i, y0), (x0 + i + 1, y0)
        if c.bond_at(p, q) != "rigid":
            return False, f"missing rigid bond {p}-{q}"
    return True, "ok"


def verify_square(
    c: Configuration, n: int, allowed_states: Optional[set[str]] = None
) -> tuple[bool, str]:
    """An n x n fully occupied block, every grid-adjacent pair rigidly bonded."""
    if len(c) != n * n:
        return False, f"expected {n * n} monomers, found {len(c)}"
    x0, y0, x1, y1 = c.bbox()
    if (x1 - x0 + 1, y1 - y0 + 1) != (n, n):
        return False, f"bounding box {(x1 - x0 + 1, y1 - y0 + 1)} != {(n, n)}"
    for dx in range(n):
        for dy in range(n):
            p = (x0 + dx, y0 + dy)
            if not c.occupied(p):
                return False, f"hole at offset ({dx}, {dy})"
            if allowed_states is not None and c.state_at(p) not in allowed_states:
                return False, f"unexpected state {c.state_at(p)} at ({dx}, {dy})"
    for dx in range(n):
        for dy in range(n):
            p = (x0 + dx, y0 + dy)
            if dx + 1 < n:
                q = (x0 + dx + 1, y0 + dy)
                if c.bond_at(p, q) != "rigid":
                    return False, f"missing rigid bond {p}-{q}"
            if dy + 1 < n:
                q = (x0 + dx, y0 + dy + 1)
                if c.bond_at(p, q) != "rigid":
                    return False, f"missing rigid bond {p}-{q}"
    return True, "ok"


def rigidly_connected(c: Configuration) -> bool:
    """True when all monomers form one rigid cluster (no relative motion)."""
    return len(list(c.cluster_ids())) == 1


def connected(c: Configuration) -> bool:
    """Bond-graph connectivity (rigid and flexible bonds alike)."""
    ids = list(c.alive_ids())
    if len(ids) <= 1:
        return True
    seen = {ids[0]}
    stack = [ids[0]]
    while stack:
        x = stack.pop()
        for y in c._rigid[x] | c._flex[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(ids)
