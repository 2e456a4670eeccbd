"""Triangular-grid geometry: axial coordinates, the six directions, distances.

Points are plain ``(x, y)`` integer tuples.  The third axis w runs through
``(-1, 1)``; it is derived from x and y and never stored.  Directions are
small integers ``0..5`` indexing the tables below, so hot loops can stay
allocation-free; use :func:`direction_name` / :func:`parse_direction` at the
boundaries.
"""

from __future__ import annotations

from typing import Iterable

GridPoint = tuple[int, int]

# Canonical direction order.  Opposite directions are paired (d ^ 1 negates).
PX, NX, PY, NY, PW, NW = range(6)

DIR_VECS: tuple[GridPoint, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1), (-1, 1), (1, -1))
DIR_NAMES: tuple[str, ...] = ("+x", "-x", "+y", "-y", "+w", "-w")

_NAME_TO_DIR = {name: d for d, name in enumerate(DIR_NAMES)}
_VEC_TO_DIR = {vec: d for d, vec in enumerate(DIR_VECS)}

ALL_DIRECTIONS = tuple(range(6))


def direction_vector(d: int) -> GridPoint:
    return DIR_VECS[d]


def direction_name(d: int) -> str:
    return DIR_NAMES[d]


def parse_direction(name: str) -> int:
    """Map a textual direction (``+x`` ... ``-w``) to its code."""
    try:
        return _NAME_TO_DIR[name]
    except KeyError:
        raise ValueError(f"unknown direction {name!r}") from None


def negate_direction(d: int) -> int:
    return d ^ 1


def vector_to_direction(vec: GridPoint) -> int:
    """Inverse of :func:`direction_vector`; raises for non-unit vectors."""
    try:
        return _VEC_TO_DIR[vec]
    except KeyError:
        raise ValueError(f"{vec!r} is not an axial unit vector") from None


def translate(p: GridPoint, d: int) -> GridPoint:
    v = DIR_VECS[d]
    return (p[0] + v[0], p[1] + v[1])


def neighbors(p: GridPoint) -> set[GridPoint]:
    """The six neighbors of ``p``."""
    x, y = p
    return {(x + vx, y + vy) for vx, vy in DIR_VECS}


def hex_distance(p: GridPoint, q: GridPoint) -> int:
    """Length of the shortest direction-step path from p to q.

    Closed form (|dx| + |dy| + |dx + dy|) / 2 for this direction set;
    validated against BFS in the test suite.
    """
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    return (abs(dx) + abs(dy) + abs(dx + dy)) // 2


def is_adjacent(p: GridPoint, q: GridPoint) -> bool:
    return (q[0] - p[0], q[1] - p[1]) in _VEC_TO_DIR


def v_boundary(points: Iterable[GridPoint], d: int) -> set[GridPoint]:
    """Points one step in direction ``d`` from the set, excluding the set."""
    pts = set(points)
    vx, vy = DIR_VECS[d]
    return {(x + vx, y + vy) for x, y in pts} - pts
