"""The slow line builder: one growth front, O(n) states, O(n) expected time.

Rule family: ``(s_i, empty, null, +x) -> (s_0, s_{i-1}, rigid, +x)`` for
``i = 2..n``, started from a single monomer in state ``s_n``.  Each of the
n-1 attachments is a rate-1 exponential competing only against agitations
that preserve the configuration up to translation, so completion takes
about n-1 time units.
"""

from __future__ import annotations

from ..model import Configuration
from .common import NonPositive, ProgramSpec, R
from .verify import verify_line


def slow_line_program(n: int) -> ProgramSpec:
    if n < 1:
        raise NonPositive(f"line length must be positive, got {n}")
    rules = [
        R(f"s{i}", "empty", "null", "+x", "s0", f"s{i - 1}", "rigid", "+x")
        for i in range(2, n + 1)
    ]
    expected = tuple(["s0"] * (n - 1) + ["s1"])

    def initial() -> Configuration:
        return Configuration.from_items([((0, 0), f"s{n}")])

    def target(c: Configuration) -> bool:
        if len(c) != n:
            return False
        return verify_line(c, n, states=expected)[0]

    return ProgramSpec(
        name="slow-line",
        size=n,
        rules=rules,
        initial=initial,
        target=target,
        space_bound=(n, 1),
        state_budget=n + 1,
        target_count=n,
    )
