"""Shared plumbing for the built-in construction programs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from ..grid import parse_direction
from ..model import Configuration, Rule


@dataclass
class ProgramSpec:
    """A packaged construction: rules, seed builder, target, space bound."""

    name: str
    size: int
    rules: list[Rule]
    initial: Callable[[], Configuration]
    target: Callable[[Configuration], bool]
    space_bound: tuple[int, int]
    state_budget: int
    target_count: Optional[int] = None  # cheap monomer-count gate


class NonPositive(ValueError):
    pass


class TooSmall(ValueError):
    pass


def R(s1: str, s2: str, b: str, u: str, s1p: str, s2p: str, bp: str, up: str) -> Rule:
    """Compact rule constructor with textual directions."""
    return Rule(s1, s2, b, parse_direction(u), s1p, s2p, bp, parse_direction(up))


class RuleSetBuilder:
    """Collects rules, rejecting duplicates with identical left sides/effects."""

    def __init__(self) -> None:
        self.rules: list[Rule] = []
        self._seen: set[tuple] = set()

    def add(self, *args) -> None:
        rule = args[0] if len(args) == 1 else R(*args)
        key = (rule.s1, rule.s2, rule.b, rule.u, rule.s1p, rule.s2p, rule.bp, rule.up)
        if key in self._seen:
            return
        self._seen.add(key)
        self.rules.append(rule)

    def extend(self, rules) -> None:
        for r in rules:
            self.add(r)


def count_states(rules: list[Rule], extra: tuple[str, ...] = ()) -> int:
    names = set(extra)
    for r in rules:
        for s in (r.s1, r.s2, r.s1p, r.s2p):
            if s != "empty":
                names.add(s)
    return len(names)
