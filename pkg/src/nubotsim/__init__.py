"""Exact stochastic simulator for the agitation nubot model."""

from .grid import GridPoint, hex_distance, neighbors, v_boundary
from .model import (
    Configuration,
    Rule,
    RuleInstance,
    apply_local_rule,
    bounding_box,
    enumerate_applicable,
    is_target,
    rule_matches,
    validate_rule,
)
from .motion import agitation_set, apply_agitation, apply_movement_rule, movable_set
from .engine import RunResult, SimOptions, Simulation

__all__ = [
    "GridPoint",
    "hex_distance",
    "neighbors",
    "v_boundary",
    "Configuration",
    "Rule",
    "RuleInstance",
    "validate_rule",
    "rule_matches",
    "apply_local_rule",
    "enumerate_applicable",
    "is_target",
    "bounding_box",
    "agitation_set",
    "apply_agitation",
    "movable_set",
    "apply_movement_rule",
    "Simulation",
    "SimOptions",
    "RunResult",
]
