"""Rigid-body motion: agitation sets, agitation, and the movement rule.

The agitation set of (A, v) is the smallest monomer set containing A that can
translate by v while (a) preserving rigid-bond offsets, (b) keeping
flexible-bond endpoints adjacent, and (c) landing only on empty points.
Those three conditions are exactly closure under a directed "forces to move"
relation, so the least valid set is the reachability set of A:

  X forces Y when  - X and Y share a rigid bond, or
                   - Y occupies X's target point p(X)+v, or
                   - X and Y share a flexible bond and Y would not be
                     adjacent to the moved X.

Closure under these edges is monotone, hence the least fixed point is unique;
the test suite checks it against a brute-force minimal-valid-set search.
Agitation is never blocked: members translate together so they cannot collide
with each other, and condition (c) folds colliders into the set instead of
failing.
"""

from __future__ import annotations

from typing import Optional

from .grid import DIR_VECS, GridPoint, hex_distance
from .model import EMPTY, Configuration, NotApplicable, Rule, rule_matches

_NEIGHBOR_OFFSETS = DIR_VECS


class Unoccupied(Exception):
    pass


class NotAdjacent(Exception):
    pass


class Blocked(Exception):
    """A movement rule whose movable set is empty cannot fire."""


def _closure_ids(c: Configuration, start: int, d: int) -> set[int]:
    vx, vy = DIR_VECS[d]
    members = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        px, py = c.pos_of(x)
        tx, ty = px + vx, py + vy
        forced = []
        occ = c.id_at((tx, ty))
        if occ >= 0:
            forced.append(occ)
        forced.extend(c._rigid[x])
        for y in c._flex[x]:
            if y not in members and hex_distance((tx, ty), c.pos_of(y)) != 1:
                forced.append(y)
        for y in forced:
            if y not in members:
                members.add(y)
                stack.append(y)
    return members


def agitation_set(c: Configuration, A: GridPoint, d: int) -> set[GridPoint]:
    """Positions of the agitation set of the monomer at A in direction d."""
    i = c.id_at(A)
    if i < 0:
        raise Unoccupied(f"no monomer at {A}")
    return {c.pos_of(x) for x in _closure_ids(c, i, d)}


def apply_agitation(c: Configuration, A: GridPoint, d: int) -> Configuration:
    """Translate the agitation set of (A, d) by d, in place."""
    import numpy as np

    i = c.id_at(A)
    if i < 0:
        raise Unoccupied(f"no monomer at {A}")
    ids = _closure_ids(c, i, d)
    arr = np.fromiter(ids, dtype=np.int64)
    cids = {c.cluster_of(x) for x in ids}
    c.translate_ids(arr, d, cluster_ids=cids)
    return c


def movable_set(c: Configuration, A: GridPoint, B: GridPoint, d: int) -> set[GridPoint]:
    """Agitation set of A in C-minus-the-A-B-bond, or empty if it captures B."""
    a, b = c.id_at(A), c.id_at(B)
    if a < 0 or b < 0:
        raise Unoccupied(f"movable set endpoints must be occupied: {A}, {B}")
    if hex_distance(A, B) != 1:
        raise NotAdjacent(f"{A} and {B} are not adjacent")
    old = c.bond_at(A, B)
    if old is not None:
        c.set_bond(A, B, None)
    try:
        ids = _closure_ids(c, a, d)
    finally:
        if old is not None:
            c.set_bond(A, B, old)
    if b in ids:
        return set()
    return {c.pos_of(x) for x in ids}


def apply_movement_rule(
    c: Configuration, r: Rule, pA: GridPoint, arm: str
) -> Configuration:
    """Fire a movement rule with the given arm choice ('s1' or 's2').

    The arm monomer translates (with its movable set) so that the pair ends in
    relative orientation u'; raises Blocked when the movable set is empty.
    """
    import numpy as np

    if r.kind != "movement":
        raise NotApplicable("not a movement rule")
    if not rule_matches(c, r, pA):
        raise NotApplicable(f"rule {r} does not match at {pA}")
    if arm not in ("s1", "s2"):
        raise ValueError("arm must be 's1' or 's2'")
    ux, uy = DIR_VECS[r.u]
    upx, upy = DIR_VECS[r.up]
    pB = (pA[0] + ux, pA[1] + uy)
    if arm == "s2":
        # s2 monomer X moves from p(X) to p(X) - u + u'
        mover, base = pB, pA
        v = (upx - ux, upy - uy)
    else:
        # s1 monomer Y moves from p(Y) to p(Y) + u - u'
        mover, base = pA, pB
        v = (ux - upx, uy - upy)
    from .grid import vector_to_direction

    d = vector_to_direction(v)
    pts = movable_set(c, mover, base, d)
    if not pts:
        raise Blocked(f"movement of {mover} by {v} is blocked")
    ids = [c.id_at(p) for p in pts]
    old_bond = c.bond_at(pA, pB)
    if old_bond is not None:
        c.set_bond(pA, pB, None)
    arr = np.fromiter(ids, dtype=np.int64)
    cids = {c.cluster_of(x) for x in ids}
    c.translate_ids(arr, d, cluster_ids=cids)
    # pair sites after the move
    new_pA = (pA[0] + v[0], pA[1] + v[1]) if arm == "s1" else pA
    new_pB = pB if arm == "s1" else (pB[0] + v[0], pB[1] + v[1])
    if r.s1p != r.s1:
        c.set_state(new_pA, r.s1p)
    if r.s2p != r.s2:
        c.set_state(new_pB, r.s2p)
    if r.bp != "null":
        c.set_bond(new_pA, new_pB, r.bp)
    return c


def brute_force_agitation_set(
    c: Configuration, A: GridPoint, d: int
) -> Optional[set[GridPoint]]:
    """Exponential oracle: smallest valid translatable set containing A.

    Enumerates all subsets of monomers containing A, tests validity of the
    translated configuration directly against the three conditions, and
    returns the unique minimum (asserting uniqueness).  Only usable on small
    configurations; the test suite uses it to validate the closure algorithm.
    """
    ids = list(c.alive_ids())
    n = len(ids)
    if n > 16:
        raise ValueError("brute force oracle limited to 16 monomers")
    a = c.id_at(A)
    if a < 0:
        raise Unoccupied(f"no monomer at {A}")
    vx, vy = DIR_VECS[d]
    pos = {i: c.pos_of(i) for i in ids}
    rigid_pairs = [(x, y) for x in ids for y in c._rigid[x] if x < y]
    flex_pairs = [(x, y) for x in ids for y in c._flex[x] if x < y]
    others = [i for i in ids if i != a]
    best: Optional[set[int]] = None
    best_size = n + 1
    for mask in range(1 << len(others)):
        members = {a} | {others[j] for j in range(len(others)) if mask >> j & 1}
        if len(members) > best_size:
            continue
        ok = True
        for x, y in rigid_pairs:
            if (x in members) != (y in members):
                ok = False
                break
        if ok:
            for x, y in flex_pairs:
                if (x in members) != (y in members):
                    moved, still = (x, y) if x in members else (y, x)
                    mp = pos[moved]
                    if hex_distance((mp[0] + vx, mp[1] + vy), pos[still]) != 1:
                        ok = False
                        break
        if ok:
            # condition (c): translated members land on empty-or-member points
            member_pos = {pos[m] for m in members}
            for m in members:
                t = (pos[m][0] + vx, pos[m][1] + vy)
                if c.occupied(t) and t not in member_pos:
                    ok = False
                    break
        if ok:
            if best is not None and len(members) == best_size and members != best:
                raise AssertionError("minimal valid set is not unique")
            if len(members) < best_size:
                best = members
                best_size = len(members)
    assert best is not None, "agitation can never be blocked"
    return {pos[m] for m in best}
