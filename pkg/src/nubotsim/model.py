"""Monomers, bonds, configurations and pair-local rewrite rules.

A :class:`Configuration` is the sole mutable simulation state: an occupancy
map from grid points to monomer states plus the bond relation between
adjacent occupied points.  Internally it is backed by a dense arena array
with persistent integer monomer ids, so bulk rigid-body translations touch
O(moved) cells and bond records (keyed by ids) survive movement untouched.
Rigid-bond connected components ("clusters") are maintained incrementally;
they are what the engine's agitation machinery works on.

States are interned strings.  The reserved name ``"empty"`` denotes the
absence of a monomer and is never a monomer state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from .grid import (
    DIR_VECS,
    GridPoint,
    direction_name,
    hex_distance,
    is_adjacent,
)

EMPTY = "empty"

# Bond type codes. 0 doubles as "no bond" in rule encodings.
NULL, RIGID, FLEXIBLE = 0, 1, 2
BOND_NAMES = ("null", "rigid", "flexible")
_BOND_CODES = {"null": NULL, "rigid": RIGID, "flexible": FLEXIBLE}


def bond_code(name: Optional[str]) -> int:
    if name is None:
        return NULL
    try:
        return _BOND_CODES[name]
    except KeyError:
        raise ValueError(f"unknown bond type {name!r}") from None


class StateTable:
    """Interns state names to positive integer codes (0 is reserved for empty)."""

    def __init__(self) -> None:
        self._codes: dict[str, int] = {EMPTY: 0}
        self._names: list[str] = [EMPTY]

    def code(self, name: str) -> int:
        c = self._codes.get(name)
        if c is None:
            c = len(self._names)
            self._codes[name] = c
            self._names.append(name)
        return c

    def name(self, code: int) -> str:
        return self._names[code]

    def known(self, name: str) -> bool:
        return name in self._codes

    def __len__(self) -> int:
        return len(self._names)


@dataclass(frozen=True)
class Rule:
    """A pair-local rewrite ``(s1, s2, b, u) -> (s1', s2', b', u')``.

    ``u`` and ``u'`` are direction codes; the rule is local iff they are
    equal, otherwise it is a movement rule (appendix extension).
    """

    s1: str
    s2: str
    b: str
    u: int
    s1p: str
    s2p: str
    bp: str
    up: int

    @property
    def kind(self) -> str:
        return "local" if self.u == self.up else "movement"

    def __str__(self) -> str:
        return (
            f"{self.s1}, {self.s2}, {self.b}, {direction_name(self.u)} -> "
            f"{self.s1p}, {self.s2p}, {self.bp}, {direction_name(self.up)}"
        )


@dataclass(frozen=True)
class RuleInstance:
    """One applicable placement of a rule: the rule index and the s1 site."""

    rule: int
    anchor: GridPoint


def validate_rule(r: Rule) -> list[str]:
    """Return the list of violated constraints (empty list means valid)."""
    errors = []
    if r.s1 == EMPTY and r.s2 == EMPTY:
        errors.append("EmptyPairBothSides")
    if r.s1p == EMPTY and r.s2p == EMPTY:
        errors.append("EmptyPairBothSides")
    if (r.s1 == EMPTY or r.s2 == EMPTY) and r.b != "null":
        errors.append("BondToEmpty")
    if (r.s1p == EMPTY or r.s2p == EMPTY) and r.bp != "null":
        errors.append("BondToEmpty")
    if r.u != r.up:
        if EMPTY in (r.s1, r.s2, r.s1p, r.s2p):
            errors.append("MovementWithEmpty")
        du = DIR_VECS[r.u]
        dup = DIR_VECS[r.up]
        if hex_distance(du, dup) != 1:
            errors.append("MovementBadOrientation")
    return errors


class Configuration:
    """Occupancy plus bonds, with incremental rigid-cluster maintenance.

    Mutations go through :meth:`add_monomer`, :meth:`remove_monomer`,
    :meth:`set_state`, :meth:`set_bond` and :meth:`translate_ids`; each bumps
    ``revision``.  ``struct_rev`` is bumped only by mutations that can change
    agitation sets (occupancy changes, bond changes, cluster changes), which
    is what the engine keys its closure cache on.
    """

    __slots__ = (
        "states",
        "revision",
        "struct_rev",
        "_grid",
        "_x0",
        "_y0",
        "_px",
        "_py",
        "_st",
        "_cl",
        "_alive",
        "_slot",
        "_free",
        "_top",
        "_rigid",
        "_flex",
        "_clusters",
        "_cluster_arr",
        "_cluster_off",
        "_next_cid",
        "_colcnt",
        "_rowcnt",
        "_bbox",
        "_bbox_dirty",
    )

    def __init__(self, states: Optional[StateTable] = None, capacity: int = 64,
                 arena: tuple[int, int, int, int] = (-8, -8, 8, 8)) -> None:
        self.states = states if states is not None else StateTable()
        self.revision = 0
        self.struct_rev = 0
        x0, y0, x1, y1 = arena
        self._x0, self._y0 = x0, y0
        self._grid = np.zeros((x1 - x0 + 1, y1 - y0 + 1), dtype=np.int32)
        self._px = np.zeros(capacity, dtype=np.int64)
        self._py = np.zeros(capacity, dtype=np.int64)
        self._st = np.zeros(capacity, dtype=np.int32)
        self._cl = np.zeros(capacity, dtype=np.int32)
        self._alive: list[int] = []
        self._slot: dict[int, int] = {}
        self._free: list[int] = []
        self._top = 0
        self._rigid: dict[int, set[int]] = {}
        self._flex: dict[int, set[int]] = {}
        self._clusters: dict[int, set[int]] = {}
        self._cluster_arr: dict[int, np.ndarray] = {}
        self._cluster_off: dict[int, tuple[int, int]] = {}
        self._next_cid = 1
        self._colcnt = np.zeros(self._grid.shape[0], dtype=np.int32)
        self._rowcnt = np.zeros(self._grid.shape[1], dtype=np.int32)
        self._bbox: Optional[tuple[int, int, int, int]] = None
        self._bbox_dirty = False

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def from_items(
        cls,
        monomers: Iterable[tuple[GridPoint, str]],
        bonds: Iterable[tuple[GridPoint, GridPoint, str]] = (),
        states: Optional[StateTable] = None,
    ) -> "Configuration":
        items = list(monomers)
        if items:
            xs = [p[0] for p, _ in items]
            ys = [p[1] for p, _ in items]
            arena = (min(xs) - 4, min(ys) - 4, max(xs) + 4, max(ys) + 4)
        else:
            arena = (-8, -8, 8, 8)
        c = cls(states=states, capacity=max(64, 2 * len(items)), arena=arena)
        for p, s in items:
            c.add_monomer(p, s)
        for p, q, b in bonds:
            c.set_bond(p, q, b)
        return c

    def copy(self) -> "Configuration":
        c = Configuration.__new__(Configuration)
        c.states = self.states
        c.revision = self.revision
        c.struct_rev = self.struct_rev
        c._x0, c._y0 = self._x0, self._y0
        c._grid = self._grid.copy()
        c._px = self._px.copy()
        c._py = self._py.copy()
        c._st = self._st.copy()
        c._cl = self._cl.copy()
        c._alive = list(self._alive)
        c._slot = dict(self._slot)
        c._free = list(self._free)
        c._top = self._top
        c._rigid = {k: set(v) for k, v in self._rigid.items()}
        c._flex = {k: set(v) for k, v in self._flex.items()}
        c._clusters = {k: set(v) for k, v in self._clusters.items()}
        c._cluster_arr = {}
        c._cluster_off = dict(self._cluster_off)
        c._next_cid = self._next_cid
        c._colcnt = self._colcnt.copy()
        c._rowcnt = self._rowcnt.copy()
        c._bbox = self._bbox
        c._bbox_dirty = self._bbox_dirty
        return c

    # ------------------------------------------------------------------
    # arena plumbing

    def _grow_arena(self, p: GridPoint) -> None:
        x, y = p
        nx0 = min(self._x0, x - 8)
        ny0 = min(self._y0, y - 8)
        nx1 = max(self._x0 + self._grid.shape[0] - 1, x + 8)
        ny1 = max(self._y0 + self._grid.shape[1] - 1, y + 8)
        g = np.zeros((nx1 - nx0 + 1, ny1 - ny0 + 1), dtype=np.int32)
        ox, oy = self._x0 - nx0, self._y0 - ny0
        g[ox : ox + self._grid.shape[0], oy : oy + self._grid.shape[1]] = self._grid
        cc = np.zeros(g.shape[0], dtype=np.int32)
        rc = np.zeros(g.shape[1], dtype=np.int32)
        cc[ox : ox + self._colcnt.shape[0]] = self._colcnt
        rc[oy : oy + self._rowcnt.shape[0]] = self._rowcnt
        self._grid, self._colcnt, self._rowcnt = g, cc, rc
        self._x0, self._y0 = nx0, ny0

    def _in_arena(self, x: int, y: int) -> bool:
        ix, iy = x - self._x0, y - self._y0
        return 0 <= ix < self._grid.shape[0] and 0 <= iy < self._grid.shape[1]

    def _in_core(self, x: int, y: int) -> bool:
        # occupied cells must keep a 2-cell margin from the arena edge so
        # vectorized neighbor gathers never index out of bounds
        ix, iy = x - self._x0, y - self._y0
        return 2 <= ix < self._grid.shape[0] - 2 and 2 <= iy < self._grid.shape[1] - 2

    def _grow_ids(self) -> None:
        n = len(self._px)
        for name in ("_px", "_py", "_st", "_cl"):
            arr = getattr(self, name)
            na = np.zeros(2 * n, dtype=arr.dtype)
            na[:n] = arr
            setattr(self, name, na)

    # ------------------------------------------------------------------
    # queries

    def id_at(self, p: GridPoint) -> int:
        """Monomer id at p, or -1."""
        x, y = p
        if not self._in_arena(x, y):
            return -1
        return int(self._grid[x - self._x0, y - self._y0]) - 1

    def occupied(self, p: GridPoint) -> bool:
        return self.id_at(p) >= 0

    def state_at(self, p: GridPoint) -> Optional[str]:
        i = self.id_at(p)
        return None if i < 0 else self.states.name(int(self._st[i]))

    def state_code_at(self, p: GridPoint) -> int:
        """State code at p; 0 when empty."""
        i = self.id_at(p)
        return 0 if i < 0 else int(self._st[i])

    def pos_of(self, i: int) -> GridPoint:
        return (int(self._px[i]), int(self._py[i]))

    def bond_at(self, p: GridPoint, q: GridPoint) -> Optional[str]:
        a, b = self.id_at(p), self.id_at(q)
        if a < 0 or b < 0:
            return None
        if b in self._rigid.get(a, ()):
            return "rigid"
        if b in self._flex.get(a, ()):
            return "flexible"
        return None

    def bond_code_between(self, a: int, b: int) -> int:
        if b in self._rigid.get(a, ()):
            return RIGID
        if b in self._flex.get(a, ()):
            return FLEXIBLE
        return NULL

    @property
    def monomer_count(self) -> int:
        return len(self._alive)

    def __len__(self) -> int:
        return len(self._alive)

    def positions(self) -> Iterator[GridPoint]:
        for i in self._alive:
            yield (int(self._px[i]), int(self._py[i]))

    def items(self) -> Iterator[tuple[GridPoint, str]]:
        for i in self._alive:
            yield (int(self._px[i]), int(self._py[i])), self.states.name(int(self._st[i]))

    def bonds_list(self) -> list[tuple[GridPoint, GridPoint, str]]:
        out = []
        for a in self._alive:
            pa = self.pos_of(a)
            for b in self._rigid.get(a, ()):
                if a < b:
                    out.append((pa, self.pos_of(b), "rigid"))
            for b in self._flex.get(a, ()):
                if a < b:
                    out.append((pa, self.pos_of(b), "flexible"))
        return out

    def flexible_pairs(self) -> Iterator[tuple[int, int]]:
        for a, partners in self._flex.items():
            for b in partners:
                if a < b:
                    yield (a, b)

    def cluster_of(self, i: int) -> int:
        return int(self._cl[i])

    def cluster_members(self, cid: int) -> set[int]:
        return self._clusters[cid]

    def cluster_ids(self) -> Iterable[int]:
        return self._clusters.keys()

    def cluster_array(self, cid: int) -> np.ndarray:
        arr = self._cluster_arr.get(cid)
        if arr is None:
            arr = np.fromiter(self._clusters[cid], dtype=np.int64)
            self._cluster_arr[cid] = arr
        return arr

    def cluster_offset(self, cid: int) -> tuple[int, int]:
        return self._cluster_off.get(cid, (0, 0))

    def alive_ids(self) -> list[int]:
        return self._alive

    # ------------------------------------------------------------------
    # mutation

    def add_monomer(self, p: GridPoint, state: str) -> int:
        if state == EMPTY:
            raise ValueError("a monomer state cannot be 'empty'")
        x, y = p
        if not self._in_core(x, y):
            self._grow_arena(p)
        ix, iy = x - self._x0, y - self._y0
        if self._grid[ix, iy]:
            raise ValueError(f"point {p} already occupied")
        if self._free:
            i = self._free.pop()
        else:
            i = self._top
            self._top += 1
            if i >= len(self._px):
                self._grow_ids()
        self._px[i], self._py[i] = x, y
        self._st[i] = self.states.code(state)
        self._grid[ix, iy] = i + 1
        self._slot[i] = len(self._alive)
        self._alive.append(i)
        cid = self._next_cid
        self._next_cid += 1
        self._cl[i] = cid
        self._clusters[cid] = {i}
        self._cluster_off[cid] = (0, 0)
        self._rigid[i] = set()
        self._flex[i] = set()
        self._colcnt[ix] += 1
        self._rowcnt[iy] += 1
        self._bbox_dirty = True
        self.revision += 1
        self.struct_rev += 1
        return i

    def remove_monomer(self, p: GridPoint) -> None:
        i = self.id_at(p)
        if i < 0:
            raise ValueError(f"no monomer at {p}")
        for b in list(self._rigid[i]):
            self._set_bond_ids(i, b, NULL)
        for b in list(self._flex[i]):
            self._set_bond_ids(i, b, NULL)
        x, y = int(self._px[i]), int(self._py[i])
        self._grid[x - self._x0, y - self._y0] = 0
        cid = int(self._cl[i])
        del self._clusters[cid]
        self._cluster_arr.pop(cid, None)
        self._cluster_off.pop(cid, None)
        del self._rigid[i]
        del self._flex[i]
        slot = self._slot.pop(i)
        last = self._alive.pop()
        if last != i:
            self._alive[slot] = last
            self._slot[last] = slot
        self._free.append(i)
        self._colcnt[x - self._x0] -= 1
        self._rowcnt[y - self._y0] -= 1
        self._bbox_dirty = True
        self.revision += 1
        self.struct_rev += 1

    def set_state(self, p: GridPoint, state: str) -> None:
        i = self.id_at(p)
        if i < 0:
            raise ValueError(f"no monomer at {p}")
        self._st[i] = self.states.code(state)
        self.revision += 1

    def set_bond(self, p: GridPoint, q: GridPoint, bond: Optional[str]) -> None:
        a, b = self.id_at(p), self.id_at(q)
        if a < 0 or b < 0:
            raise ValueError(f"bond endpoints must be occupied: {p}, {q}")
        if not is_adjacent(p, q):
            raise ValueError(f"bond endpoints not adjacent: {p}, {q}")
        self._set_bond_ids(a, b, bond_code(bond))

    def _set_bond_ids(self, a: int, b: int, code: int) -> None:
        old = self.bond_code_between(a, b)
        if old == code:
            return
        if old == RIGID:
            self._rigid[a].discard(b)
            self._rigid[b].discard(a)
        elif old == FLEXIBLE:
            self._flex[a].discard(b)
            self._flex[b].discard(a)
        if code == RIGID:
            self._rigid[a].add(b)
            self._rigid[b].add(a)
        elif code == FLEXIBLE:
            self._flex[a].add(b)
            self._flex[b].add(a)
        if old == RIGID or code == RIGID:
            if code == RIGID:
                self._merge_clusters(a, b)
            else:
                self._maybe_split(a, b)
        self.revision += 1
        self.struct_rev += 1

    # cluster maintenance -------------------------------------------------

    def _merge_clusters(self, a: int, b: int) -> None:
        ca, cb = int(self._cl[a]), int(self._cl[b])
        if ca == cb:
            return
        sa, sb = self._clusters[ca], self._clusters[cb]
        if len(sa) < len(sb):
            ca, cb = cb, ca
            sa, sb = sb, sa
        # relabel the smaller cluster cb into ca
        ids = np.fromiter(sb, dtype=np.int64)
        self._cl[ids] = ca
        sa.update(sb)
        del self._clusters[cb]
        self._cluster_arr.pop(ca, None)
        self._cluster_arr.pop(cb, None)
        self._cluster_off.pop(cb, None)

    def _maybe_split(self, a: int, b: int) -> None:
        """After removing a rigid bond a-b, split the cluster if disconnected."""
        # bidirectional BFS over rigid adjacency; cost O(min side)
        seen_a, seen_b = {a}, {b}
        frontier_a, frontier_b = [a], [b]
        while frontier_a and frontier_b:
            nfa = []
            for x in frontier_a:
                for y in self._rigid[x]:
                    if y in seen_b:
                        return  # still connected
                    if y not in seen_a:
                        seen_a.add(y)
                        nfa.append(y)
            frontier_a = nfa
            if not frontier_a:
                break
            nfb = []
            for x in frontier_b:
                for y in self._rigid[x]:
                    if y in seen_a:
                        return
                    if y not in seen_b:
                        seen_b.add(y)
                        nfb.append(y)
            frontier_b = nfb
        # disconnected: the exhausted side is complete and is the smaller one
        side = seen_a if not frontier_a else seen_b
        old_cid = int(self._cl[a])
        new_cid = self._next_cid
        self._next_cid += 1
        ids = np.fromiter(side, dtype=np.int64)
        self._cl[ids] = new_cid
        self._clusters[new_cid] = side
        big = self._clusters[old_cid]
        big.difference_update(side)
        self._cluster_arr.pop(old_cid, None)
        self._cluster_off[new_cid] = self._cluster_off.get(old_cid, (0, 0))

    # bulk translation ----------------------------------------------------

    def translate_ids(self, ids: np.ndarray, d: int, cluster_ids: Iterable[int] = ()) -> None:
        """Translate the monomers ``ids`` by direction ``d`` (no validity checks).

        The caller is responsible for ``ids`` being a valid agitation set.
        Cluster offsets for ``cluster_ids`` are bumped so closure-cache
        signatures track relative geometry.
        """
        vx, vy = DIR_VECS[d]
        xs = self._px[ids]
        ys = self._py[ids]
        nxs = xs + vx
        nys = ys + vy
        if len(nxs):
            mnx, mxx = int(nxs.min()), int(nxs.max())
            mny, mxy = int(nys.min()), int(nys.max())
            if not (self._in_core(mnx, mny) and self._in_core(mxx, mxy)):
                self._grow_arena((mnx, mny))
                self._grow_arena((mxx, mxy))
        gx0, gy0 = self._x0, self._y0
        self._grid[xs - gx0, ys - gy0] = 0
        self._grid[nxs - gx0, nys - gy0] = ids + 1
        self._px[ids] = nxs
        self._py[ids] = nys
        np.add.at(self._colcnt, xs - gx0, -1)
        np.add.at(self._colcnt, nxs - gx0, 1)
        np.add.at(self._rowcnt, ys - gy0, -1)
        np.add.at(self._rowcnt, nys - gy0, 1)
        for cid in cluster_ids:
            ox, oy = self._cluster_off.get(cid, (0, 0))
            self._cluster_off[cid] = (ox + vx, oy + vy)
        self._bbox_dirty = True
        self.revision += 1

    # bbox ------------------------------------------------------------------

    def bbox(self) -> tuple[int, int, int, int]:
        """(min_x, min_y, max_x, max_y) of occupied points; requires non-empty."""
        if not self._alive:
            raise ValueError("empty configuration has no bounding box")
        if self._bbox_dirty or self._bbox is None:
            cols = np.flatnonzero(self._colcnt)
            rows = np.flatnonzero(self._rowcnt)
            self._bbox = (
                int(cols[0]) + self._x0,
                int(rows[0]) + self._y0,
                int(cols[-1]) + self._x0,
                int(rows[-1]) + self._y0,
            )
            self._bbox_dirty = False
        return self._bbox

    # canonical form ----------------------------------------------------

    def canonical(self) -> tuple:
        """Translation-normalized (monomers, bonds) tuple for equality tests."""
        if not self._alive:
            return ((), ())
        x0, y0, _, _ = self.bbox()
        mono = tuple(
            sorted(((y - y0, x - x0, self.states.name(int(self._st[i])))
                    for i in self._alive
                    for x, y in ((int(self._px[i]), int(self._py[i])),)))
        )
        bonds = []
        for p, q, t in self.bonds_list():
            a = (p[1] - y0, p[0] - x0)
            b = (q[1] - y0, q[0] - x0)
            if b < a:
                a, b = b, a
            bonds.append((a, b, t))
        return (mono, tuple(sorted(bonds)))

    # integrity (used by audits/tests) -----------------------------------

    def check_invariants(self) -> None:
        seen = {}
        for i in self._alive:
            p = self.pos_of(i)
            assert self.id_at(p) == i
            assert p not in seen
            seen[p] = i
            assert int(self._st[i]) != 0
        for a in self._alive:
            pa = self.pos_of(a)
            for b in self._rigid[a]:
                assert a in self._rigid[b]
                assert hex_distance(pa, self.pos_of(b)) == 1
                assert self._cl[a] == self._cl[b]
            for b in self._flex[a]:
                assert a in self._flex[b]
                assert hex_distance(pa, self.pos_of(b)) == 1
        # cluster partition equals rigid components
        ids = set(self._alive)
        comp = {}
        for start in self._alive:
            if start in comp:
                continue
            stack = [start]
            comp[start] = start
            members = {start}
            while stack:
                x = stack.pop()
                for y in self._rigid[x]:
                    if y not in members:
                        members.add(y)
                        comp[y] = start
                        stack.append(y)
            cids = {int(self._cl[m]) for m in members}
            assert len(cids) == 1, f"cluster mismatch for component of {start}"
            assert self._clusters[cids.pop()] == members
        assert sum(len(m) for m in self._clusters.values()) == len(ids)


# --------------------------------------------------------------------------
# rule application on configurations


def rule_matches(c: Configuration, r: Rule, pA: GridPoint) -> bool:
    """True iff the rule's left side matches at anchor pA (the s1 site)."""
    vx, vy = DIR_VECS[r.u]
    pB = (pA[0] + vx, pA[1] + vy)
    sa = c.state_at(pA)
    sb = c.state_at(pB)
    if (sa if sa is not None else EMPTY) != r.s1:
        return False
    if (sb if sb is not None else EMPTY) != r.s2:
        return False
    if r.s1 == EMPTY or r.s2 == EMPTY:
        return r.b == "null"
    actual = c.bond_at(pA, pB)
    return (actual if actual is not None else "null") == r.b


class NotApplicable(Exception):
    pass


def apply_local_rule(c: Configuration, r: Rule, pA: GridPoint) -> Configuration:
    """Apply a local rule in place; returns the same configuration object."""
    if r.kind != "local":
        raise NotApplicable("movement rules are applied via the motion module")
    if not rule_matches(c, r, pA):
        raise NotApplicable(f"rule {r} does not match at {pA}")
    vx, vy = DIR_VECS[r.u]
    pB = (pA[0] + vx, pA[1] + vy)
    # clear any existing bond between the two sites first
    if r.s1 != EMPTY and r.s2 != EMPTY:
        c.set_bond(pA, pB, None)
    for p, old, new in ((pA, r.s1, r.s1p), (pB, r.s2, r.s2p)):
        if old == EMPTY and new != EMPTY:
            c.add_monomer(p, new)
        elif old != EMPTY and new == EMPTY:
            c.remove_monomer(p)
        elif old != EMPTY and new != EMPTY and old != new:
            c.set_state(p, new)
    if r.bp != "null":
        c.set_bond(pA, pB, r.bp)
    return c


def enumerate_applicable(c: Configuration, rules: list[Rule]) -> list[RuleInstance]:
    """All applicable rule placements, one instance per (rule, s1-site).

    Appearance rules (one side empty) are anchored at the non-empty side's
    monomer, so instances are found by scanning monomers only.
    """
    out = []
    for idx, r in enumerate(rules):
        if r.s1 != EMPTY:
            for p in list(c.positions()):
                if c.state_at(p) == r.s1 and rule_matches(c, r, p):
                    out.append(RuleInstance(idx, p))
        else:
            vx, vy = DIR_VECS[r.u]
            for p in list(c.positions()):
                if c.state_at(p) == r.s2:
                    pA = (p[0] - vx, p[1] - vy)
                    if rule_matches(c, r, pA):
                        out.append(RuleInstance(idx, pA))
    return out


def is_target(c: Configuration, t: Configuration) -> bool:
    """True iff c equals t up to translation (states and bonds included)."""
    if len(c) != len(t):
        return False
    if len(c) == 0:
        return True
    return c.canonical() == t.canonical()


def bounding_box(c: Configuration) -> tuple[int, int]:
    """Side lengths (l, w) of the minimal axis-aligned bounding rectangle."""
    x0, y0, x1, y1 = c.bbox()
    return (x1 - x0 + 1, y1 - y0 + 1)
