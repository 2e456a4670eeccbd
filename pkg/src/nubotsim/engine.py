"""Exact continuous-time stochastic simulation of nubot systems.

Semantics: every applicable transition has rate 1.  The transitions of a
configuration with M monomers are the applicable rule placements (movement
rules count twice, once per arm choice) plus the 6M agitations, one per
(monomer, direction) pair.  A step draws the holding time from
Exponential(k) by inverse CDF (``-log1p(-u)/k``) and picks a transition
uniformly; both use a single buffered uniform stream per simulation so runs
replay bit-exactly from their seed.

Performance model
-----------------
The applicability index is maintained incrementally: after a rule fires only
anchors near the two touched sites are revalidated; after a rigid-body slide
a vectorized pass compares each moved monomer's six neighbor-state
signatures before/after and revalidates just the anchors whose local view
changed (plus static anchors adjacent to content changes).  An audit mode
recomputes everything from scratch each step and asserts equality.

Agitation sets are computed at rigid-cluster granularity (all monomers of a
rigid cluster share one closure) and memoized keyed on the configuration's
structural revision plus the tuple of relative cluster offsets, so random
walks re-visiting the same relative geometry pay O(1) per event.  Agitations
whose set is the whole configuration are applied as a suppressed global
translation: model time advances and the event is traced, but coordinates do
not change - all observables (target equivalence, bounding box, snapshots)
are translation-invariant, so the simulated process on the
translation-quotient is exact.  For an effective agitation the smaller of
the set and its complement is translated (recording the implied global
offset), which keeps arenas small and slides cheap.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .grid import DIR_NAMES, DIR_VECS, GridPoint, negate_direction
from .model import (
    EMPTY,
    FLEXIBLE,
    NULL,
    RIGID,
    Configuration,
    Rule,
    RuleInstance,
    validate_rule,
)
from . import motion


class EngineError(Exception):
    pass


class Deadlock(EngineError):
    """No transitions exist (only possible for an empty configuration)."""


class LimitExceeded(EngineError):
    def __init__(self, result: "RunResult"):
        super().__init__(f"simulation limit hit after {result.steps} steps")
        self.result = result


class SpaceViolation(EngineError):
    def __init__(self, box: tuple[int, int], bound: tuple[int, int], result: "RunResult"):
        super().__init__(f"bounding box {box} exceeded monitor bound {bound}")
        self.box = box
        self.bound = bound
        self.result = result


@dataclass
class SimOptions:
    seed: int = 0
    max_time: Optional[float] = None
    max_steps: Optional[int] = None
    coalesce_noops: bool = False
    space_monitor: Optional[tuple[int, int]] = None
    record_trace: bool = False
    snapshot_every: Optional[int] = None
    audit: bool = False
    strict_movement: bool = False


@dataclass
class RunResult:
    config: Configuration
    elapsed: float
    steps: int
    target_reached: bool
    peak_box: tuple[int, int]
    stop_reason: str = "target"


# compiled rule entry: how an anchored monomer matches one rule
@dataclass(frozen=True)
class _Entry:
    rule: int
    role: str  # "A" (anchor is the s1 site) or "B" (s1 empty; anchor is s2)
    d: int  # direction from anchor to the other site
    partner: int  # required partner state code (0 = empty)
    bond: int  # required bond code between the pair
    movement: bool


class Simulation:
    """One mutable simulation instance: configuration + clock + RNG + index."""

    def __init__(self, config: Configuration, rules: list[Rule], options: SimOptions):
        for i, r in enumerate(rules):
            errs = validate_rule(r)
            if errs:
                raise ValueError(f"rule {i} invalid: {','.join(errs)} ({r})")
        self.config = config
        self.rules = rules
        self.options = options
        self.clock = 0.0
        self.steps = 0
        self.suppressed_offset = (0, 0)
        self.trajectory: list[tuple[float, dict, Optional[str]]] = []
        self.rng = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(options.seed))
        )
        self._u = self.rng.random(8192)
        self._ui = 0
        # compiled rules by anchor state code
        st = config.states
        self._by_state: dict[int, list[_Entry]] = {}
        self._rule_writes: list[tuple] = []
        for idx, r in enumerate(rules):
            mov = r.kind == "movement"
            from .model import bond_code

            bc = bond_code(r.b)
            if r.s1 != EMPTY:
                e = _Entry(idx, "A", r.u, st.code(r.s2) if r.s2 != EMPTY else 0, bc, mov)
                self._by_state.setdefault(st.code(r.s1), []).append(e)
            else:
                e = _Entry(idx, "B", negate_direction(r.u), 0, bc, mov)
                self._by_state.setdefault(st.code(r.s2), []).append(e)
        # applicability index
        self._local_keys: list[tuple[int, int]] = []
        self._local_pos: dict[tuple[int, int], int] = {}
        self._move_keys: list[tuple[int, int]] = []
        self._move_pos: dict[tuple[int, int], int] = {}
        self._keys_by_anchor: dict[int, set[tuple[int, int]]] = {}
        for aid in list(config.alive_ids()):
            self._reindex_anchor(aid)
        # closure cache
        self._cl_cache: dict = {}
        self._cache_rev = config.struct_rev
        # peak bbox tracking
        self._last_rev = -1
        self.peak_box = (0, 0)
        self._update_peak()

    # ------------------------------------------------------------------
    # uniform draws

    def _unif(self) -> float:
        i = self._ui
        if i >= len(self._u):
            self._u = self.rng.random(8192)
            i = 0
        self._ui = i + 1
        return float(self._u[i])

    # ------------------------------------------------------------------
    # applicability index

    def _entry_valid(self, e: _Entry, aid: int) -> bool:
        c = self.config
        x, y = int(c._px[aid]), int(c._py[aid])
        vx, vy = DIR_VECS[e.d]
        tid = c.id_at((x + vx, y + vy))
        if e.role == "A":
            if e.partner == 0:
                return tid < 0
            if tid < 0 or int(c._st[tid]) != e.partner:
                return False
            return c.bond_code_between(aid, tid) == e.bond
        else:  # appearance anchored on the s2 monomer; the s1 site must be empty
            return tid < 0

    def _reindex_anchor(self, aid: int) -> None:
        c = self.config
        entries = self._by_state.get(int(c._st[aid]))
        have = self._keys_by_anchor.get(aid)
        # remove keys whose entry no longer matches (state changed or invalid)
        if have:
            for key in list(have):
                idx = key[0]
                e = self._find_entry(idx, aid)
                if e is None or not self._entry_valid(e, aid):
                    self._index_remove(key)
        if not entries:
            return
        for e in entries:
            key = (e.rule, aid)
            if self._entry_valid(e, aid):
                self._index_add(key, e.movement)
            else:
                self._index_remove(key)

    def _find_entry(self, rule_idx: int, aid: int) -> Optional[_Entry]:
        entries = self._by_state.get(int(self.config._st[aid]))
        if entries:
            for e in entries:
                if e.rule == rule_idx:
                    return e
        return None

    def _index_add(self, key: tuple[int, int], movement: bool) -> None:
        pos_map, keys = (
            (self._move_pos, self._move_keys) if movement else (self._local_pos, self._local_keys)
        )
        if key in pos_map:
            return
        pos_map[key] = len(keys)
        keys.append(key)
        self._keys_by_anchor.setdefault(key[1], set()).add(key)

    def _index_remove(self, key: tuple[int, int]) -> None:
        for pos_map, keys in (
            (self._local_pos, self._local_keys),
            (self._move_pos, self._move_keys),
        ):
            i = pos_map.pop(key, None)
            if i is not None:
                last = keys.pop()
                if last != key:
                    keys[i] = last
                    pos_map[last] = i
                s = self._keys_by_anchor.get(key[1])
                if s is not None:
                    s.discard(key)
                return

    def _purge_anchor(self, aid: int) -> None:
        for key in list(self._keys_by_anchor.get(aid, ())):
            self._index_remove(key)
        self._keys_by_anchor.pop(aid, None)

    def _repair_cells(self, cells: set[GridPoint]) -> None:
        seen: set[int] = set()
        c = self.config
        for p in cells:
            for q in (p,) + tuple((p[0] + vx, p[1] + vy) for vx, vy in DIR_VECS):
                aid = c.id_at(q)
                if aid >= 0 and aid not in seen:
                    seen.add(aid)
                    self._reindex_anchor(aid)

    # ------------------------------------------------------------------
    # rates

    @property
    def k_rules(self) -> int:
        return len(self._local_keys) + 2 * len(self._move_keys)

    def total_rate(self) -> int:
        if len(self.config) == 0:
            raise Deadlock("empty configuration")
        return self.k_rules + 6 * len(self.config)

    # ------------------------------------------------------------------
    # cluster-level agitation closure

    def _signature(self) -> tuple:
        c = self.config
        return tuple(sorted((cid, c.cluster_offset(cid)) for cid in c.cluster_ids()))

    def _closure(self, cid0: int, d: int) -> tuple[frozenset[int], int, bool]:
        """(cluster ids in the agitation set, total monomers, is_whole)."""
        c = self.config
        if c.struct_rev != self._cache_rev:
            self._cl_cache.clear()
            self._cache_rev = c.struct_rev
        sig = self._signature()
        key = (sig, cid0, d)
        hit = self._cl_cache.get(key)
        if hit is not None:
            return hit
        vx, vy = DIR_VECS[d]
        seen = {cid0}
        frontier = [cid0]
        flex_pairs = list(c.flexible_pairs())
        while frontier:
            new: set[int] = set()
            for cid in frontier:
                ids = c.cluster_array(cid)
                xs = c._px[ids] + vx
                ys = c._py[ids] + vy
                occ = c._grid[xs - c._x0, ys - c._y0]
                occ = occ[occ != 0] - 1
                if len(occ):
                    for t in np.unique(c._cl[occ]):
                        t = int(t)
                        if t not in seen:
                            seen.add(t)
                            new.add(t)
            # flexible-bond dragging: a moved endpoint forces its partner
            # when the moved position would leave the partner's neighborhood
            for a, b in flex_pairs:
                ca, cb = c.cluster_of(a), c.cluster_of(b)
                if (ca in seen) == (cb in seen):
                    continue
                moved, still = (a, b) if ca in seen else (b, a)
                mx, my = c.pos_of(moved)
                sxy = c.pos_of(still)
                from .grid import hex_distance

                if hex_distance((mx + vx, my + vy), sxy) != 1:
                    t = c.cluster_of(still)
                    if t not in seen:
                        seen.add(t)
                        new.add(t)
            frontier = list(new)
        size = sum(len(c.cluster_members(cid)) for cid in seen)
        whole = size == len(c)
        out = (frozenset(seen), size, whole)
        self._cl_cache[key] = out
        return out

    # ------------------------------------------------------------------
    # event application

    def _fire_local(self, idx: int, aid: int) -> None:
        c = self.config
        r = self.rules[idx]
        if r.s1 != EMPTY:
            pA = c.pos_of(aid)
        else:
            vx, vy = DIR_VECS[r.u]
            p = c.pos_of(aid)
            pA = (p[0] - vx, p[1] - vy)
        vx, vy = DIR_VECS[r.u]
        pB = (pA[0] + vx, pA[1] + vy)
        ida = c.id_at(pA)
        idb = c.id_at(pB)
        if ida >= 0 and idb >= 0:
            c._set_bond_ids(ida, idb, NULL)
        for p, pid, old, neu in ((pA, ida, r.s1, r.s1p), (pB, idb, r.s2, r.s2p)):
            if old == EMPTY and neu != EMPTY:
                c.add_monomer(p, neu)
            elif old != EMPTY and neu == EMPTY:
                self._purge_anchor(pid)
                c.remove_monomer(p)
            elif old != neu:
                c.set_state(p, neu)
        if r.bp != "null":
            c.set_bond(pA, pB, r.bp)
        self._repair_cells({pA, pB})

    def _fire_agitation(self, aid: int, d: int) -> dict:
        c = self.config
        cid0 = c.cluster_of(aid)
        cids, size, whole = self._closure(cid0, d)
        if self.options.audit:
            got = {c.pos_of(i) for cid in cids for i in c.cluster_members(cid)}
            want = motion.agitation_set(c, c.pos_of(aid), d)
            assert got == want, f"closure drift at {c.pos_of(aid)} dir {d}"
        detail = {
            "monomer": list(c.pos_of(aid)),
            "dir": DIR_NAMES[d],
            "set_size": size,
        }
        if whole:
            vx, vy = DIR_VECS[d]
            ox, oy = self.suppressed_offset
            self.suppressed_offset = (ox + vx, oy + vy)
            detail["noop"] = True
            return detail
        detail["noop"] = False
        total = len(c)
        if 2 * size <= total:
            moved = cids
            dd = d
        else:
            moved = frozenset(c.cluster_ids()) - cids
            dd = negate_direction(d)
            vx, vy = DIR_VECS[d]
            ox, oy = self.suppressed_offset
            self.suppressed_offset = (ox + vx, oy + vy)
        self._apply_slide(moved, dd)
        return detail

    def _apply_slide(self, moved_cids: frozenset[int], d: int) -> None:
        c = self.config
        arrays = [c.cluster_array(cid) for cid in moved_cids]
        ids = arrays[0] if len(arrays) == 1 else np.concatenate(arrays)
        vx, vy = DIR_VECS[d]
        # pre-move neighbor-state signatures for moved monomers (6 dirs)
        xs = c._px[ids]
        ys = c._py[ids]
        pre = []
        stt = c._st
        grid = c._grid
        x0, y0 = c._x0, c._y0
        for wx, wy in DIR_VECS:
            occ = grid[xs + wx - x0, ys + wy - y0]
            sig = np.where(occ != 0, stt[occ - 1], 0)
            pre.append(sig)
        # content at destination cells before the move (for static-side repair)
        occ_dst = grid[xs + vx - x0, ys + vy - y0]
        pre_dst_state = np.where(occ_dst != 0, stt[occ_dst - 1], 0)
        c.translate_ids(ids, d, cluster_ids=moved_cids)
        grid = c._grid
        x0, y0 = c._x0, c._y0
        nxs = c._px[ids]
        nys = c._py[ids]
        changed = np.zeros(len(ids), dtype=bool)
        for j, (wx, wy) in enumerate(DIR_VECS):
            occ = grid[nxs + wx - x0, nys + wy - y0]
            sig = np.where(occ != 0, stt[occ - 1], 0)
            changed |= sig != pre[j]
        # moved anchors whose neighborhood view changed
        for aid in ids[changed]:
            self._reindex_anchor(int(aid))
        # cells whose content changed, as seen by static anchors:
        # vacated old cells and newly covered cells with a different state
        my_state = stt[ids]
        occ_old = grid[xs - x0, ys - y0]
        post_old_state = np.where(occ_old != 0, stt[occ_old - 1], 0)
        old_changed = post_old_state != my_state
        new_changed = pre_dst_state != my_state
        cells: set[GridPoint] = set()
        for j in np.flatnonzero(old_changed):
            cells.add((int(xs[j]), int(ys[j])))
        for j in np.flatnonzero(new_changed):
            cells.add((int(nxs[j]), int(nys[j])))
        if cells:
            seen: set[int] = set()
            moved_set = moved_cids
            for p in cells:
                for q in (p,) + tuple((p[0] + wx, p[1] + wy) for wx, wy in DIR_VECS):
                    qid = c.id_at(q)
                    if qid >= 0 and qid not in seen and c.cluster_of(qid) not in moved_set:
                        seen.add(qid)
                        self._reindex_anchor(qid)
        # flexible/rigid cross-bond anchors: bond-sensitive rules may flip
        for a, b in c.flexible_pairs():
            if (c.cluster_of(a) in moved_cids) != (c.cluster_of(b) in moved_cids):
                self._reindex_anchor(a)
                self._reindex_anchor(b)

    def _fire_movement(self, idx: int, aid: int, arm_choice: int) -> dict:
        c = self.config
        r = self.rules[idx]
        pA = c.pos_of(aid)
        vx, vy = DIR_VECS[r.u]
        pB = (pA[0] + vx, pA[1] + vy)
        arm = "s2" if arm_choice else "s1"
        detail = {"rule": idx, "anchor": list(pA), "arm": arm}
        try:
            motion.apply_movement_rule(c, r, pA, arm)
        except motion.Blocked:
            detail["blocked"] = True
            return detail
        detail["blocked"] = False
        # movement rules are an extension unused by the built-in programs;
        # rebuild the index outright rather than repairing incrementally
        self._rebuild_index()
        return detail

    def _rebuild_index(self) -> None:
        self._local_keys.clear()
        self._local_pos.clear()
        self._move_keys.clear()
        self._move_pos.clear()
        self._keys_by_anchor.clear()
        for aid in list(self.config.alive_ids()):
            self._reindex_anchor(aid)

    # ------------------------------------------------------------------
    # stepping

    def step(self) -> dict:
        """Advance by one transition; returns the trace detail record."""
        c = self.config
        m = len(c)
        k_rules = self.k_rules
        k = k_rules + 6 * m
        if k == 0:
            raise Deadlock("no transitions (empty configuration)")
        if self.options.strict_movement and self._move_keys:
            return self._step_strict()
        u_sel = self._unif()
        u_t = self._unif()
        dt = -math.log1p(-u_t) / k
        self.clock += dt
        self.steps += 1
        x = u_sel * k
        n_local = len(self._local_keys)
        if x < n_local:
            idx, aid = self._local_keys[int(x)]
            detail = {"kind": "rule", "rule": idx, "anchor": list(c.pos_of(aid))}
            if self.rules[idx].s1 == EMPTY:
                vx, vy = DIR_VECS[self.rules[idx].u]
                p = c.pos_of(aid)
                detail["anchor"] = [p[0] - vx, p[1] - vy]
            self._fire_local(idx, aid)
        elif x < k_rules:
            j = int(x - n_local)
            idx, aid = self._move_keys[j >> 1]
            detail = {"kind": "move"}
            detail.update(self._fire_movement(idx, aid, j & 1))
        else:
            a = x - k_rules
            s = int(a)
            slot, d = divmod(s, 6)
            aid = c.alive_ids()[slot]
            detail = {"kind": "agitation"}
            detail.update(self._fire_agitation(aid, d))
        self._after_event(detail)
        return detail

    def _step_strict(self) -> dict:
        """Literal movement semantics: blocked arm choices are excluded from k."""
        c = self.config
        arms = []
        for idx, aid in self._move_keys:
            r = self.rules[idx]
            pA = c.pos_of(aid)
            vx, vy = DIR_VECS[r.u]
            pB = (pA[0] + vx, pA[1] + vy)
            for arm, mover, base, v in (
                ("s1", pA, pB, (vx - DIR_VECS[r.up][0], vy - DIR_VECS[r.up][1])),
                ("s2", pB, pA, (DIR_VECS[r.up][0] - vx, DIR_VECS[r.up][1] - vy)),
            ):
                from .grid import vector_to_direction

                if motion.movable_set(c, mover, base, vector_to_direction(v)):
                    arms.append((idx, aid, 0 if arm == "s1" else 1))
        k = len(self._local_keys) + len(arms) + 6 * len(c)
        if k == 0:
            raise Deadlock("no transitions")
        u_sel = self._unif()
        u_t = self._unif()
        self.clock += -math.log1p(-u_t) / k
        self.steps += 1
        x = u_sel * k
        n_local = len(self._local_keys)
        if x < n_local:
            idx, aid = self._local_keys[int(x)]
            detail = {"kind": "rule", "rule": idx, "anchor": list(c.pos_of(aid))}
            self._fire_local(idx, aid)
        elif x < n_local + len(arms):
            idx, aid, armc = arms[int(x - n_local)]
            detail = {"kind": "move"}
            detail.update(self._fire_movement(idx, aid, armc))
        else:
            s = int(x - n_local - len(arms))
            slot, d = divmod(s, 6)
            aid = c.alive_ids()[slot]
            detail = {"kind": "agitation"}
            detail.update(self._fire_agitation(aid, d))
        self._after_event(detail)
        return detail

    def coalesced_step(self) -> dict:
        """Like step(), but whole-configuration agitations never materialize.

        The time to the next effective transition is Exponential(k_eff) and
        the choice is uniform over effective transitions; by memorylessness
        this equals the naive process on the translation-quotient.
        """
        c = self.config
        eff: list[tuple[int, int, int]] = []  # (cid, d, weight)
        k_eff = self.k_rules
        for cid in c.cluster_ids():
            for d in range(6):
                _, size, whole = self._closure(cid, d)
                if not whole:
                    members = len(c.cluster_members(cid))
                    eff.append((cid, d, members))
                    k_eff += members
        if k_eff == 0:
            if len(c) == 0:
                raise Deadlock("empty configuration")
            return {"kind": "quiescent"}
        u_sel = self._unif()
        u_t = self._unif()
        self.clock += -math.log1p(-u_t) / k_eff
        self.steps += 1
        x = u_sel * k_eff
        n_local = len(self._local_keys)
        if x < n_local:
            idx, aid = self._local_keys[int(x)]
            detail = {"kind": "rule", "rule": idx, "anchor": list(c.pos_of(aid))}
            self._fire_local(idx, aid)
        elif x < self.k_rules:
            j = int(x - n_local)
            idx, aid = self._move_keys[j >> 1]
            detail = {"kind": "move"}
            detail.update(self._fire_movement(idx, aid, j & 1))
        else:
            r = x - self.k_rules
            acc = 0.0
            chosen = None
            for cid, d, w in eff:
                acc += w
                if r < acc:
                    chosen = (cid, d, w, acc)
                    break
            assert chosen is not None
            cid, d, w, acc = chosen
            member_idx = int(w - (acc - r))  # uniform member of the cluster
            member_idx = min(member_idx, w - 1)
            aid = int(c.cluster_array(cid)[member_idx])
            detail = {"kind": "agitation"}
            detail.update(self._fire_agitation(aid, d))
        self._after_event(detail)
        return detail

    def _after_event(self, detail: dict) -> None:
        c = self.config
        if c.revision != self._last_rev:
            self._update_peak()
        if self.options.record_trace:
            snap = None
            every = self.options.snapshot_every
            if every and self.steps % every == 0:
                from .dsl import export_snapshot

                snap = export_snapshot(c)
            self.trajectory.append((self.clock, detail, snap))
        if self.options.audit:
            self._audit()

    def _update_peak(self) -> None:
        c = self.config
        self._last_rev = c.revision
        if len(c) == 0:
            return
        x0, y0, x1, y1 = c.bbox()
        box = (x1 - x0 + 1, y1 - y0 + 1)
        self.peak_box = (max(self.peak_box[0], box[0]), max(self.peak_box[1], box[1]))

    def _audit(self) -> None:
        from .model import enumerate_applicable

        c = self.config
        c.check_invariants()
        want: set[tuple[int, GridPoint]] = set()
        for inst in enumerate_applicable(c, self.rules):
            want.add((inst.rule, inst.anchor))
        have: set[tuple[int, GridPoint]] = set()
        for idx, aid in self._local_keys + self._move_keys:
            r = self.rules[idx]
            p = c.pos_of(aid)
            if r.s1 == EMPTY:
                vx, vy = DIR_VECS[r.u]
                p = (p[0] - vx, p[1] - vy)
            have.add((idx, p))
        assert have == want, f"index drift: extra={have - want} missing={want - have}"

    # ------------------------------------------------------------------
    # run loop

    def run(self, stop: Optional[Callable[[Configuration], bool]] = None) -> RunResult:
        opts = self.options
        if stop is None and opts.max_steps is None and opts.max_time is None:
            raise ValueError("need a stop predicate or a step/time limit")
        step = self.coalesced_step if opts.coalesce_noops else self.step
        check_rev = -1
        reached = stop is not None and stop(self.config)
        bound = opts.space_monitor
        while not reached:
            if opts.max_steps is not None and self.steps >= opts.max_steps:
                raise LimitExceeded(self._result(False, "max_steps"))
            if opts.max_time is not None and self.clock >= opts.max_time:
                raise LimitExceeded(self._result(False, "max_time"))
            detail = step()
            if detail.get("kind") == "quiescent":
                raise LimitExceeded(self._result(False, "quiescent"))
            if bound is not None and (
                self.peak_box[0] > bound[0] or self.peak_box[1] > bound[1]
            ):
                raise SpaceViolation(self.peak_box, bound, self._result(False, "space"))
            if stop is not None and self.config.revision != check_rev:
                check_rev = self.config.revision
                reached = stop(self.config)
        return self._result(True, "target")

    def _result(self, reached: bool, reason: str) -> RunResult:
        return RunResult(
            config=self.config,
            elapsed=self.clock,
            steps=self.steps,
            target_reached=reached,
            peak_box=self.peak_box,
            stop_reason=reason,
        )

    def trace_lines(self) -> list[str]:
        out = []
        for t, detail, snap in self.trajectory:
            rec = {"t": t}
            rec.update(detail)
            out.append(json.dumps(rec, sort_keys=True))
            if snap is not None:
                out.append(json.dumps({"t": t, "kind": "snapshot", "data": snap}, sort_keys=True))
        return out


# --------------------------------------------------------------------------
# spec-facing wrappers


def total_rate(sim: Simulation) -> int:
    return sim.total_rate()


def step(sim: Simulation) -> Simulation:
    sim.step()
    return sim


def coalesced_step(sim: Simulation) -> Simulation:
    sim.coalesced_step()
    return sim


def run(sim: Simulation, stop: Optional[Callable[[Configuration], bool]] = None) -> RunResult:
    return sim.run(stop)
