"""Synchronization of a monomer row in O(log m) expected time via agitation.

Construction sketch: every backbone monomer except the leftmost spawns a row
monomer above itself (rigid vertical bond, all in parallel).  Row monomers
join left-right with rigid bonds; once a monomer holds both horizontal
joins (end monomers: their single join) it flips its vertical bond to
flexible.  The row therefore becomes free to agitate left-right relative to
the backbone exactly when the last member is in place.  The row is one
shorter than the backbone and only the left shift is geometrically possible,
so the oscillation stays inside the m x 2 footprint.  Whenever the row sits
left-shifted, each row monomer is directly above a backbone monomer it has
no bond with; a rigid bond forms there at rate 1 per pair, so the first lock
lands in O(1/m) time, pins the row, and the remaining locks plus the
diagonal re-rigidification finish in O(log m), flipping every backbone
monomer to the synchronized state.
"""

from __future__ import annotations

from ..model import Configuration
from .common import ProgramSpec, R, RuleSetBuilder, TooSmall, count_states
from .verify import rigidly_connected

SYNCED = "synced"


def build_sync_rules() -> list:
    b = RuleSetBuilder()
    # 1. spawn the row (backbone cells except the leftmost; left-of-row and
    #    right-of-row cells spawn end-flavored monomers)
    b.add("bb_l2", "empty", "null", "+y", "bb_l2s", "syl_0", "rigid", "+y")
    b.add("bb_i", "empty", "null", "+y", "bb_is", "sy_00", "rigid", "+y")
    b.add("bb_r", "empty", "null", "+y", "bb_rs", "syr_0", "rigid", "+y")
    # m=2: two monomers synchronize by a single local exchange; a one-monomer
    # row would be free to orbit its flexible bond outside the m x 2 box
    b.add("bb_l", "bb_r2", "rigid", "+x", SYNCED, SYNCED, "rigid", "+x")
    # 2. horizontal joins; each join sets the left cell's right flag and the
    #    right cell's left flag
    for a in ("0", "1"):
        for c in ("0", "1"):
            b.add(f"sy_{a}0", f"sy_0{c}", "null", "+x", f"sy_{a}1", f"sy_1{c}", "rigid", "+x")
        b.add(f"sy_{a}0", "syr_0", "null", "+x", f"sy_{a}1", "syr_1", "rigid", "+x")
        b.add("syl_0", f"sy_0{a}", "null", "+x", "syl_1", f"sy_1{a}", "rigid", "+x")
    b.add("syl_0", "syr_0", "null", "+x", "syl_1", "syr_1", "rigid", "+x")
    # 3. vertical bond turns flexible once a cell is fully joined
    b.add("bb_is", "sy_11", "rigid", "+y", "bb_is", "syf", "flexible", "+y")
    b.add("bb_l2s", "syl_1", "rigid", "+y", "bb_l2s", "syf", "flexible", "+y")
    b.add("bb_rs", "syr_1", "rigid", "+y", "bb_rs", "syf", "flexible", "+y")
    # 4. lock: only matchable in the left-shifted alignment, where a free row
    #    monomer sits directly above a backbone monomer it is not bonded to
    for bb in ("bb_l", "bb_l2s", "bb_is"):
        b.add(bb, "syf", "null", "+y", SYNCED, "syk", "rigid", "+y")
    # 5. the tilted flexible bonds rigidify and carry the synchronized state
    #    to the backbone cells the locks missed (the rightmost one)
    for bb in ("bb_l2s", "bb_is", "bb_rs"):
        b.add("syk", bb, "flexible", "-w", "syk", SYNCED, "rigid", "-w")
    b.add("syk", SYNCED, "flexible", "-w", "syk", SYNCED, "rigid", "-w")
    return b.rules


def sync_program(m: int) -> ProgramSpec:
    if m < 2:
        raise TooSmall(f"synchronization needs a row of at least 2, got {m}")
    rules = build_sync_rules()

    def initial() -> Configuration:
        items = []
        for i in range(m):
            if i == 0:
                s = "bb_l"
            elif i == 1:
                s = "bb_r2" if m == 2 else "bb_l2"
            elif i == m - 1:
                s = "bb_r"
            else:
                s = "bb_i"
            items.append(((i, 0), s))
        bonds = [((i, 0), (i + 1, 0), "rigid") for i in range(m - 1)]
        return Configuration.from_items(items, bonds)

    target_count = 2 if m == 2 else 2 * m - 1

    def target(c: Configuration) -> bool:
        if len(c) != target_count:
            return False
        n_synced = sum(1 for _, s in c.items() if s == SYNCED)
        if n_synced != m:
            return False
        return rigidly_connected(c)

    return ProgramSpec(
        name="sync",
        size=m,
        rules=rules,
        initial=initial,
        target=target,
        space_bound=(m, 2),
        state_budget=count_states(rules, extra=("bb_l", "bb_r")),
        target_count=target_count,
    )
