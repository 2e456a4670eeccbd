"""Rule-set DSL, configuration text format, and canonical snapshots.

Rule grammar (one rule per line, ``#`` starts a comment):

    rule := term "," term "," bond "," dir "->" term "," term "," bond "," dir
    term := IDENT | "empty"
    bond := "rigid" | "flexible" | "null"
    dir  := "+x" | "-x" | "+y" | "-y" | "+w" | "-w"

Identifiers are ``[A-Za-z_][A-Za-z0-9_]*``; ``empty`` is reserved.  Semantic
violations (rule invariants) are reported as diagnostics with positions, and
parsing continues so all errors in a file surface at once.

Configuration files use one record per line:

    monomer <x> <y> <state>
    bond <x1> <y1> <x2> <y2> rigid|flexible

Snapshots are canonical: the minimum occupied point is translated to (0,0),
monomer lines are sorted by (y, x) and bond lines lexicographically, so
configurations equal up to translation export byte-identically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .grid import direction_name, hex_distance, parse_direction
from .model import Configuration, Rule, validate_rule

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_BONDS = ("rigid", "flexible", "null")


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int  # 1-based
    column: int  # 1-based
    message: str
    token: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message} (at {self.token!r})"


class ParseError(Exception):
    def __init__(self, diagnostics: list[ParseDiagnostic]):
        super().__init__("; ".join(str(d) for d in diagnostics))
        self.diagnostics = diagnostics


def _tokenize_rule_line(text: str) -> list[tuple[str, int]]:
    """Split on '->' and commas, keeping 1-based column positions."""
    out = []
    pos = 0
    for part in re.split(r"(->|,)", text):
        if part not in ("->", ","):
            stripped = part.strip()
            col = pos + len(part) - len(part.lstrip()) + 1
            out.append((stripped, col))
        else:
            out.append((part, pos + 1))
        pos += len(part)
    return out


def parse_ruleset(text: str) -> tuple[list[Rule], list[ParseDiagnostic]]:
    """Parse a rule file; returns (rules, diagnostics).

    Rules from well-formed lines are returned even when other lines carry
    errors; callers decide whether diagnostics are fatal.
    """
    rules: list[Rule] = []
    diags: list[ParseDiagnostic] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "->" not in line:
            diags.append(ParseDiagnostic(lineno, 1, "missing '->'", line.strip()))
            continue
        lhs_text, rhs_text = line.split("->", 1)
        arrow_col = len(lhs_text) + 1
        sides = []
        bad = False
        for side_text, base in ((lhs_text, 0), (rhs_text, arrow_col + 2 - 1)):
            parts = side_text.split(",")
            if len(parts) != 4:
                diags.append(
                    ParseDiagnostic(
                        lineno, base + 1, f"expected 4 fields, got {len(parts)}", side_text.strip()
                    )
                )
                bad = True
                break
            cols = []
            pos = base
            for part in parts:
                tok = part.strip()
                col = pos + len(part) - len(part.lstrip()) + 1
                cols.append((tok, col))
                pos += len(part) + 1
            sides.append(cols)
        if bad:
            continue
        (s1, c1), (s2, c2), (b, cb), (u, cu) = sides[0]
        (s1p, c1p), (s2p, c2p), (bp, cbp), (up, cup) = sides[1]
        ok = True
        for tok, col in ((s1, c1), (s2, c2), (s1p, c1p), (s2p, c2p)):
            if tok != "empty" and not _IDENT.match(tok):
                diags.append(ParseDiagnostic(lineno, col, "bad state identifier", tok))
                ok = False
        for tok, col in ((b, cb), (bp, cbp)):
            if tok not in _BONDS:
                diags.append(ParseDiagnostic(lineno, col, "bad bond type", tok))
                ok = False
        dirs = []
        for tok, col in ((u, cu), (up, cup)):
            try:
                dirs.append(parse_direction(tok))
            except ValueError:
                diags.append(ParseDiagnostic(lineno, col, "bad direction", tok))
                ok = False
        if not ok:
            continue
        rule = Rule(s1, s2, b, dirs[0], s1p, s2p, bp, dirs[1])
        errors = validate_rule(rule)
        if errors:
            # report at the most relevant token: bond errors at the bond,
            # others at the start of the line
            for err in errors:
                col = cb if err == "BondToEmpty" else c1
                diags.append(ParseDiagnostic(lineno, col, err, b if err == "BondToEmpty" else s1))
            continue
        rules.append(rule)
    return rules, diags


def print_ruleset(rules: list[Rule]) -> str:
    return "\n".join(str(r) for r in rules) + ("\n" if rules else "")


def parse_configuration(text: str) -> tuple[Configuration, list[ParseDiagnostic]]:
    monomers: list[tuple[tuple[int, int], str]] = []
    seen: dict[tuple[int, int], int] = {}
    bonds: list[tuple[tuple[int, int], tuple[int, int], str]] = []
    diags: list[ParseDiagnostic] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "monomer":
            if len(parts) != 4:
                diags.append(ParseDiagnostic(lineno, 1, "monomer needs: x y state", line.strip()))
                continue
            try:
                x, y = int(parts[1]), int(parts[2])
            except ValueError:
                diags.append(ParseDiagnostic(lineno, 1, "bad coordinates", line.strip()))
                continue
            state = parts[3]
            if state == "empty" or not _IDENT.match(state):
                diags.append(ParseDiagnostic(lineno, 1, "bad state identifier", state))
                continue
            if (x, y) in seen:
                diags.append(ParseDiagnostic(lineno, 1, "DuplicatePosition", f"({x}, {y})"))
                continue
            seen[(x, y)] = lineno
            monomers.append(((x, y), state))
        elif kind == "bond":
            if len(parts) != 6 or parts[5] not in ("rigid", "flexible"):
                diags.append(
                    ParseDiagnostic(lineno, 1, "bond needs: x1 y1 x2 y2 rigid|flexible", line.strip())
                )
                continue
            try:
                p = (int(parts[1]), int(parts[2]))
                q = (int(parts[3]), int(parts[4]))
            except ValueError:
                diags.append(ParseDiagnostic(lineno, 1, "bad coordinates", line.strip()))
                continue
            if hex_distance(p, q) != 1:
                diags.append(ParseDiagnostic(lineno, 1, "BondNotAdjacent", f"{p}-{q}"))
                continue
            bonds.append((lineno, p, q, parts[5]))
        else:
            diags.append(ParseDiagnostic(lineno, 1, "unknown record", kind))
    config = Configuration.from_items(monomers)
    occupied = {p for p, _ in monomers}
    for lineno, p, q, b in bonds:
        if p not in occupied or q not in occupied:
            diags.append(ParseDiagnostic(lineno, 1, "BondToMissing", f"{p}-{q}"))
            continue
        config.set_bond(p, q, b)
    return config, diags


def export_snapshot(c: Configuration) -> str:
    """Canonical textual snapshot (translation-normalized, sorted)."""
    if len(c) == 0:
        return ""
    x0, y0, _, _ = c.bbox()
    mono = sorted(((y - y0, x - x0, s) for (x, y), s in c.items()))
    lines = [f"monomer {x} {y} {s}" for (y, x, s) in mono]
    bonds = []
    for p, q, t in c.bonds_list():
        a = (p[0] - x0, p[1] - y0)
        b = (q[0] - x0, q[1] - y0)
        if (b[1], b[0]) < (a[1], a[0]):
            a, b = b, a
        bonds.append(f"bond {a[0]} {a[1]} {b[0]} {b[1]} {t}")
    lines.extend(sorted(bonds))
    return "\n".join(lines) + "\n"
