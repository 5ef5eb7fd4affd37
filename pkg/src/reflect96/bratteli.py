"""Bratteli diagram of the tensor powers of the natural representation."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .characters import CharacterTable, decompose, nonzero, product

TOP_LABEL = 10


class LevelRangeError(IndexError):
    pass


class UnknownFormatError(ValueError):
    pass


@dataclass(frozen=True)
class LevelProfile:
    k: int
    entries: tuple[tuple[int, int], ...]
    square_sum: int


@dataclass
class BratteliDiagram:
    levels: list[dict[int, int]]
    # parent label -> {child label: edge multiplicity}
    rules: dict[int, dict[int, int]]

    @property
    def max_level(self) -> int:
        return len(self.levels)

    def edges(self, k: int) -> list[tuple[int, int, int]]:
        """(parent, child, multiplicity) between level k and level k+1."""
        if not 1 <= k < self.max_level:
            raise LevelRangeError(f"no edges below level {k}")
        out = []
        for parent in self.levels[k - 1]:
            for child, m in self.rules[parent].items():
                out.append((parent, child, m))
        return out


def natural_rules(table: CharacterTable, top: int = TOP_LABEL) -> dict[int, dict[int, int]]:
    chi = table.row(top)
    return {j: nonzero(decompose(product(chi, table.row(j)), table)) for j in table.labels}


def build_diagram(max_level: int, table: CharacterTable) -> BratteliDiagram:
    if max_level < 1:
        raise LevelRangeError("max_level must be at least 1")
    rules = natural_rules(table)
    levels = [{TOP_LABEL: 1}]
    for _ in range(max_level - 1):
        nxt: dict[int, int] = {}
        for parent, d in levels[-1].items():
            for child, m in rules[parent].items():
                nxt[child] = nxt.get(child, 0) + m * d
        levels.append({c: v for c, v in nxt.items() if v})
    return BratteliDiagram(levels, rules)


def _check_level(d: BratteliDiagram, k: int) -> None:
    if not 1 <= k <= d.max_level:
        raise LevelRangeError(f"level {k} outside 1..{d.max_level}")


def multiplicity(d: BratteliDiagram, i: int, k: int) -> int:
    _check_level(d, k)
    return d.levels[k - 1].get(i, 0)


def level_profile(d: BratteliDiagram, k: int) -> LevelProfile:
    _check_level(d, k)
    level = d.levels[k - 1]
    entries = tuple(sorted(level.items()))
    return LevelProfile(k, entries, sum(v * v for v in level.values()))


def count_paths(d: BratteliDiagram, i: int, k: int) -> int:
    """Number of paths from the top vertex to (rho_i, level k), by explicit walk."""
    _check_level(d, k)
    count = 0
    stack = [(TOP_LABEL, 1)]
    while stack:
        label, level = stack.pop()
        if level == k:
            count += label == i
            continue
        for child, m in d.rules[label].items():
            for _ in range(m):
                stack.append((child, level + 1))
    return count


def to_json(d: BratteliDiagram) -> dict:
    edges = sorted({(p, c) for k in range(1, d.max_level) for p, c, _ in d.edges(k)})
    return {
        "levels": [
            {
                "k": k,
                "vertices": [{"rho": rho, "mult": m} for rho, m in p.entries],
                "square_sum": p.square_sum,
            }
            for k in range(1, d.max_level + 1)
            for p in [level_profile(d, k)]
        ],
        "edges": [{"from_rho": p, "to_rho": c} for p, c in edges],
    }


def to_dot(d: BratteliDiagram) -> str:
    lines = ["digraph bratteli {", "  rankdir=TB;", "  node [shape=plaintext];"]
    for k in range(1, d.max_level + 1):
        lines.append(f"  subgraph level{k} {{")
        lines.append("    rank=same;")
        for rho, m in sorted(d.levels[k - 1].items()):
            lines.append(f'    L{k}_rho{rho} [label="rho_{rho}:{m}"];')
        lines.append("  }")
    for k in range(1, d.max_level):
        for p, c, m in sorted(d.edges(k)):
            attr = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  L{k}_rho{p} -> L{k + 1}_rho{c}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(d: BratteliDiagram, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(to_json(d), indent=2) + "\n").encode()
    if fmt == "dot":
        return to_dot(d).encode()
    raise UnknownFormatError(f"unknown diagram format {fmt!r}; use dot or json")
