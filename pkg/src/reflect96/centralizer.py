"""Simple-component sizes and dimensions of End_H1(V_10^{(x)k}).

Four independent routes to dim A_k are provided: square sums along the
Bratteli diagram, the multi-matrix component sizes, the closed dimension
formula, and the character average (1/|G|) sum_g |chi_10(g)|^(2k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bratteli import build_diagram, level_profile
from .characters import CharacterTable


class FormulaError(ArithmeticError):
    pass


class ResidueError(ValueError):
    pass


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise FormulaError(f"{what} evaluated to non-integer {x}")
    return int(x)


@dataclass(frozen=True)
class RecursionState:
    l: int
    d8: int
    d10: int
    d16: int


INITIAL_STATE = RecursionState(0, 0, 1, 0)


def step_recursion(s: RecursionState) -> RecursionState:
    """Advance from level 4l+1 to level 4(l+1)+1."""
    return RecursionState(
        s.l + 1,
        s.d8 + 5 * s.d10 + 5 * s.d16,
        5 * s.d8 + s.d10 + 5 * s.d16,
        5 * s.d8 + 5 * s.d10 + 11 * s.d16,
    )


def recursion_state(l: int) -> RecursionState:
    s = INITIAL_STATE
    for _ in range(l):
        s = step_recursion(s)
    return s


def intermediate_rows(s: RecursionState) -> dict[int, dict[int, int]]:
    """Levels 4l+1 .. 4(l+1)+1 from the state at level 4l+1, keyed by level."""
    d8, d10, d16 = s.d8, s.d10, s.d16
    r2 = {4: d8, 3: d10, 14: d8 + d16, 13: d10 + d16, 6: d16}
    r3 = {9: r2[4] + r2[14], 7: r2[3] + r2[13], 15: r2[14] + r2[13] + r2[6]}
    r4 = {1: r3[9], 2: r3[7], 11: r3[7] + r3[15], 12: r3[9] + r3[15], 5: r3[15]}
    r5 = {8: r4[2] + r4[11], 10: r4[1] + r4[12], 16: r4[11] + r4[12] + r4[5]}
    base = 4 * s.l + 1
    return {
        base: {8: d8, 10: d10, 16: d16},
        base + 1: r2,
        base + 2: r3,
        base + 3: r4,
        base + 4: r5,
    }


# label -> (k mod 4, coefficient of (-4)^l, constant, coefficient of 16^l)
# with l = (k - 1) // 4, i.e. k = 4l+1, 4l+2, 4l+3 or 4(l+1)
CLOSED_FORMS: dict[int, tuple[int, Fraction, Fraction, Fraction]] = {
    8: (1, Fraction(-1, 2), Fraction(1, 3), Fraction(1, 6)),
    10: (1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)),
    16: (1, Fraction(0), Fraction(-1, 3), Fraction(1, 3)),
    4: (2, Fraction(-1, 2), Fraction(1, 3), Fraction(1, 6)),
    3: (2, Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)),
    14: (2, Fraction(-1, 2), Fraction(0), Fraction(1, 2)),
    13: (2, Fraction(1, 2), Fraction(0), Fraction(1, 2)),
    6: (2, Fraction(0), Fraction(-1, 3), Fraction(1, 3)),
    9: (3, Fraction(-1), Fraction(1, 3), Fraction(2, 3)),
    7: (3, Fraction(1), Fraction(1, 3), Fraction(2, 3)),
    15: (3, Fraction(0), Fraction(-1, 3), Fraction(4, 3)),
    1: (0, Fraction(-1), Fraction(1, 3), Fraction(2, 3)),
    2: (0, Fraction(1), Fraction(1, 3), Fraction(2, 3)),
    11: (0, Fraction(1), Fraction(0), Fraction(2)),
    12: (0, Fraction(-1), Fraction(0), Fraction(2)),
    5: (0, Fraction(0), Fraction(-1, 3), Fraction(4, 3)),
}


def labels_at(k: int) -> list[int]:
    return [lab for lab, cf in CLOSED_FORMS.items() if cf[0] == k % 4]


def closed_form(i: int, k: int) -> int:
    if k < 1:
        raise ResidueError("levels start at 1")
    if i not in CLOSED_FORMS:
        raise ResidueError(f"no closed form for rho_{i}")
    residue, a, b, c = CLOSED_FORMS[i]
    if k % 4 != residue:
        raise ResidueError(f"rho_{i} occurs only at levels k = {residue} mod 4, not k = {k}")
    l = (k - 1) // 4
    return _integral(a * (-4) ** l + b + c * 16**l, f"closed form for d^({i})_{k}")


@dataclass(frozen=True)
class ComponentSizes:
    k: int
    sizes: dict[str, int]
    label_map: dict[str, int] = field(default_factory=dict)

    @property
    def parity(self) -> str:
        return "odd" if self.k % 2 else "even"

    @property
    def square_sum(self) -> int:
        return sum(v * v for v in self.sizes.values())

    def by_label(self) -> dict[int, int]:
        return {self.label_map[name]: v for name, v in self.sizes.items()}


def _theorem_values(k: int) -> dict[str, Fraction]:
    m = (k + 1) // 2 if k % 2 else k // 2
    p2 = Fraction(2) ** (m - 2)
    p4 = Fraction(4) ** (m - 2)
    out = {
        "d_plus": p2 + Fraction(1, 3) + 2 * p4 / 3,
        "d_minus": -p2 + Fraction(1, 3) + 2 * p4 / 3,
        "d_zero": Fraction(-1, 3) + Fraction(4) ** (m - 1) / 3,
    }
    if k % 2 == 0:
        out["e_plus"] = p2 + 2 * p4
        out["e_minus"] = -p2 + 2 * p4
    return out


def label_map(k: int) -> dict[str, int]:
    """Assign each named size to a rho-label by matching the closed forms.

    Closed forms with no (-4)^l term carry d_zero; those with a nonzero
    constant carry d_plus/d_minus, the others e_plus/e_minus.  The sign of
    the (-4)^l coefficient times (-1)^l picks plus or minus.
    """
    l = (k - 1) // 4
    parity = -1 if l % 2 else 1
    out = {}
    for lab in labels_at(k):
        _, a, b, _ = CLOSED_FORMS[lab]
        if a == 0:
            out["d_zero"] = lab
            continue
        family = "d" if b != 0 else "e"
        sign = "plus" if a * parity > 0 else "minus"
        out[f"{family}_{sign}"] = lab
    return out


def theorem_sizes(k: int) -> ComponentSizes:
    if k < 1:
        raise ValueError("k must be at least 1")
    values = _theorem_values(k)
    sizes = {name: _integral(v, f"{name}({k})") for name, v in values.items()}
    for name, v in sizes.items():
        if v < 0:
            raise FormulaError(f"{name}({k}) = {v} is negative")
    return ComponentSizes(k, sizes, label_map(k))


def dim_corollary(k: int) -> int:
    if k < 1:
        raise ValueError("k must be at least 1")
    value = Fraction(2) ** (k - 2) + Fraction(2) ** (2 * k - 3) / 3 + Fraction(1, 3)
    return _integral(value, f"dim A_{k}")


def dim_oeis_form(k: int) -> int:
    value = Fraction(3 * Fraction(2) ** (k - 2) + Fraction(2) ** (2 * k - 3) + 1, 3)
    return _integral(value, f"OEIS form at k={k}")


def dim_character_oracle(k: int, table: CharacterTable, label: int = 10) -> int:
    """(1/|G|) * sum over classes of size * |chi(C)|^(2k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    total = Fraction(0)
    for size, value in zip(table.class_sizes, table.row(label)):
        total += size * value.abs_sq().to_fraction() ** k
    return _integral(total / table.order, f"character average at k={k}")


def dims_report(max_k: int, table: CharacterTable, diagram=None) -> dict:
    diagram = diagram or build_diagram(max_k, table)
    rows = []
    ok = True
    for k in range(1, max_k + 1):
        comp = theorem_sizes(k)
        bratteli = level_profile(diagram, k).square_sum
        corollary = dim_corollary(k)
        oracle = dim_character_oracle(k, table)
        vertices = dict(diagram.levels[k - 1])
        by_label = {lab: v for lab, v in comp.by_label().items() if v}
        agree = (bratteli == comp.square_sum == corollary == oracle) and by_label == vertices
        ok &= agree
        rows.append({
            "k": k,
            "parity": comp.parity,
            "sizes": comp.sizes,
            "labels": {name: f"rho{lab}" for name, lab in comp.label_map.items()},
            "bratteli_square_sum": bratteli,
            "theorem_square_sum": comp.square_sum,
            "corollary": corollary,
            "character_oracle": oracle,
            "agree": agree,
        })
    return {"max_k": max_k, "all_agree": ok, "levels": rows}
