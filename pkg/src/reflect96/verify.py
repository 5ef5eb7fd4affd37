"""End-to-end verification of every published H1 value; backs ``verify-all``."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import reference
from .bratteli import build_diagram, count_paths, export, level_profile, multiplicity
from .centralizer import (
    closed_form, dim_character_oracle, dim_corollary, labels_at, recursion_state,
    theorem_sizes,
)
from .characters import (
    build_table, column_orthogonality, decompose, decompose_inner, nonzero, product,
    row_orthogonality, table_to_csv,
)
from .codes import (
    doubly_even_matrix, eisenstein_e4, extended_hamming, h1_invariance, is_doubly_even,
    is_invariant_under, is_self_dual, macwilliams_matrix, modular_map, weight_enumerator,
)
from .invariants import molien_series, product_series, verify_degree_claims
from .irreps import (
    RHO5_BASIS_NOTE, RHO15_D_LABEL_NOTE, build_all, image_order, printed_matrices,
)
from .matgroup import CLASS_ORDERS, H1, align_to_published, conjugacy_classes, h1_group


@dataclass
class Check:
    id: int
    name: str
    passed: bool = True
    details: list[str] = field(default_factory=list)

    def expect(self, ok: bool, message: str) -> None:
        if not ok:
            self.passed = False
            self.details.append(message)

    def to_json(self) -> dict:
        return {"id": self.id, "name": self.name, "passed": self.passed, "failures": self.details}


def _fresh_h1() -> H1:
    g = h1_group()
    return H1(g, align_to_published(g, conjugacy_classes(g)))


def check_group(h: H1) -> Check:
    c = Check(1, "group closure, classes, alignment, order row")
    c.expect(len(h.group) == 96, f"group order {len(h.group)}")
    c.expect(len(h.classes) == 16, f"{len(h.classes)} classes")
    c.expect(sum(h.class_sizes) == 96, "class sizes do not sum to 96")
    c.expect(h.order_row == CLASS_ORDERS, f"order row {h.order_row}")
    return c


def check_irreps(irreps) -> Check:
    c = Check(2, "irreducible representations and printed matrices")
    c.expect(sorted(irreps) == list(range(1, 17)), "labels are not 1..16")
    printed = printed_matrices()
    actual = {
        "rho13_T": irreps[13].image_T, "rho13_D": irreps[13].image_D,
        "rho15_T": irreps[15].image_T, "rho15_D": irreps[15].image_D,
        "rho5_T": irreps[5].image_T, "rho5_D": irreps[5].image_D,
    }
    for name, m in printed.items():
        c.expect(actual[name] == m, f"{name} differs from the printed matrix")
    for lab, r in irreps.items():
        c.expect(r.norm() == 1, f"<chi{lab}, chi{lab}> = {r.norm()}")
    c.expect(sum(r.dim**2 for r in irreps.values()) == 96, "dimension square sum is not 96")
    return c


def check_table(table) -> Check:
    c = Check(3, "character table equals the published table; orthogonality")
    for i, lab in enumerate(table.labels):
        for k in range(16):
            got = table.X[i, k]
            want = reference.CHARACTER_TABLE[lab - 1][k]
            c.expect(got == want, f"chi{lab}(C{k + 1}) = {got}, published {want}")
    c.expect(row_orthogonality(table), "row orthogonality fails")
    c.expect(column_orthogonality(table), "column orthogonality fails")
    return c


def check_products(table) -> Check:
    c = Check(4, "chi10 * chi_j decompositions by both routes")
    chi10 = table.row(10)
    for j in range(1, 17):
        k = product(chi10, table.row(j))
        a = nonzero(decompose(k, table))
        b = nonzero(decompose_inner(k, table))
        c.expect(a == b, f"j={j}: inverse-matrix {a} vs inner-product {b}")
        c.expect(a == reference.NATURAL_PRODUCTS[j], f"j={j}: {a}, published {reference.NATURAL_PRODUCTS[j]}")
    return c


def check_diagram(diagram) -> Check:
    c = Check(5, "Bratteli levels 1-9 and square sums")
    for k in range(1, 10):
        c.expect(diagram.levels[k - 1] == reference.DIAGRAM_LEVELS[k - 1],
                 f"level {k}: {diagram.levels[k - 1]}")
        ss = level_profile(diagram, k).square_sum
        c.expect(ss == reference.SQUARE_SUMS[k - 1], f"level {k} square sum {ss}")
        for i in range(1, 17):
            c.expect(count_paths(diagram, i, k) == multiplicity(diagram, i, k),
                     f"path count mismatch for rho{i} at level {k}")
    return c


def check_dimensions(table, diagram, max_k: int = 20) -> Check:
    c = Check(6, f"four-way dimension agreement and closed forms, k <= {max_k}")
    for k in range(1, max_k + 1):
        comp = theorem_sizes(k)
        values = (level_profile(diagram, k).square_sum, comp.square_sum, dim_corollary(k),
                  dim_character_oracle(k, table))
        c.expect(len(set(values)) == 1, f"k={k}: bratteli/theorem/corollary/oracle = {values}")
        by_label = {lab: v for lab, v in comp.by_label().items() if v}
        c.expect(by_label == diagram.levels[k - 1], f"k={k}: theorem sizes {by_label}")
        for i in labels_at(k):
            c.expect(closed_form(i, k) == multiplicity(diagram, i, k),
                     f"closed form d^({i})_{k} = {closed_form(i, k)}")
    for l in range(0, (max_k - 1) // 4 + 1):
        s = recursion_state(l)
        k = 4 * l + 1
        got = (multiplicity(diagram, 8, k), multiplicity(diagram, 10, k), multiplicity(diagram, 16, k))
        c.expect((s.d8, s.d10, s.d16) == got, f"recursion at level {k}: {(s.d8, s.d10, s.d16)} vs {got}")
    return c


def check_molien(irreps, order: int = 40) -> Check:
    c = Check(7, "Molien series and image orders")
    s10 = molien_series(irreps[10], order)
    c.expect(s10 == product_series([8, 12], order), "rho10 series differs from 1/((1-t^8)(1-t^12))")
    c.expect(s10[8] == 1, f"rho10 t^8 coefficient {s10[8]}")
    c.expect(molien_series(irreps[5], order) == product_series([2, 3], order),
             "rho5 series differs from 1/((1-t^2)(1-t^3))")
    series = [molien_series(irreps[lab], order) for lab in (7, 8, 9)] + [s10]
    c.expect(all(s == series[0] for s in series), "rho7..rho10 series differ")
    orders = tuple(image_order(irreps[lab]) for lab in range(1, 17))
    c.expect(orders == reference.IMAGE_ORDERS, f"image orders {orders}")
    return c


def check_codes(h: H1) -> Check:
    c = Check(8, "e8 enumerator, predicates, invariance")
    code = extended_hamming()
    w = weight_enumerator(code)
    c.expect(w.counts == {0: 1, 4: 14, 8: 1}, f"enumerator {w}")
    c.expect(is_self_dual(code), "e8 not self-dual")
    c.expect(is_doubly_even(code), "e8 not doubly even")
    c.expect(is_invariant_under(w, macwilliams_matrix()), "not fixed by (x-y)/sqrt2, (x+y)/sqrt2")
    c.expect(is_invariant_under(w, doubly_even_matrix()), "not fixed by (x, iy)")
    c.expect(h1_invariance(w, h.group), "not fixed by every element of H1")
    return c


def check_modular(order: int = 10) -> Check:
    c = Check(9, "theta map of W_e8 equals E4")
    s = modular_map(weight_enumerator(extended_hamming()), order)
    c.expect(s.has_integer_exponents(), "fractional exponents survive")
    if s.has_integer_exponents():
        got = [int(x) for x in s.integer_coefficients()]
        c.expect(got == eisenstein_e4(order), f"coefficients {got}")
    return c


def _render_once() -> bytes:
    h = _fresh_h1()
    table = build_table(build_all(h), h)
    d = build_diagram(9, table)
    return export(d, "json") + export(d, "dot") + table_to_csv(table).encode()


def check_determinism() -> Check:
    c = Check(10, "byte-identical exports across rebuilds")
    c.expect(_render_once() == _render_once(), "bratteli/chartab output differs between runs")
    return c


def notes() -> list[str]:
    return [
        RHO15_D_LABEL_NOTE,
        RHO5_BASIS_NOTE,
        reference.BARE_CHI_NOTE,
        "Image orders are matched to labels by reading each dimension block in index order.",
    ]


def verify_all() -> dict:
    h = _fresh_h1()
    irreps = build_all(h)
    table = build_table(irreps, h)
    diagram = build_diagram(20, table)
    checks = [
        check_group(h),
        check_irreps(irreps),
        check_table(table),
        check_products(table),
        check_diagram(diagram),
        check_dimensions(table, diagram),
        check_molien(irreps),
        check_codes(h),
        check_modular(),
        check_determinism(),
    ]
    return {
        "passed": all(c.passed for c in checks),
        "criteria": [c.to_json() for c in checks],
        "findings": verify_degree_claims(irreps)["findings"],
        "notes": notes(),
    }
