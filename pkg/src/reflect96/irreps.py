"""The sixteen irreducible representations of H1, built from explicit bases."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .exact import I, ONE, ZERO, Cyc8
from .linalg import InconsistentSystemError, Matrix, kron, restrict
from .matgroup import H1, generate_group, h1

# orders of rho_i(H1) for i = 1..16, reading each dimension block in index order
IMAGE_ORDERS = (1, 2, 4, 4, 6, 12, 96, 96, 96, 96, 24, 24, 48, 48, 96, 96)

# the rho_15 D-image appears in print under the rho_13 label
RHO15_D_LABEL_NOTE = (
    "The D-image diag(1, i, -1, -i) of the four-dimensional construction is printed "
    "under the label rho_13(D); it is read as rho_15(D), since rho_13 is three-dimensional."
)


class ConstructionError(RuntimeError):
    pass


@dataclass
class Irrep:
    label: int
    image_T: Matrix
    image_D: Matrix
    h: H1 = field(repr=False)

    @property
    def dim(self) -> int:
        return self.image_T.rows

    @cached_property
    def images(self) -> list[Matrix]:
        return self.h.group.realize([self.image_T, self.image_D])

    def image(self, element: int) -> Matrix:
        return self.images[element]

    @cached_property
    def character(self) -> tuple[Cyc8, ...]:
        return tuple(self.images[c.representative].trace() for c in self.h.classes)

    def character_of(self, element: int) -> Cyc8:
        return self.images[element].trace()

    def norm(self) -> Cyc8:
        return character_inner(self.character, self.character, self.h.class_sizes)

    def equivalent(self, other: Irrep) -> bool:
        return self.character == other.character


def character_inner(chi, psi, class_sizes) -> Cyc8:
    total = ZERO
    for s, a, b in zip(class_sizes, chi, psi):
        total = total + a * b.conj() * s
    return total / sum(class_sizes)


def _basis(dim: int, vectors: list[dict]) -> Matrix:
    """Columns from sparse rational combinations of standard basis vectors."""
    cols = [[v.get(r, 0) for r in range(dim)] for v in vectors]
    return Matrix(dim, len(vectors), [cols[c][r] for r in range(dim) for c in range(len(vectors))])


def tensor(a: Irrep, b: Irrep, label: int = 0) -> Irrep:
    return Irrep(label, kron(a.image_T, b.image_T), kron(a.image_D, b.image_D), a.h)


def sub_representation(source: Irrep, vectors: list[dict], label: int) -> Irrep:
    basis = _basis(source.dim, vectors)
    try:
        t = restrict(source.image_T, basis)
        d = restrict(source.image_D, basis)
    except InconsistentSystemError as exc:
        raise ConstructionError(f"span for rho_{label} is not invariant") from exc
    return Irrep(label, t, d, source.h)


def twist(base: Irrep, by: Irrep, label: int = 0) -> Irrep:
    if by.dim != 1:
        raise ValueError("twisting needs a one-dimensional representation")
    return Irrep(label, base.image_T * by.image_T[0, 0], base.image_D * by.image_D[0, 0], base.h)


def build_one_dim(h: H1 | None = None) -> dict[int, Irrep]:
    h = h or h1()
    T, D = h.group.generators
    rho1 = Irrep(1, Matrix.scalar(ONE), Matrix.scalar(ONE), h)
    rho3 = Irrep(3, Matrix.scalar(T.det()), Matrix.scalar(D.det()), h)
    rho2 = twist(rho3, rho3, 2)
    rho4 = twist(rho2, rho3, 4)
    return {1: rho1, 2: rho2, 3: rho3, 4: rho4}


def natural(h: H1 | None = None) -> Irrep:
    h = h or h1()
    T, D = h.group.generators
    return Irrep(10, T, D, h)


# tensor index of e_i (x) f_j is i*dim(f) + j, counted from zero
SYM_SQUARE_BASIS = [{0: 1}, {1: 1, 2: 1}, {3: 1}]
RHO15_BASIS = [{0: 1}, {1: 1, 3: 1}, {2: 1, 4: 1}, {5: 1}]
RHO5_STATED_BASIS = [{0: 1, 7: 1}, {2: 1, 5: 1}]
# second vector scaled by 1/3: same span, and the T-image takes the printed
# form (-1/2)[[1, 1], [3, -1]] instead of its transpose
RHO5_BASIS = [{0: 1, 7: 1}, {2: Fraction(1, 3), 5: Fraction(1, 3)}]

RHO5_BASIS_NOTE = (
    "On the unscaled basis (e1(x)e''1 + e2(x)e''4, e1(x)e''3 + e2(x)e''2) the T-image is "
    "(-1/2)[[1, 3], [1, -1]]; the printed (-1/2)[[1, 1], [3, -1]] is the same representation "
    "after scaling the second basis vector by 1/3, which commutes with the D-image."
)


def extract_sym_square(rho10: Irrep) -> Irrep:
    return sub_representation(tensor(rho10, rho10), SYM_SQUARE_BASIS, 13)


def extract_rho15(rho10: Irrep, rho13: Irrep) -> Irrep:
    return sub_representation(tensor(rho10, rho13), RHO15_BASIS, 15)


def extract_rho5(rho10: Irrep, rho15: Irrep, basis=None) -> Irrep:
    return sub_representation(tensor(rho10, rho15), basis or RHO5_BASIS, 5)


def printed_matrices() -> dict[str, Matrix]:
    """The explicitly printed generator images for rho_13, rho_15 and rho_5."""
    half_i = I / 2
    q = (I - 1) / 4
    return {
        "rho13_T": Matrix.from_rows([[1, 2, 1], [1, 0, -1], [1, -2, 1]]) * half_i,
        "rho13_D": Matrix.diag([ONE, I, -ONE]),
        "rho15_T": Matrix.from_rows(
            [[1, 3, 3, 1], [1, 1, -1, -1], [1, -1, -1, 1], [1, -3, 3, -1]]) * q,
        "rho15_D": Matrix.diag([ONE, I, -ONE, -I]),
        "rho5_T": Matrix.from_rows([[1, 1], [3, -1]]) * Fraction(-1, 2),
        "rho5_D": Matrix.diag([ONE, -ONE]),
    }


def build_all(h: H1 | None = None) -> dict[int, Irrep]:
    h = h or h1()
    reps = build_one_dim(h)
    rho10 = natural(h)
    reps[10] = rho10
    reps[7] = tensor(reps[3], rho10, 7)
    reps[8] = tensor(reps[2], rho10, 8)
    reps[9] = tensor(reps[4], rho10, 9)
    rho13 = extract_sym_square(rho10)
    reps[13] = rho13
    reps[11] = twist(rho13, reps[3], 11)
    reps[12] = twist(rho13, reps[4], 12)
    reps[14] = twist(rho13, reps[2], 14)
    rho15 = extract_rho15(rho10, rho13)
    reps[15] = rho15
    reps[16] = twist(rho15, reps[3], 16)
    rho5 = extract_rho5(rho10, rho15)
    reps[5] = rho5
    reps[6] = twist(rho5, reps[3], 6)
    reps = {k: reps[k] for k in sorted(reps)}

    for r in reps.values():
        if r.norm() != 1:
            raise ConstructionError(f"rho_{r.label} has character norm {r.norm()}")
    chars = {}
    for r in reps.values():
        if r.character in chars:
            raise ConstructionError(f"rho_{r.label} duplicates rho_{chars[r.character]}")
        chars[r.character] = r.label
    return reps


def image_order(r: Irrep) -> int:
    return len(generate_group([r.image_T, r.image_D]))


def irreps_to_json(reps: dict[int, Irrep]) -> dict:
    return {
        f"rho{k}": {
            "dim": r.dim,
            "T": [[str(e) for e in row] for row in r.image_T.to_rows()],
            "D": [[str(e) for e in row] for row in r.image_D.to_rows()],
        }
        for k, r in reps.items()
    }
