"""Finite matrix groups by closure, conjugacy classes, and the H1 class layout."""

from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .exact import I, ONE
from .linalg import DimensionError, Matrix

DEFAULT_MAX_CLOSURE = 10**6
MAX_CLOSURE_ENV = "REFLECT96_MAX_CLOSURE"


class ClosureLimitError(RuntimeError):
    pass


class AlignmentError(RuntimeError):
    pass


def generator_T() -> Matrix:
    h = (ONE + I) * Fraction(1, 2)
    return Matrix.from_rows([[h, h], [h, -h]])


def generator_D() -> Matrix:
    return Matrix.diag([ONE, I])


# class representatives C1..C16, as words in T and D
CLASS_WORDS = (
    "1", "T", "T^2", "T^3", "T^4", "T^6",
    "D", "DT", "DT^2", "DT^3", "DT^4", "DT^5", "DT^6", "DT^7",
    "D^2", "D^2T^2",
)

# element orders of the representatives above
CLASS_ORDERS = (1, 8, 4, 8, 2, 4, 4, 6, 4, 12, 4, 3, 4, 12, 2, 4)

_WORD_TOKEN = re.compile(r"([A-Za-z])(?:\^(\d+))?")


def parse_word(word: str) -> list[tuple[str, int]]:
    """``"D^2T^2"`` -> [("D", 2), ("T", 2)]; ``"1"`` is the empty word."""
    word = word.replace(" ", "")
    if word in ("", "1"):
        return []
    out = []
    pos = 0
    for m in _WORD_TOKEN.finditer(word):
        if m.start() != pos:
            raise ValueError(f"bad word {word!r}")
        out.append((m.group(1), int(m.group(2) or 1)))
        pos = m.end()
    if pos != len(word):
        raise ValueError(f"bad word {word!r}")
    return out


def evaluate_word(word: str, images: dict[str, Matrix]) -> Matrix:
    letters = parse_word(word)
    n = next(iter(images.values())).rows
    result = Matrix.identity(n)
    for letter, power in letters:
        result = result @ (images[letter] ** power)
    return result


def _closure_limit(max_elements: int | None) -> int:
    if max_elements is not None:
        return max_elements
    env = os.environ.get(MAX_CLOSURE_ENV)
    return int(env) if env else DEFAULT_MAX_CLOSURE


class FiniteMatrixGroup:
    """Elements in BFS order from the identity, right-multiplying by generators.

    ``parent[k] = (p, g)`` records elements[k] = elements[p] @ generators[g],
    which gives every element a word in the generators.
    """

    def __init__(self, generators: Sequence[Matrix], elements: list[Matrix],
                 parent: list[tuple[int, int] | None]):
        self.generators = tuple(generators)
        self.elements = elements
        self.parent = parent
        self._index = {m: k for k, m in enumerate(elements)}
        self.identity = 0

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return self.elements[0].rows

    def index(self, m: Matrix) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise KeyError("matrix is not an element of this group") from None

    def __contains__(self, m: Matrix) -> bool:
        return m in self._index

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self._index[g] for g in self.generators)

    def mul(self, i: int, j: int) -> int:
        return self._index[self.elements[i] @ self.elements[j]]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [0] * len(self)
        for k in range(len(self)):
            if k == 0:
                continue
            # walk powers; element orders are small
            m = self.elements[k]
            p = m
            while True:
                q = p @ m
                if q == self.elements[0]:
                    inv[k] = self._index[p]
                    break
                p = q
        return tuple(inv)

    def inverse(self, i: int) -> int:
        return self.inverses[i]

    def word(self, k: int) -> list[int]:
        """Generator indices g1, g2, ... with elements[k] = gen[g1] @ gen[g2] @ ..."""
        out = []
        while self.parent[k] is not None:
            p, g = self.parent[k]
            out.append(g)
            k = p
        return out[::-1]

    def element_order(self, k: int) -> int:
        m = self.elements[k]
        ident = self.elements[0]
        p = m
        n = 1
        while p != ident:
            p = p @ m
            n += 1
        return n

    def realize(self, images: Sequence[Matrix]) -> list[Matrix]:
        """Images of all elements under the map sending generator g to images[g].

        Only meaningful when that map is a homomorphism; the BFS tree
        supplies the word used for each element.
        """
        if len(images) != len(self.generators):
            raise ValueError("one image per generator required")
        n = images[0].rows
        out: list[Matrix] = [Matrix.identity(n)] * len(self)
        for k in range(1, len(self)):
            p, g = self.parent[k]
            out[k] = out[p] @ images[g]
        return out


def generate_group(generators: Sequence[Matrix], max_elements: int | None = None) -> FiniteMatrixGroup:
    if not generators:
        raise ValueError("at least one generator required")
    n = generators[0].rows
    for g in generators:
        if not g.is_square or g.rows != n:
            raise DimensionError("generators must be square of one common size")
        if g.det().is_zero():
            raise ValueError("generators must be invertible")
    limit = _closure_limit(max_elements)
    ident = Matrix.identity(n)
    elements = [ident]
    parent: list[tuple[int, int] | None] = [None]
    seen = {ident: 0}
    queue = deque([0])
    while queue:
        k = queue.popleft()
        for gi, g in enumerate(generators):
            prod = elements[k] @ g
            if prod not in seen:
                if len(elements) >= limit:
                    raise ClosureLimitError(f"closure exceeded {limit} elements")
                seen[prod] = len(elements)
                elements.append(prod)
                parent.append((k, gi))
                queue.append(seen[prod])
    return FiniteMatrixGroup(generators, elements, parent)


def h1_group(max_elements: int | None = None) -> FiniteMatrixGroup:
    return generate_group([generator_T(), generator_D()], max_elements)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: frozenset[int]
    word: str | None = None

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ConjClassSet:
    classes: tuple[ConjugacyClass, ...]
    # aligned.classes[k] == unaligned.classes[permutation[k]]
    permutation: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, k: int) -> ConjugacyClass:
        return self.classes[k]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    def class_of(self, element: int) -> int:
        for k, c in enumerate(self.classes):
            if element in c.members:
                return k
        raise KeyError(element)


def conjugacy_classes(group: FiniteMatrixGroup) -> ConjClassSet:
    """Orbits under conjugation, ordered by the smallest element index in each."""
    gens = [group.elements[i] for i in group.generator_indices]
    gen_invs = [group.elements[group.inverse(i)] for i in group.generator_indices]
    assigned: dict[int, int] = {}
    classes = []
    for k in range(len(group)):
        if k in assigned:
            continue
        orbit = {k}
        frontier = [k]
        while frontier:
            x = group.elements[frontier.pop()]
            for g, gi in zip(gens, gen_invs):
                y = group.index(g @ x @ gi)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for y in orbit:
            assigned[y] = len(classes)
        classes.append(ConjugacyClass(k, frozenset(orbit)))
    return ConjClassSet(tuple(classes))


def align_to_words(group: FiniteMatrixGroup, classes: ConjClassSet, words: Sequence[str],
                   images: dict[str, Matrix]) -> ConjClassSet:
    if len(words) != len(classes):
        raise AlignmentError(f"{len(words)} words for {len(classes)} classes")
    perm = []
    for w in words:
        m = evaluate_word(w, images)
        if m not in group:
            raise AlignmentError(f"word {w!r} does not evaluate into the group")
        k = classes.class_of(group.index(m))
        if k in perm:
            raise AlignmentError(f"word {w!r} lands in class {k} already claimed by "
                                 f"{words[perm.index(k)]!r}")
        perm.append(k)
    aligned = tuple(
        ConjugacyClass(group.index(evaluate_word(w, images)), classes[k].members, w)
        for w, k in zip(words, perm)
    )
    return ConjClassSet(aligned, tuple(perm))


def align_to_published(group: FiniteMatrixGroup, classes: ConjClassSet) -> ConjClassSet:
    """Reorder H1's classes so class k contains CLASS_WORDS[k]."""
    images = {"T": group.generators[0], "D": group.generators[1]}
    return align_to_words(group, classes, CLASS_WORDS, images)


def element_order(group: FiniteMatrixGroup, idx: int) -> int:
    return group.element_order(idx)


@dataclass
class H1:
    """H1 with its classes in C1..C16 order; built once and shared."""

    group: FiniteMatrixGroup
    classes: ConjClassSet

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return self.classes.sizes

    @property
    def order_row(self) -> tuple[int, ...]:
        return tuple(self.group.element_order(c.representative) for c in self.classes)


_H1_CACHE: H1 | None = None


def h1(max_elements: int | None = None) -> H1:
    global _H1_CACHE
    if _H1_CACHE is None or max_elements is not None:
        g = h1_group(max_elements)
        built = H1(g, align_to_published(g, conjugacy_classes(g)))
        if max_elements is not None:
            return built
        _H1_CACHE = built
    return _H1_CACHE


def group_to_json(h: H1) -> dict:
    g = h.group
    return {
        "order": len(g),
        "elements": [[str(e) for e in m.entries] for m in g.elements],
        "classes": [
            {
                "class": f"C{k + 1}",
                "word": c.word,
                "representative": c.representative,
                "size": c.size,
                "members": sorted(c.members),
            }
            for k, c in enumerate(h.classes)
        ],
        "order_row": list(h.order_row),
    }


__all__ = [
    "CLASS_ORDERS", "CLASS_WORDS", "AlignmentError", "ClosureLimitError", "ConjClassSet",
    "ConjugacyClass", "FiniteMatrixGroup", "H1", "align_to_published", "align_to_words",
    "conjugacy_classes", "element_order", "evaluate_word", "generate_group", "generator_D",
    "generator_T", "group_to_json", "h1", "h1_group", "parse_word",
]
