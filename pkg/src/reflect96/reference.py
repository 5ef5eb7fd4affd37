"""Published values for H1 that the computations are checked against.

Nothing here feeds a computation; these are verification targets only.
"""

from __future__ import annotations

import re

from .exact import Cyc8

# rows chi_1..chi_16, columns C1..C16; entries are Gaussian integers a+bi
_TABLE_TEXT = """
1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
1 -1 1 -1 1 1 -1 1 -1 1 -1 1 -1 1 1 1
1 -i -1 i 1 -1 i 1 -i -1 i 1 -i -1 -1 1
1 i -1 -i 1 -1 -i 1 i -1 -i 1 i -1 -1 1
2 0 2 0 2 2 0 -1 0 -1 0 -1 0 -1 2 2
2 0 -2 0 2 -2 0 -1 0 1 0 -1 0 1 -2 2
2 0 -2i 0 -2 2i -1+i 1 1+i -i 1-i -1 -1-i i 0 0
2 0 2i 0 -2 -2i -1-i 1 1-i i 1+i -1 -1+i -i 0 0
2 0 -2i 0 -2 2i 1-i 1 -1-i -i -1+i -1 1+i i 0 0
2 0 2i 0 -2 -2i 1+i 1 -1+i i -1-i -1 1-i -i 0 0
3 1 3 1 3 3 -1 0 -1 0 -1 0 -1 0 -1 -1
3 -1 3 -1 3 3 1 0 1 0 1 0 1 0 -1 -1
3 i -3 -i 3 -3 i 0 -i 0 i 0 -i 0 1 -1
3 -i -3 i 3 -3 -i 0 i 0 -i 0 i 0 1 -1
4 0 -4i 0 -4 4i 0 -1 0 i 0 1 0 -i 0 0
4 0 4i 0 -4 -4i 0 -1 0 -i 0 1 0 i 0 0
"""

_GAUSS = re.compile(r"^(?:([+-]?\d+)(?=[+-]|$))?(?:([+-]?\d*)i)?$")


def gaussian(text: str) -> Cyc8:
    """'-1+i' -> -1 + z^2 (i = z^2)."""
    m = _GAUSS.match(text)
    if m is None or text == "":
        raise ValueError(f"not a Gaussian integer: {text!r}")
    re_part = int(m.group(1)) if m.group(1) else 0
    im = m.group(2)
    if im is None:
        im_part = 0
    elif im in ("", "+"):
        im_part = 1
    elif im == "-":
        im_part = -1
    else:
        im_part = int(im)
    return Cyc8(re_part, 0, im_part, 0)


CHARACTER_TABLE: tuple[tuple[Cyc8, ...], ...] = tuple(
    tuple(gaussian(x) for x in line.split())
    for line in _TABLE_TEXT.strip().splitlines()
)

CLASS_ORDERS = (1, 8, 4, 8, 2, 4, 4, 6, 4, 12, 4, 3, 4, 12, 2, 4)

IMAGE_ORDERS = (1, 2, 4, 4, 6, 12, 96, 96, 96, 96, 24, 24, 48, 48, 96, 96)

# chi_10 * chi_j as {label: multiplicity}
NATURAL_PRODUCTS: dict[int, dict[int, int]] = {
    1: {10: 1},
    2: {8: 1},
    3: {7: 1},
    4: {9: 1},
    5: {16: 1},
    6: {15: 1},
    7: {2: 1, 11: 1},
    8: {4: 1, 14: 1},
    9: {1: 1, 12: 1},
    10: {3: 1, 13: 1},
    11: {8: 1, 16: 1},
    12: {10: 1, 16: 1},
    13: {7: 1, 15: 1},
    14: {9: 1, 15: 1},
    15: {5: 1, 11: 1, 12: 1},
    16: {6: 1, 13: 1, 14: 1},
}

# rows 1..9 of the tensor-power diagram of rho_10
DIAGRAM_LEVELS: tuple[dict[int, int], ...] = (
    {10: 1},
    {3: 1, 13: 1},
    {7: 2, 15: 1},
    {2: 2, 11: 3, 12: 1, 5: 1},
    {8: 5, 10: 1, 16: 5},
    {4: 5, 3: 1, 14: 10, 13: 6, 6: 5},
    {9: 15, 7: 7, 15: 21},
    {1: 15, 2: 7, 11: 28, 12: 36, 5: 21},
    {8: 35, 10: 51, 16: 85},
)

SQUARE_SUMS = (1, 2, 5, 15, 51, 187, 715, 2795, 11051)

# reading of "chi . chi_j" with a bare chi
BARE_CHI_NOTE = "Products written with a bare chi are read as chi_10 * chi_j."
