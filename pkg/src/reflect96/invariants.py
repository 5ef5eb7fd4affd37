"""Molien series of the invariant rings C[rho]^H1."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import prod
from typing import Sequence

from .exact import ZERO, Cyc8
from .irreps import IMAGE_ORDERS, Irrep, image_order
from .linalg import Poly, charpoly_det
from .matgroup import generate_group

DEFAULT_ORDER = 40


@dataclass(frozen=True)
class RatSeries:
    """Power series in t with rational coefficients, known through t^order."""

    coefficients: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"series known only through t^{self.order}")
        return self.coefficients[k] if k >= 0 else Fraction(0)

    def integers(self) -> list[int]:
        out = []
        for c in self.coefficients:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(int(c))
        return out

    def times_poly(self, poly: Sequence[int]) -> RatSeries:
        n = len(self.coefficients)
        out = [Fraction(0)] * n
        for i, a in enumerate(poly):
            if a:
                for j in range(n - i):
                    out[i + j] += a * self.coefficients[j]
        return RatSeries(tuple(out))


def reciprocal_series(p: Poly, order: int) -> list[Cyc8]:
    """Coefficients of 1/p through t^order; needs p(0) != 0."""
    c0 = p[0]
    if c0.is_zero():
        raise ZeroDivisionError("constant term vanishes")
    inv0 = c0.inverse()
    out = [inv0]
    for n in range(1, order + 1):
        acc = ZERO
        for k in range(1, min(n, p.degree) + 1):
            if p[k]:
                acc = acc + p[k] * out[n - k]
        out.append(-acc * inv0)
    return out


def molien_series(r: Irrep, order: int = DEFAULT_ORDER) -> RatSeries:
    """Average of 1/det(I - t g) over the image group rho(H1)."""
    if order < 1:
        raise ValueError("truncation order must be at least 1")
    image = generate_group([r.image_T, r.image_D])
    # group elements by characteristic polynomial; conjugates share it
    counts: dict[Poly, int] = {}
    for g in image.elements:
        p = charpoly_det(g)
        counts[p] = counts.get(p, 0) + 1
    total = [ZERO] * (order + 1)
    for p, n in counts.items():
        for i, c in enumerate(reciprocal_series(p, order)):
            total[i] = total[i] + c * n
    coeffs = []
    for c in total:
        if not c.is_rational():
            raise ArithmeticError(f"Molien coefficient {c} is not rational")
        coeffs.append(c.to_fraction() / len(image))
    return RatSeries(tuple(coeffs))


def product_series(degrees: Sequence[int], order: int) -> RatSeries:
    """Expansion of prod 1/(1 - t^d) through t^order, by counting solutions."""
    counts = [0] * (order + 1)
    counts[0] = 1
    for d in degrees:
        for n in range(d, order + 1):
            counts[n] += counts[n - d]
    return RatSeries(tuple(Fraction(c) for c in counts))


def _one_minus(d: int) -> list[int]:
    p = [0] * (d + 1)
    p[0] = 1
    p[d] = -1
    return p


def numerator(series: RatSeries, degrees: Sequence[int]) -> RatSeries:
    out = series
    for d in degrees:
        out = out.times_poly(_one_minus(d))
    return out


def candidate_primary_degrees(series: RatSeries, dim: int, group_order: int,
                              rank: int, max_degree: int = 24) -> list[tuple[int, ...]]:
    """Degree sets whose implied numerator is a polynomial with non-negative coefficients summing to rank.

    Only sets with prod(degrees) = rank * group_order are tried, and only
    numerators that vanish past their top degree within the truncation count.
    """
    target = rank * group_order
    found = []
    for degs in combinations_with_replacement(range(1, max_degree + 1), dim):
        if prod(degs) != target:
            continue
        top = sum(degs) - dim
        if top > series.order:
            continue
        num = numerator(series, degs)
        coeffs = num.coefficients
        if any(c < 0 or c.denominator != 1 for c in coeffs):
            continue
        if any(coeffs[top + 1:]):
            continue
        if sum(coeffs) == rank:
            found.append(degs)
    return found


def polynomial_degrees(series: RatSeries, dim: int, group_order: int,
                       max_degree: int = 24) -> tuple[int, ...] | None:
    """Degrees d_1 <= ... <= d_dim with series == prod 1/(1 - t^d_i), if any.

    A polynomial invariant ring of a group acting faithfully has
    prod(d_i) equal to the group order, so only those sets are tried.
    """
    for degs in combinations_with_replacement(range(1, max_degree + 1), dim):
        if prod(degs) == group_order and product_series(degs, series.order) == series:
            return degs
    return None


def verify_degree_claims(irreps: dict[int, Irrep], order: int = DEFAULT_ORDER) -> dict:
    """Check the invariant-degree claims; failures are reported, not raised."""
    if order < 24:
        raise ValueError("degree claims need the series through at least t^24")
    findings = []

    def claim(name: str, passed: bool, detail: str) -> None:
        findings.append({"claim": name, "passed": bool(passed), "detail": detail})

    series = {lab: molien_series(r, order) for lab, r in irreps.items()}
    orders = {lab: image_order(r) for lab, r in irreps.items()}

    s10 = series[10]
    claim("rho10 invariants generated in degrees 8 and 12",
          s10 == product_series([8, 12], order),
          f"series through t^{order} vs 1/((1-t^8)(1-t^12))")
    claim("rho10 degree-8 invariants are one-dimensional", s10[8] == 1, f"coefficient {s10[8]}")
    claim("rho10 has no degree-4 invariants", s10[4] == 0, f"coefficient {s10[4]}")
    claim("rho5 invariants generated in degrees 2 and 3",
          series[5] == product_series([2, 3], order),
          f"series through t^{order} vs 1/((1-t^2)(1-t^3))")
    claim("rho7..rho10 share one Molien series",
          all(series[7] == series[lab] for lab in (8, 9, 10)),
          f"pairwise equality through t^{order}")

    poly = {lab: polynomial_degrees(series[lab], irreps[lab].dim, orders[lab],
                                    max_degree=min(24, order))
            for lab in sorted(irreps) if irreps[lab].dim > 1}
    poly_labels = [lab for lab, d in poly.items() if d]
    claim("weighted polynomial rings exactly for rho5, rho7..rho10, rho12",
          poly_labels == [5, 7, 8, 9, 10, 12],
          f"labels with polynomial Molien series: "
          f"{ {f'rho{lab}': list(poly[lab]) for lab in poly_labels} }")

    s15 = series[15]
    fourth = [d for d in range(1, order + 1)
              if all(c >= 0 for c in numerator(s15, [2, 3, 4, d]).coefficients)]
    with_234 = [lab for lab in sorted(irreps) if series[lab] == product_series([2, 3, 4], order)]
    claim("rho15 invariants generated in degrees 2, 3, 4 (plus one implied degree)",
          bool(fourth),
          f"no degree d gives a non-negative numerator for (2,3,4,d); dimensions in degrees "
          f"0..8 are {[int(s15[d]) for d in range(9)]}; 1/((1-t^2)(1-t^3)(1-t^4)) is the "
          f"series of {['rho%d' % lab for lab in with_234]}" if not fourth else
          f"implied fourth degrees {fourth}")
    cands = candidate_primary_degrees(s15, 4, orders[15], 32, max_degree=min(24, order))
    claim("rho15 ring has primary degree sets with numerator sum 32 (not structurally verified)",
          bool(cands), f"candidate primary degree sets: {[list(c) for c in cands]}")

    listed = [orders[lab] for lab in sorted(irreps)]
    mism = [lab for lab, a, b in zip(sorted(irreps), listed, IMAGE_ORDERS) if a != b]
    claim("image orders follow the listed values in index order", not mism,
          f"computed {listed}; mismatched labels {mism}")
    return {"order": order, "findings": findings}


def molien_to_json(label: int, series: RatSeries, claim: str | None = None) -> dict:
    coeffs = [int(c) if c.denominator == 1 else str(c) for c in series.coefficients]
    out = {"rho": label, "order": series.order, "coefficients": coeffs}
    if claim is not None:
        out["claim"] = claim
    return out

