"""Exact validators for genus change under inseparable covers of curves.

All operations are pure integer or rational identities; no curves are
modeled.  Genus drops shrink by a factor of at least p along a tower of
degree-p inseparable covers, the torsion degree of the differentials is
2p*(drop)/(p-1), and quasi-hyperelliptic rational curves have arithmetic
genus of the shape (p^i + p^j - 2)/2.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .fields import is_prime


@dataclass(frozen=True)
class GenusChangeRecord:
    p: int
    g_upper: int  # arithmetic genus of the curve upstairs
    g_lower: int  # genus of the normalized descent

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError("p must be an odd prime")
        if self.g_lower < 0 or self.g_upper < self.g_lower:
            raise ValueError("need g_upper >= g_lower >= 0")

    @property
    def drop(self) -> int:
        return self.g_upper - self.g_lower


def tate_divisibility(rec: GenusChangeRecord) -> bool:
    """Whether p - 1 divides twice the genus drop."""
    return (2 * rec.drop) % (rec.p - 1) == 0


def torsion_degree(rec: GenusChangeRecord) -> int:
    """Degree of the torsion of the differentials: 2p*drop/(p-1)."""
    if not tate_divisibility(rec):
        raise ValueError(
            f"2*(g_upper - g_lower) = {2 * rec.drop} is not divisible by "
            f"p - 1 = {rec.p - 1}"
        )
    num = 2 * rec.p * rec.drop
    assert num % (rec.p - 1) == 0
    return num // (rec.p - 1)


def rational_curve_torsion(g: int, p: int) -> int:
    """Torsion degree 2pg/(p-1) for a non-smooth geometrically rational
    curve of genus g, valid for 0 < g < (p^2 - 1)/2 (the descent is then a
    smooth conic); such a curve also forces 2g >= p - 1."""
    if p < 3 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if not 0 < g < (p * p - 1) // 2:
        raise ValueError(
            f"g={g} outside the smooth-conic range 0 < g < (p^2-1)/2 = "
            f"{(p * p - 1) // 2}"
        )
    if 2 * g < p - 1:
        raise ValueError(
            f"a non-smooth geometrically rational curve needs 2g >= p - 1 "
            f"(got 2g = {2 * g} < {p - 1})"
        )
    if (2 * g) % (p - 1):
        raise ValueError(f"p - 1 = {p - 1} does not divide 2g = {2 * g}")
    return 2 * p * g // (p - 1)


def tower_monotonicity(genera: list[int], p: int) -> bool:
    """Along a tower of degree-p inseparable covers the genus drops shrink by
    a factor of at least p: drop_{i+1} <= drop_i / p, checked exactly."""
    if len(genera) < 3:
        raise ValueError("need at least three genera")
    for i in range(1, len(genera) - 1):
        drop_prev = genera[i - 1] - genera[i]
        drop_next = genera[i] - genera[i + 1]
        if p * drop_next > drop_prev:
            return False
    return True


def quasi_hyperelliptic_genus_ok(g: int, p: int,
                                 exponent_bound: int = 12) -> bool | None:
    """Whether 2g + 2 = p^i + p^j has a solution with 0 <= i, j.

    Exponents are searched up to exponent_bound; if no solution exists there
    but larger exponents could still reach 2g + 2, the answer is unknown at
    this bound and None is returned rather than a false negative.
    """
    if exponent_bound < 1:
        raise ValueError("exponent bound must be >= 1")
    target = 2 * g + 2
    powers = [p**i for i in range(exponent_bound + 1)]
    for i, pi in enumerate(powers):
        if pi > target:
            break
        if any(pi + pj == target for pj in powers[i:]):
            return True
    if powers[-1] * p + 1 <= target:
        return None  # a larger exponent might still work
    return False


def double_cover_curve_genus(g_base: int, deg_branch: int) -> int:
    """Arithmetic genus of a flat double cover of a smooth curve:
    2*g_base - 1 + deg(B)/2."""
    if deg_branch < 0 or deg_branch % 2:
        raise ValueError("branch degree must be even and non-negative")
    return 2 * g_base - 1 + deg_branch // 2


def double_cover_surface_chi(chi_base: int, b_sq: int, b_dot_k: int) -> Fraction:
    """chi of a flat double cover of a smooth surface:
    2*chi_base + (B^2 + 2 B.K)/8.  Non-integral results are flagged."""
    chi = 2 * chi_base + Fraction(b_sq + 2 * b_dot_k, 8)
    if chi.denominator != 1:
        warnings.warn(
            f"double cover chi = {chi} is not an integer; the input data "
            "cannot come from an actual branch divisor",
            stacklevel=2,
        )
    return chi
