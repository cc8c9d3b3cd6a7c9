"""Closed-form singularity invariants for double-cover branch germs.

Two families are covered.

* The monomial family x^a t^b (x^m - t^n) with a, b in {0, 1} and m, n
  coprime: ``xi_family`` evaluates the Euclidean-descent recursion on
  (m, n) and ``xi_bound_family`` the closed upper bound valid for odd m.

* The four local shapes arising on a hyperelliptic fibration's branch
  divisor (classes I-IV), parametrized by the ramification data of the
  defining function: ``xi_type`` peels the degree-p recursion layer by
  layer.  Writing l = (p-1)/2 or (p+1)/2, each layer contributes
  (p-1)(p-3)/8 (class I) or (p-1)(p+1)/8 (classes II-IV), the class
  swapping I <-> II, staying at III/IV while the valuation stays above p,
  and dropping III -> I, IV -> II at valuation exactly p.  The tame base
  with R < p reduces to ``xi_family(a, b, p, R + 1)``.

``xi_inequality_slack`` returns the left-minus-right value of the matching
per-class linear bound; it is non-negative for every admissible input.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .fields import is_prime


class SingularityClass(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"

    @property
    def branch_exponents(self) -> tuple[int, int]:
        """The (a, b) monomial exponents of the matching local branch shape."""
        return _CLASS_EXPONENTS[self]

    @property
    def counts_as_pole(self) -> bool:
        return self in (SingularityClass.III, SingularityClass.IV)

    @property
    def d_b(self) -> int:
        return 1 if self in (SingularityClass.II, SingularityClass.IV) else 0


_CLASS_EXPONENTS = {
    SingularityClass.I: (0, 0),
    SingularityClass.II: (0, 1),
    SingularityClass.III: (1, 0),
    SingularityClass.IV: (1, 1),
}


@dataclass(frozen=True)
class RamificationType:
    """Local ramification descriptor: tame {R} or wild {p*j, R}.

    R is the length of the relative-differentials stalk.  Tame data must
    satisfy p not dividing R + 1 (then the valuation is R + 1); wild data
    carry j >= 1 with valuation p*j and must satisfy R >= p*j.
    """

    kind: str  # "tame" | "wild"
    R: int
    j: int | None = None

    def __post_init__(self):
        if self.kind not in ("tame", "wild"):
            raise ValueError(f"unknown ramification kind {self.kind!r}")
        if self.R < 0:
            raise ValueError("ramification index must be non-negative")
        if self.kind == "wild":
            if self.j is None or self.j < 1:
                raise ValueError("wild ramification needs j >= 1")
        elif self.j is not None:
            raise ValueError("tame ramification carries no j")

    @classmethod
    def tame(cls, R: int) -> "RamificationType":
        return cls("tame", R)

    @classmethod
    def wild(cls, j: int, R: int) -> "RamificationType":
        return cls("wild", R, j)

    @property
    def is_wild(self) -> bool:
        return self.kind == "wild"

    def check(self, p: int) -> None:
        """Consistency against the residue characteristic p."""
        if self.kind == "tame":
            if (self.R + 1) % p == 0:
                raise ValueError(
                    f"tame ramification requires p does not divide R+1 "
                    f"(got R={self.R}, p={p})"
                )
        else:
            if self.R < p * self.j:
                raise ValueError(
                    f"wild ramification requires R >= p*j "
                    f"(got R={self.R}, p*j={p * self.j})"
                )

    def fmt(self) -> str:
        if self.kind == "tame":
            return f"tame R={self.R}"
        return f"wild j={self.j} R={self.R}"


def xi_family(a: int, b: int, m: int, n: int) -> int:
    """Invariant of the germ x^a t^b (x^m - t^n), gcd(m, n) = 1."""
    if a not in (0, 1) or b not in (0, 1):
        raise ValueError("exponents a, b must be 0 or 1")
    if m < 1 or n < 1:
        raise ValueError("m, n must be positive")
    if math.gcd(m, n) != 1:
        raise ValueError(f"m={m} and n={n} must be coprime")
    total = 0
    while m != 1 and n != 1:
        if m > n:
            s = a + b + n
            total += _step_drop(s)
            a, m = s % 2, m - n
        else:
            s = a + b + m
            total += _step_drop(s)
            b, n = s % 2, n - m
    return total


def _step_drop(s: int) -> int:
    # (l^2 - l)/2 for l = floor(s/2): s(s-2)/8 for even s, (s-1)(s-3)/8 odd
    if s % 2 == 0:
        num = s * (s - 2)
    else:
        num = (s - 1) * (s - 3)
    assert num % 8 == 0
    return num // 8


def xi_bound_family(a: int, b: int, m: int, n: int) -> Fraction:
    """Closed upper bound for xi_family, valid for odd m:
    (m-1)^2 (n-1) / 8m + (m-1) n a / 4m + (m-1) b / 4."""
    if a not in (0, 1) or b not in (0, 1):
        raise ValueError("exponents a, b must be 0 or 1")
    if m % 2 == 0:
        raise ValueError("the bound requires odd m")
    if m < 1 or n < 1 or math.gcd(m, n) != 1:
        raise ValueError("m, n must be positive and coprime")
    return (
        Fraction((m - 1) ** 2 * (n - 1), 8 * m)
        + Fraction((m - 1) * n * a, 4 * m)
        + Fraction((m - 1) * b, 4)
    )


def _validate_p(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise ValueError("class I-IV invariants need a prime p >= 5")


def xi_type(cls: SingularityClass, lam: RamificationType, p: int) -> int:
    """Invariant of a class I-IV branch point with ramification data lam."""
    _validate_p(p)
    lam.check(p)
    if cls is SingularityClass.I and lam.R < 1:
        # the class-I shape is singular only where the function ramifies
        raise ValueError("class I requires R >= 1")
    inc_light = (p - 1) * (p - 3) // 8
    inc_heavy = (p - 1) * (p + 1) // 8
    assert (p - 1) * (p - 3) % 8 == 0 and (p - 1) * (p + 1) % 8 == 0
    total = 0
    cur = cls
    R = lam.R
    if cls.counts_as_pole:
        if lam.is_wild:
            j = lam.j
            while j >= 2:  # valuation p*j > p: stay in class
                total += inc_heavy
                R -= p
                j -= 1
            total += inc_heavy  # valuation exactly p: drop out of the pole
            R -= p
            cur = SingularityClass.I if cls is SingularityClass.III else SingularityClass.II
        else:
            while R >= p:  # tame with valuation R+1 > p: stay in class
                total += inc_heavy
                R -= p
    if cur in (SingularityClass.I, SingularityClass.II):
        while R >= p:
            total += inc_light if cur is SingularityClass.I else inc_heavy
            cur = (
                SingularityClass.II
                if cur is SingularityClass.I
                else SingularityClass.I
            )
            R -= p
    if (R + 1) % p == 0:
        raise ValueError(
            "inconsistent ramification data: residual index R = -1 mod p "
            "is not realized by any local function"
        )
    a, b = cur.branch_exponents
    return total + xi_family(a, b, p, R + 1)


def xi_inequality_slack(cls: SingularityClass, lam: RamificationType,
                        p: int) -> Fraction:
    """Left-minus-right value of the per-class linear bound on xi_type."""
    xi = xi_type(cls, lam, p)
    R = lam.R
    if cls is SingularityClass.I:
        return Fraction((p - 1) ** 2 * R, 8 * p) - xi
    if cls is SingularityClass.II:
        return Fraction((p - 1) ** 2 * R, 8 * p) + Fraction(p - 1, 4) - xi
    if lam.is_wild:
        slack = Fraction((p - 1) ** 2 * R, 8 * p) - xi + Fraction((p - 1) * lam.j, 4)
    else:
        slack = (
            Fraction((p - 1) * (p + 1) * R, 8 * p)
            - xi
            + Fraction(p - 1, 4 * p)
        )
    if cls is SingularityClass.IV:
        slack += Fraction(p - 1, 4)
    return slack
