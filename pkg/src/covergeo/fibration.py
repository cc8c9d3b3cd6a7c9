"""Hyperelliptic-fibration datum: combinatorial branch data and chi bounds.

A datum records p >= 5, the base genus q >= 2, and a list of branch points,
each carrying a singularity class I-IV and a ramification type.  From these
the pole degree alpha, the count d of vertical branch components, and the
holomorphic Euler characteristics of the normalized cover and of the smooth
model are exact rational (in fact integer) expressions:

    chi_cover  = (p-3)(q-1)/2 + (p-1)(alpha+d)/4
    chi_smooth = (p-3)(q-1)/2 + (p-1)alpha/4 + sum_b ((p-1) d_b / 4 - xi_b)

Consistency asks for the degree identity 2*alpha + 2(q-1) = sum_b R_b, for
alpha + d even, and for alpha >= 1.  Every consistent datum satisfies
chi_smooth >= (p^2-4p-1)(q-1)/4p; the generator below samples consistent
data for sweep tests of exactly that bound.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .fields import is_prime
from .xi import RamificationType, SingularityClass, xi_type


class InvalidDatumError(ValueError):
    pass


@dataclass(frozen=True)
class BranchPointDatum:
    cls: SingularityClass
    ramification: RamificationType

    def __post_init__(self):
        if self.cls is SingularityClass.I and self.ramification.R < 1:
            raise ValueError("a class I point must be a ramification point")

    @property
    def d_b(self) -> int:
        return self.cls.d_b

    def alpha_term(self, p: int) -> int:
        if not self.cls.counts_as_pole:
            return 0
        lam = self.ramification
        return p * lam.j if lam.is_wild else lam.R + 1

    def fmt(self) -> str:
        return f"{self.cls.value}:{self.ramification.fmt()}"


@dataclass(frozen=True)
class FibrationDatum:
    p: int
    q: int
    points: tuple[BranchPointDatum, ...]

    def __post_init__(self):
        if self.p < 5 or not is_prime(self.p):
            raise ValueError("fibration data need a prime p >= 5")
        if self.q < 2:
            raise ValueError("base genus q must be >= 2")

    @property
    def fiber_genus(self) -> int:
        return (self.p - 1) // 2


def alpha_of(datum: FibrationDatum) -> int:
    """Pole degree: tame class III/IV points contribute R + 1, wild ones p*j."""
    return sum(pt.alpha_term(datum.p) for pt in datum.points)


def d_of(datum: FibrationDatum) -> int:
    return sum(pt.d_b for pt in datum.points)


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failures(self) -> list[str]:
        return [name for name, passed, _ in self.checks if not passed]


def validate(datum: FibrationDatum) -> ValidationReport:
    """Structural and numerical consistency checks, reported not raised."""
    checks: list[tuple[str, bool, str]] = []
    points_ok = True
    detail = ""
    for i, pt in enumerate(datum.points):
        try:
            pt.ramification.check(datum.p)
        except ValueError as exc:
            points_ok = False
            detail = f"point {i}: {exc}"
            break
    checks.append(("ramification-data", points_ok, detail))
    alpha = alpha_of(datum)
    d = d_of(datum)
    total_r = sum(pt.ramification.R for pt in datum.points)
    hurwitz_lhs = 2 * alpha + 2 * (datum.q - 1)
    checks.append(
        (
            "hurwitz-degree",
            hurwitz_lhs == total_r,
            f"2*alpha + 2(q-1) = {hurwitz_lhs}, sum R = {total_r}",
        )
    )
    checks.append(("alpha-d-parity", (alpha + d) % 2 == 0, f"alpha+d = {alpha + d}"))
    checks.append(("alpha-positive", alpha >= 1, f"alpha = {alpha}"))
    quarter = Fraction((datum.p - 1) * (alpha + d), 4)
    checks.append(
        (
            "quarter-term-integral",
            quarter.denominator == 1,
            f"(p-1)(alpha+d)/4 = {quarter}",
        )
    )
    return ValidationReport(tuple(checks))


def _require_valid(datum: FibrationDatum) -> None:
    report = validate(datum)
    if not report.ok:
        raise InvalidDatumError(
            "inconsistent fibration datum: " + ", ".join(report.failures())
        )


def chi_normalized_cover(datum: FibrationDatum) -> Fraction:
    """chi of the normalized double cover X0 of the ruled surface."""
    _require_valid(datum)
    alpha, d = alpha_of(datum), d_of(datum)
    chi = Fraction((datum.p - 3) * (datum.q - 1), 2) + Fraction(
        (datum.p - 1) * (alpha + d), 4
    )
    assert chi.denominator == 1
    return chi


def point_xi(datum: FibrationDatum, pt: BranchPointDatum) -> int:
    return xi_type(pt.cls, pt.ramification, datum.p)


def chi_smooth_model(datum: FibrationDatum) -> Fraction:
    """chi of the smooth model: the cover value minus all local invariants."""
    _require_valid(datum)
    p, q = datum.p, datum.q
    alpha = alpha_of(datum)
    chi = Fraction((p - 3) * (q - 1), 2) + Fraction((p - 1) * alpha, 4)
    for pt in datum.points:
        chi += Fraction((p - 1) * pt.d_b, 4) - point_xi(datum, pt)
    assert chi.denominator == 1
    return chi


@dataclass(frozen=True)
class EvidenceResult:
    chi: Fraction
    bound: Fraction
    passed: bool


def evidence_bound_check(datum: FibrationDatum) -> EvidenceResult:
    """chi(smooth model) against the lower bound (p^2-4p-1)(q-1)/4p."""
    chi = chi_smooth_model(datum)
    p, q = datum.p, datum.q
    bound = Fraction((p * p - 4 * p - 1) * (q - 1), 4 * p)
    return EvidenceResult(chi, bound, chi >= bound)


# ---------------------------------------------------------------------------
# Serialization: canonical JSON with fields p, q, points.


def datum_to_dict(datum: FibrationDatum) -> dict:
    points = []
    for pt in datum.points:
        rec = {"class": pt.cls.value, "kind": pt.ramification.kind,
               "R": pt.ramification.R}
        if pt.ramification.is_wild:
            rec["j"] = pt.ramification.j
        points.append(rec)
    return {"p": datum.p, "q": datum.q, "points": points}


def datum_from_dict(data: dict) -> FibrationDatum:
    try:
        points = []
        for rec in data["points"]:
            cls = SingularityClass(rec["class"])
            if rec["kind"] == "wild":
                lam = RamificationType.wild(int(rec["j"]), int(rec["R"]))
            else:
                lam = RamificationType.tame(int(rec["R"]))
            points.append(BranchPointDatum(cls, lam))
        return FibrationDatum(int(data["p"]), int(data["q"]), tuple(points))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidDatumError(f"malformed fibration datum: {exc}") from exc


def datum_to_json(datum: FibrationDatum) -> str:
    return json.dumps(datum_to_dict(datum), indent=2) + "\n"


def datum_from_json(text: str) -> FibrationDatum:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDatumError(f"malformed fibration datum: {exc}") from exc
    return datum_from_dict(data)


def load_datum(path: str | Path) -> FibrationDatum:
    return datum_from_json(Path(path).read_text(encoding="utf-8"))


def save_datum(datum: FibrationDatum, path: str | Path) -> None:
    Path(path).write_text(datum_to_json(datum), encoding="utf-8")


# ---------------------------------------------------------------------------
# Generator of consistent data for sweep tests.


def _tame_indexes(p: int, lo: int, hi: int) -> list[int]:
    return [r for r in range(lo, hi + 1) if (r + 1) % p]


def random_datum(rng: random.Random, p: int | None = None,
                 q_max: int = 20) -> FibrationDatum:
    """One consistent datum: sample pole and vertical points, then choose q
    and pad with simple class I points to satisfy the degree identity."""
    if p is None:
        p = rng.choice((5, 7, 11))
    for _ in range(64):
        points: list[BranchPointDatum] = []
        for _ in range(rng.randint(1, 3)):  # points of class III / IV
            cls = rng.choice((SingularityClass.III, SingularityClass.IV))
            if rng.random() < 0.5:
                j = rng.randint(1, 3)
                lam = RamificationType.wild(j, rng.choice(
                    _tame_indexes(p, p * j, p * j + p - 2)))
            else:
                lam = RamificationType.tame(rng.choice(_tame_indexes(p, 0, 3 * p)))
            points.append(BranchPointDatum(cls, lam))
        for _ in range(rng.randint(0, 2)):  # extra vertical components
            points.append(BranchPointDatum(
                SingularityClass.II,
                RamificationType.tame(rng.choice(_tame_indexes(p, 0, 2 * p)))))
        for _ in range(rng.randint(0, 2)):  # larger horizontal ramification
            points.append(BranchPointDatum(
                SingularityClass.I,
                RamificationType.tame(rng.choice(_tame_indexes(p, 1, 2 * p)))))
        alpha = sum(pt.alpha_term(p) for pt in points)
        d = sum(pt.d_b for pt in points)
        if (alpha + d) % 2:
            points.append(BranchPointDatum(
                SingularityClass.II, RamificationType.tame(0)))
        total_r = sum(pt.ramification.R for pt in points)
        q_min = max(2, (total_r - 2 * alpha) // 2 + 1)
        if q_min > q_max:
            continue
        q = rng.randint(q_min, q_max)
        fill = 2 * alpha + 2 * (q - 1) - total_r
        if fill < 0:
            continue
        points.extend(
            BranchPointDatum(SingularityClass.I, RamificationType.tame(1))
            for _ in range(fill)
        )
        datum = FibrationDatum(p, q, tuple(points))
        if validate(datum).ok:
            return datum
    raise RuntimeError("datum generator failed to converge")  # pragma: no cover


def iter_random_data(seed: int, count: int, ps=(5, 7, 11),
                     q_max: int = 20):
    rng = random.Random(seed)
    for i in range(count):
        yield random_datum(rng, p=ps[i % len(ps)], q_max=q_max)
