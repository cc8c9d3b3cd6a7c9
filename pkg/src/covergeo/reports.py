"""Deterministic command reports.

A report carries the echoed command, a digest of its canonical input, data
records and pass/fail checks.  Rendering is exact: Fractions print as
"num/den", never floating point.  With timestamps suppressed the same input
always renders to identical bytes.

Two renderings exist: "records" is line oriented and tab separated (one
record per line, first column the record kind), "table" is the reader
friendly variant of the same content.
"""

from __future__ import annotations

import hashlib
from datetime import datetime, timezone
from fractions import Fraction

from .fields import fmt_fraction


def fmt_value(v) -> str:
    if isinstance(v, Fraction):
        return fmt_fraction(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    return str(v)


class Report:
    def __init__(self, command: str, input_key: str, timestamp: bool = True):
        self.command = command
        self.digest = hashlib.sha256(input_key.encode("utf-8")).hexdigest()[:16]
        self.timestamp = (
            datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
            if timestamp
            else None
        )
        self.rows: list[tuple[str, ...]] = []
        self.checks: list[tuple[str, bool, str]] = []

    def add(self, kind: str, *fields) -> None:
        self.rows.append((kind,) + tuple(fmt_value(f) for f in fields))

    def check(self, name: str, passed: bool, value="") -> None:
        self.checks.append((name, bool(passed), fmt_value(value)))

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.all_passed else 1

    def render(self, fmt: str = "table") -> str:
        if fmt == "records":
            return self._render_records()
        if fmt == "table":
            return self._render_table()
        raise ValueError(f"unknown report format {fmt!r}")

    def _meta(self) -> list[tuple[str, ...]]:
        meta = [("meta", "command", self.command), ("meta", "input", self.digest)]
        if self.timestamp:
            meta.append(("meta", "timestamp", self.timestamp))
        return meta

    def _render_records(self) -> str:
        lines = ["\t".join(row) for row in self._meta()]
        lines += ["\t".join(row) for row in self.rows]
        for name, ok, value in self.checks:
            lines.append("\t".join(("check", name, "PASS" if ok else "FAIL", value)))
        if self.checks:
            lines.append(
                "\t".join(
                    ("summary", "PASS" if self.all_passed else "FAIL",
                     f"{sum(ok for _, ok, _ in self.checks)}/{len(self.checks)}")
                )
            )
        return "\n".join(lines) + "\n"

    def _render_table(self) -> str:
        lines = [f"# {self.command}", f"# input {self.digest}"]
        if self.timestamp:
            lines.append(f"# time {self.timestamp}")
        if self.rows:
            widths: dict[int, int] = {}
            for row in self.rows:
                for i, cell in enumerate(row):
                    widths[i] = max(widths.get(i, 0), len(cell))
            for row in self.rows:
                lines.append(
                    "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
                )
        for name, ok, value in self.checks:
            status = "PASS" if ok else "FAIL"
            suffix = f"  {value}" if value else ""
            lines.append(f"check {name}: {status}{suffix}")
        if self.checks:
            lines.append(
                f"summary: {'PASS' if self.all_passed else 'FAIL'} "
                f"({sum(ok for _, ok, _ in self.checks)}/{len(self.checks)} checks)"
            )
        return "\n".join(lines) + "\n"
