"""Check results and reports."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .tensor import fmt_label


@dataclass
class Check:
    name: str
    status: str = "pass"  # pass | fail | skip
    witness: Optional[str] = None
    count: int = 0
    detail: str = ""
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def line(self) -> str:
        s = f"[{self.status.upper():4}] {self.name} ({self.count} cases)"
        if self.detail:
            s += f" {self.detail}"
        if self.witness:
            s += f"\n       witness: {self.witness}"
        return s


def _show(item) -> str:
    if isinstance(item, tuple):
        return "(" + ", ".join(_show(x) for x in item) + ")"
    if isinstance(item, (str, int)):
        return fmt_label(item)
    return repr(item)


def scan(name: str, items: Iterable, test: Callable, detail: str = "") -> Check:
    """Run ``test`` over ``items``; stop at the first failure.

    ``test`` returns ``None``/``True`` on success, ``False`` or a message on
    failure.  Exceptions count as failures and are reported as witnesses.
    """
    t0 = time.perf_counter()
    n = 0
    for item in items:
        n += 1
        try:
            r = test(item)
        except Exception as exc:  # report, do not propagate
            return Check(name, "fail", f"{_show(item)}: {type(exc).__name__}: {exc}", n, detail,
                         time.perf_counter() - t0)
        if r is None or r is True:
            continue
        msg = _show(item) if r is False else f"{_show(item)}: {r}"
        return Check(name, "fail", msg, n, detail, time.perf_counter() - t0)
    return Check(name, "pass", None, n, detail, time.perf_counter() - t0)


def mismatch(lhs, rhs) -> Optional[str]:
    """``None`` when equal, else a short diff message."""
    if lhs == rhs:
        return None
    return f"lhs={lhs!r} rhs={rhs!r}"


def guarded(name: str, fn: Callable[[], "Check"]) -> Check:
    try:
        return fn()
    except Exception as exc:
        return Check(name, "fail", f"{type(exc).__name__}: {exc}")


def skipped(name: str, why: str) -> Check:
    return Check(name, "skip", None, 0, why)


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    window: Optional[int] = None
    seed: Optional[int] = None

    def add(self, c: Check) -> Check:
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            if prefix:
                c = Check(f"{prefix}{c.name}", c.status, c.witness, c.count, c.detail, c.seconds)
            self.checks.append(c)
        self.notes.extend(n for n in other.notes if n not in self.notes)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == "fail"]

    def get(self, name: str) -> Optional[Check]:
        for c in self.checks:
            if c.name == name:
                return c
        return None

    def render(self) -> str:
        # timings are left out so the text is reproducible
        head = self.title
        meta = []
        if self.window is not None:
            meta.append(f"window={self.window}")
        if self.seed is not None:
            meta.append(f"seed={self.seed}")
        if meta:
            head += " [" + ", ".join(meta) + "]"
        lines = [head]
        lines += [c.line() for c in self.checks]
        npass = sum(c.status == "pass" for c in self.checks)
        nfail = sum(c.status == "fail" for c in self.checks)
        nskip = sum(c.status == "skip" for c in self.checks)
        lines.append(f"summary: {npass} passed, {nfail} failed, {nskip} skipped")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "window": self.window,
            "seed": self.seed,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "status": c.status, "count": c.count, "witness": c.witness,
                 "detail": c.detail}
                for c in self.checks
            ],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)
