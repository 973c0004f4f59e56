"""Pass/fail reporting shared by the verification suites and the CLI."""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, ok, detail))

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    def summary(self) -> str:
        passed = sum(1 for c in self.checks if c.ok)
        return f"{passed}/{len(self.checks)} passed"

    def render(self, stream=None) -> None:
        stream = stream or sys.stdout
        color = _use_color(stream)
        stream.write(f"suite: {self.suite}\n")
        for c in self.checks:
            tag = _tag(c.ok, color)
            line = f"  {tag} {c.name}"
            if c.detail:
                line += f"  ({c.detail})"
            stream.write(line + "\n")
        stream.write(f"summary: {self.summary()}\n")


def _use_color(stream) -> bool:
    if os.environ.get("NO_COLOR"):
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _tag(ok: bool, color: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if not color:
        return f"[{word}]"
    code = "32" if ok else "31"
    return f"\x1b[{code}m[{word}]\x1b[0m"
