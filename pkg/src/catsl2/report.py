"""Machine-checkable verification reports shared by the verifier modules.

A report is a flat ledger of checked instances; the overall verdict is PASS
iff every ledger line passed.  Reports serialize to the JSON shape emitted
by the command-line front end and print as deterministic, aligned text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional


@dataclass
class Line:
    key: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, object]:
        d: Dict[str, object] = {"instance": self.key, "verdict": "PASS" if self.ok else "FAIL"}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    name: str
    params: Dict[str, object] = field(default_factory=dict)
    lines: List[Line] = field(default_factory=list)

    def check(self, key: str, ok: bool, detail: str = "") -> bool:
        self.lines.append(Line(key, bool(ok), detail))
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(line.ok for line in self.lines)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def failures(self) -> List[Line]:
        return [line for line in self.lines if not line.ok]

    def counterexample(self) -> Optional[Line]:
        bad = self.failures()
        return bad[0] if bad else None

    def summary(self) -> str:
        return "%s: %s (%d checked, %d failed)" % (
            self.name, self.verdict, len(self.lines), len(self.failures()))

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "params": self.params,
            "checked": len(self.lines),
            "failed": len(self.failures()),
            "ledger": [line.to_dict() for line in self.lines],
            "verdict": self.verdict,
        }

    def render(self, verbose: bool = False) -> str:
        out = [self.summary()]
        for line in self.lines:
            if verbose or not line.ok:
                mark = "ok  " if line.ok else "FAIL"
                text = "  [%s] %s" % (mark, line.key)
                if line.detail:
                    text += "  -- " + line.detail
                out.append(text)
        return "\n".join(out)
