"""Uniform result records for verified inequalities."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, replace


@dataclass(frozen=True)
class BoundReport:
    """One checked instance of an inequality or identity.

    ``passed`` is None when the check was computed but deliberately not
    asserted (for example a subset outside the size regime of the estimate).
    """

    check: str
    value: float
    bound: float
    passed: bool | None = None
    witness: str = ""
    note: str = ""
    q: int | None = None
    d: int | None = None
    form_id: str = ""
    j: int | None = None
    seed: int | None = None
    family: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def ratio(self) -> float:
        if self.bound == 0:
            return math.inf if self.value else 0.0
        if math.isinf(self.bound):
            return 0.0
        return self.value / self.bound

    def with_context(self, **kw) -> "BoundReport":
        return replace(self, **kw)

    def as_row(self) -> dict:
        row = asdict(self)
        row.pop("extra")
        row["ratio"] = self.ratio
        return row


ROW_FIELDS = (
    "check", "q", "d", "form_id", "j", "seed", "family",
    "value", "bound", "ratio", "passed", "witness", "note",
)


def ceiling_report(check: str, value: float, bound: float, **kw) -> BoundReport:
    """Report for ``value <= bound`` (with a 1e-9 relative slack for rounding)."""
    return BoundReport(check, value, bound, passed=bool(value <= bound * (1 + 1e-9)), **kw)


def identity_report(check: str, value: float, expected: float, rtol: float, **kw) -> BoundReport:
    """Report for ``value == expected`` within relative tolerance ``rtol``."""
    ok = abs(value - expected) <= rtol * max(abs(expected), 1e-300)
    return BoundReport(check, value, expected, passed=bool(ok), **kw)
