"""Inequality checks with error-bar-aware statuses and deterministic report export.

A strict inequality is only "verified" when the margin clears three times the
combined error bars; anything closer is "inconclusive", and a reversal beyond
the bars is "violated".  JSON output is byte-stable: fixed field order and
floats canonicalized to 15 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .assembly import FEFunction
from .eigensolver import Estimate

VERIFIED = "verified"
INCONCLUSIVE = "inconclusive"
VIOLATED = "violated"

RELATIONS = ("<", "<=", "=")


def evaluate_status(relation: str, lhs: Estimate, rhs: Estimate) -> str:
    """Status as a pure function of the two estimates and the relation."""
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    margin = rhs.value - lhs.value
    band = 3.0 * (lhs.error_bar + rhs.error_bar)
    if relation == "<":
        if margin > band:
            return VERIFIED
        if margin < -band:
            return VIOLATED
        return INCONCLUSIVE
    if relation == "=":
        if abs(margin) <= band:
            return VERIFIED
        if margin < -band:
            return VIOLATED
        return INCONCLUSIVE
    # "<=": anything not reversed beyond the bars counts
    return VERIFIED if margin >= -band else VIOLATED


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    relation: str
    lhs_label: str
    rhs_label: str
    lhs: Estimate
    rhs: Estimate

    @property
    def margin(self) -> float:
        return self.rhs.value - self.lhs.value

    @property
    def status(self) -> str:
        return evaluate_status(self.relation, self.lhs, self.rhs)


def make_check(relation: str, lhs_label: str, lhs: Estimate,
               rhs_label: str, rhs: Estimate, name: str | None = None) -> InequalityCheck:
    if name is None:
        name = f"{lhs_label}{relation}{rhs_label}"
    return InequalityCheck(name, relation, lhs_label, rhs_label, lhs, rhs)


@dataclass
class VerificationReport:
    """Eigenvalue table plus named checks for one verifier run.

    `modes` holds finest-level eigenfunctions for figure export and is not
    serialized; `wall_time` is metadata kept off the canonical JSON so that
    repeated runs are byte-identical.
    """

    domain: str
    params: dict
    levels: list[int]
    table: list[tuple[str, Estimate]]
    checks: list[InequalityCheck]
    wall_time: float = 0.0
    modes: dict[str, FEFunction] = field(default_factory=dict, repr=False)

    def estimate(self, label: str) -> Estimate:
        for lab, est in self.table:
            if lab == label:
                return est
        raise KeyError(label)

    @property
    def labels(self) -> list[str]:
        return [lab for lab, _ in self.table]

    def counts(self) -> dict[str, int]:
        out = {VERIFIED: 0, INCONCLUSIVE: 0, VIOLATED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_dict(self) -> dict:
        return {
            "domain": self.domain,
            "params": _canon(self.params),
            "levels": list(self.levels),
            "table": [
                {
                    "label": lab,
                    "per_level": [_canon_float(v) for v in est.per_level],
                    "extrapolated": _canon_float(est.value),
                    "error_bar": _canon_float(est.error_bar),
                    "observed_order": (None if est.observed_order is None
                                       else _canon_float(est.observed_order)),
                }
                for lab, est in self.table
            ],
            "checks": [
                {
                    "name": c.name,
                    "relation": c.relation,
                    "lhs": c.lhs_label,
                    "rhs": c.rhs_label,
                    "margin": _canon_float(c.margin),
                    "status": c.status,
                }
                for c in self.checks
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        table = []
        for row in data["table"]:
            table.append((row["label"], Estimate(
                value=row["extrapolated"],
                error_bar=row["error_bar"],
                per_level=tuple(row["per_level"]),
                observed_order=row["observed_order"],
            )))
        by_label = dict(table)
        checks = [
            InequalityCheck(c["name"], c["relation"], c["lhs"], c["rhs"],
                            by_label[c["lhs"]], by_label[c["rhs"]])
            for c in data["checks"]
        ]
        return cls(domain=data["domain"], params=data["params"],
                   levels=list(data["levels"]), table=table, checks=checks)


def _canon_float(x: float) -> float:
    return float(f"{float(x):.15g}")


def _canon(obj):
    if isinstance(obj, float):
        return _canon_float(obj)
    if isinstance(obj, dict):
        return {k: _canon(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canon(v) for v in obj]
    return obj


def to_json(report: VerificationReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def to_csv(report: VerificationReport) -> str:
    """One row per (label, level) plus an extrapolation row per label."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "level", "value"])
    for lab, est in report.table:
        for lvl, v in zip(report.levels, est.per_level):
            writer.writerow([lab, lvl, repr(_canon_float(v))])
    for lab, est in report.table:
        writer.writerow([lab, "extrapolated", repr(_canon_float(est.value)),
                         repr(_canon_float(est.error_bar))])
    return buf.getvalue()
