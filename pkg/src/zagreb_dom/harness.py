"""Exhaustive verification of the extremal bounds over all trees of given order.

The enumeration stream for each order is split round-robin into ``jobs``
shards. Each shard folds its trees into per-gamma partial aggregates (exact
min/max with tie sets of canonical codes), and the partials are merged in a
fixed order, so the report does not depend on the worker count.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Literal

from . import bounds
from .bounds import EXPONENT_VARIANTS, adjudicate_pi2_lower_exponent
from .domination import domination_number, gamma_only
from .enumeration import TreeStream, enumeration_cap
from .errors import CapExceeded, IoError
from .families import build_L_members, build_T, d_member_codes, is_member_L
from .indices import all_indices, pi1, pi2
from .tree import (
    Tree,
    canonical_code,
    canonical_relabel,
    path_tree,
    read_edge_list,
    to_parent_string,
    tree_from_code,
)

ExponentPolicy = Literal["printed", "consistent", "both"]
PRINTED_TAG = "PI2_LOWER_PRINTED"


@dataclass(frozen=True)
class RunConfig:
    n_min: int = 2
    n_max: int = 10
    gamma: int | None = None
    jobs: int = 1
    fmt: Literal["json", "csv"] = "json"
    out: str | None = None
    cap: int | None = None
    thm43_exponent: ExponentPolicy = "both"

    def validate(self) -> None:
        cap = enumeration_cap() if self.cap is None else self.cap
        if self.n_min < 2:
            raise ValueError(f"n_min must be at least 2, got {self.n_min}")
        if self.n_min > self.n_max:
            raise ValueError(f"n_min={self.n_min} exceeds n_max={self.n_max}")
        if self.n_max > cap:
            raise CapExceeded(f"n_max={self.n_max} exceeds the enumeration cap {cap}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.thm43_exponent not in ("printed", "consistent", "both"):
            raise ValueError(f"unknown exponent policy {self.thm43_exponent!r}")


def _bound_checks(n: int, gamma: int, policy: ExponentPolicy) -> list[tuple[str, str, int]]:
    """``(tag, direction, value)`` triples; direction is ``>=`` or ``<=`` for the index."""
    lower2 = "printed" if policy == "printed" else "consistent"
    checks = [
        (bounds.PI1_LOWER, ">=", bounds.pi1_lower(n, gamma).value),
        (bounds.PI2_UPPER, "<=", bounds.pi2_upper(n, gamma).value),
        (bounds.PI1_UPPER, "<=", bounds.pi1_upper(n, gamma).value),
        (bounds.PI2_LOWER, ">=", bounds.pi2_lower(n, gamma, lower2).value),
    ]
    if policy == "both":
        checks.append((PRINTED_TAG, ">=", bounds.pi2_lower(n, gamma, "printed").value))
    return checks


@dataclass
class Extremum:
    value: int | None = None
    codes: set[str] = field(default_factory=set)

    def offer(self, value: int, code: str, maximize: bool) -> None:
        if self.value is None or (value > self.value if maximize else value < self.value):
            self.value = value
            self.codes = {code}
        elif value == self.value:
            self.codes.add(code)

    def merge(self, other: Extremum, maximize: bool) -> None:
        if other.value is None:
            return
        for code in other.codes:
            self.offer(other.value, code, maximize)


@dataclass
class CellAggregate:
    n: int
    gamma: int
    tree_count: int = 0
    min_pi1: Extremum = field(default_factory=Extremum)
    max_pi1: Extremum = field(default_factory=Extremum)
    min_pi2: Extremum = field(default_factory=Extremum)
    max_pi2: Extremum = field(default_factory=Extremum)
    violations: list[tuple[str, str, str]] = field(default_factory=list)

    def add(self, p1: int, p2: int, code: str) -> None:
        self.tree_count += 1
        self.min_pi1.offer(p1, code, False)
        self.max_pi1.offer(p1, code, True)
        self.min_pi2.offer(p2, code, False)
        self.max_pi2.offer(p2, code, True)

    def merge(self, other: CellAggregate) -> None:
        self.tree_count += other.tree_count
        self.min_pi1.merge(other.min_pi1, False)
        self.max_pi1.merge(other.max_pi1, True)
        self.min_pi2.merge(other.min_pi2, False)
        self.max_pi2.merge(other.max_pi2, True)
        self.violations.extend(other.violations)


def _scan_shard(task: tuple[int, int, int, int | None, ExponentPolicy]) -> dict[int, CellAggregate]:
    n, index, count, gamma_filter, policy = task
    cells: dict[int, CellAggregate] = {}
    checks: dict[int, list[tuple[str, str, int]]] = {}
    for _, t in TreeStream(n, cap=n).shard(index, count):
        g = gamma_only(t)
        if gamma_filter is not None and g != gamma_filter:
            continue
        cell = cells.get(g)
        if cell is None:
            cell = cells[g] = CellAggregate(n, g)
            checks[g] = _bound_checks(n, g, policy)
        p1, p2 = pi1(t), pi2(t)
        cell.add(p1, p2, canonical_code(t))
        for tag, direction, value in checks[g]:
            index_value = p2 if tag.startswith("PI2") else p1
            ok = index_value >= value if direction == ">=" else index_value <= value
            if not ok:
                name = "pi2" if tag.startswith("PI2") else "pi1"
                detail = f"{name}={index_value} violates {name} {direction} {value}"
                cell.violations.append((tag, to_parent_string(canonical_relabel(t)), detail))
    return cells


def _family_codes(n: int, gamma: int) -> tuple[str, frozenset[str]]:
    reg = bounds.regime(n, gamma)
    if reg == bounds.GAMMA_LE_N3:
        return "D", d_member_codes(n, gamma)
    if reg == bounds.GAMMA_MID:
        return "L", frozenset(canonical_code(t) for t in build_L_members(n, gamma))
    return "P", frozenset({canonical_code(path_tree(n))})


def _cell_record(cell: CellAggregate, policy: ExponentPolicy) -> dict[str, Any]:
    n, g = cell.n, cell.gamma
    checks = _bound_checks(n, g, policy)
    bound_values = {tag: value for tag, _, value in checks}
    observed = {
        bounds.PI1_LOWER: cell.min_pi1,
        bounds.PI2_UPPER: cell.max_pi2,
        bounds.PI1_UPPER: cell.max_pi1,
        bounds.PI2_LOWER: cell.min_pi2,
        PRINTED_TAG: cell.min_pi2,
    }
    t_code = canonical_code(build_T(n, g))
    family, family_codes = _family_codes(n, g)
    max1 = sorted(cell.max_pi1.codes)
    min2 = sorted(cell.min_pi2.codes)
    attainers = sorted(set(max1) | set(min2))
    if family == "L":
        in_family = [is_member_L(tree_from_code(c), n, g) for c in attainers]
    else:
        in_family = [c in family_codes for c in attainers]
    record: dict[str, Any] = {
        "n": n,
        "gamma": g,
        "regime": bounds.regime(n, g),
        "tree_count": cell.tree_count,
        "min_pi1": str(cell.min_pi1.value),
        "max_pi1": str(cell.max_pi1.value),
        "min_pi2": str(cell.min_pi2.value),
        "max_pi2": str(cell.max_pi2.value),
        "bounds": {tag: str(v) for tag, v in bound_values.items()},
        "attained": {tag: observed[tag].value == v for tag, v in bound_values.items()},
        "attainers_min_pi1": sorted(cell.min_pi1.codes),
        "attainers_max_pi1": max1,
        "attainers_min_pi2": min2,
        "attainers_max_pi2": sorted(cell.max_pi2.codes),
        "membership": {
            "T_code": t_code,
            "min_pi1_is_T": cell.min_pi1.codes == {t_code},
            "max_pi2_is_T": cell.max_pi2.codes == {t_code},
            "upper_family": family,
            "family_size": len(family_codes),
            "max_pi1_equals_family": set(max1) == family_codes,
            "min_pi2_equals_family": set(min2) == family_codes,
            "attainers_in_family": all(in_family),
        },
        "violations": [
            {"theorem_tag": tag, "tree": tree, "detail": detail}
            for tag, tree, detail in sorted(cell.violations)
        ],
    }
    if policy == "both" and record["regime"] == bounds.GAMMA_LE_N3:
        record["pi2_lower_variants"] = {
            variant: {
                "value": str(bounds.pi2_lower(n, g, variant).value),
                "equals_min_pi2": bounds.pi2_lower(n, g, variant).value == cell.min_pi2.value,
            }
            for variant in EXPONENT_VARIANTS
        }
    return record


def collect_cells(cfg: RunConfig) -> list[CellAggregate]:
    tasks = [
        (n, index, cfg.jobs, cfg.gamma, cfg.thm43_exponent)
        for n in range(cfg.n_min, cfg.n_max + 1)
        for index in range(cfg.jobs)
    ]
    if cfg.jobs == 1:
        partials = [_scan_shard(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            partials = list(pool.map(_scan_shard, tasks))
    merged: dict[tuple[int, int], CellAggregate] = {}
    for partial in partials:
        for g in sorted(partial):
            cell = partial[g]
            key = (cell.n, g)
            if key in merged:
                merged[key].merge(cell)
            else:
                merged[key] = cell
    return [merged[key] for key in sorted(merged)]


def verify(cfg: RunConfig) -> dict[str, Any]:
    """Check all four bounds on every tree in range and describe the extremes.

    The returned report is written to ``cfg.out`` when set. Callers signal
    success with ``report["summary"]["violations"] == 0``.
    """
    cfg.validate()
    adjudication = adjudicate_pi2_lower_exponent(cfg.n_max, cfg.n_min)
    cells = collect_cells(cfg)
    records = [_cell_record(cell, cfg.thm43_exponent) for cell in cells]
    violations = sum(len(r["violations"]) for r in records)
    report = {
        "config": {
            "n_min": cfg.n_min,
            "n_max": cfg.n_max,
            "gamma": cfg.gamma,
            "thm43_exponent": cfg.thm43_exponent,
        },
        "pi2_lower_adjudication": {
            "matching_variants": adjudication.matching,
            "mismatched_cells": {
                v: [list(c) for c in adjudication.inconsistent_cells[v]] for v in EXPONENT_VARIANTS
            },
        },
        "summary": {
            "cells": len(records),
            "trees": sum(r["tree_count"] for r in records),
            "violations": violations,
        },
        "cells": records,
    }
    if cfg.out is not None:
        write_report(report, cfg.out, cfg.fmt)
    return report


CSV_COLUMNS = [
    "n",
    "gamma",
    "regime",
    "tree_count",
    "min_pi1",
    "max_pi1",
    "min_pi2",
    "max_pi2",
    "bound_pi1_lower",
    "bound_pi2_upper",
    "bound_pi1_upper",
    "bound_pi2_lower",
    "bound_pi2_lower_printed",
    "attainers_min_pi1",
    "attainers_max_pi1",
    "attainers_min_pi2",
    "attainers_max_pi2",
    "min_pi1_is_T",
    "max_pi2_is_T",
    "upper_family",
    "max_pi1_equals_family",
    "min_pi2_equals_family",
    "attainers_in_family",
    "violations",
]


def _csv_row(r: dict[str, Any]) -> list[Any]:
    b = r["bounds"]
    m = r["membership"]
    flag = lambda x: "true" if x else "false"  # noqa: E731
    return [
        r["n"],
        r["gamma"],
        r["regime"],
        r["tree_count"],
        r["min_pi1"],
        r["max_pi1"],
        r["min_pi2"],
        r["max_pi2"],
        b[bounds.PI1_LOWER],
        b[bounds.PI2_UPPER],
        b[bounds.PI1_UPPER],
        b[bounds.PI2_LOWER],
        b.get(PRINTED_TAG, ""),
        ";".join(r["attainers_min_pi1"]),
        ";".join(r["attainers_max_pi1"]),
        ";".join(r["attainers_min_pi2"]),
        ";".join(r["attainers_max_pi2"]),
        flag(m["min_pi1_is_T"]),
        flag(m["max_pi2_is_T"]),
        m["upper_family"],
        flag(m["max_pi1_equals_family"]),
        flag(m["min_pi2_equals_family"]),
        flag(m["attainers_in_family"]),
        "|".join(f"{v['theorem_tag']} {v['tree']} {v['detail']}" for v in r["violations"]),
    ]


def render_report(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report["cells"]:
        writer.writerow(_csv_row(r))
    return buf.getvalue()


def write_report(report: dict[str, Any], path: str | Path, fmt: str) -> None:
    try:
        Path(path).write_text(render_report(report, fmt))
    except OSError as exc:
        raise IoError(f"cannot write report to {path}: {exc}") from exc


TABLE_COLUMNS = [
    "gamma",
    "tree_count",
    "min_pi1",
    "max_pi1",
    "min_pi2",
    "max_pi2",
    "pi1_lower",
    "pi1_upper",
    "pi2_lower",
    "pi2_upper",
    "min_pi1_attainers",
    "max_pi1_attainers",
    "min_pi2_attainers",
    "max_pi2_attainers",
]


def extremal_table(n: int, fmt: str | None = None, jobs: int = 1) -> list[dict[str, Any]] | str:
    """One row per feasible gamma with observed extremes and bound values.

    Returns the rows, or their rendering when ``fmt`` is ``"csv"`` or ``"json"``.
    """
    report = verify(RunConfig(n_min=n, n_max=n, jobs=jobs, thm43_exponent="consistent"))
    rows = []
    for r in report["cells"]:
        b = r["bounds"]
        rows.append(
            {
                "gamma": r["gamma"],
                "tree_count": r["tree_count"],
                "min_pi1": r["min_pi1"],
                "max_pi1": r["max_pi1"],
                "min_pi2": r["min_pi2"],
                "max_pi2": r["max_pi2"],
                "pi1_lower": b[bounds.PI1_LOWER],
                "pi1_upper": b[bounds.PI1_UPPER],
                "pi2_lower": b[bounds.PI2_LOWER],
                "pi2_upper": b[bounds.PI2_UPPER],
                "min_pi1_attainers": len(r["attainers_min_pi1"]),
                "max_pi1_attainers": len(r["attainers_max_pi1"]),
                "min_pi2_attainers": len(r["attainers_min_pi2"]),
                "max_pi2_attainers": len(r["attainers_max_pi2"]),
            }
        )
    if fmt is None:
        return rows
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, TABLE_COLUMNS, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def compute_tree(t: Tree) -> dict[str, Any]:
    record: dict[str, Any] = {"n": t.n, "gamma": domination_number(t).gamma}
    record.update({k: str(v) for k, v in all_indices(t).items()})
    return record


def compute(path: str | Path) -> dict[str, Any]:
    """Indices and domination number of the tree stored in an edge-list file."""
    try:
        t = read_edge_list(path)
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    return compute_tree(t)
