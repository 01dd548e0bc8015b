"""Soundness sweeps and reproduction of the worked comparison examples.

A sweep walks every (n, k) cell of a grid, builds instances (all of them when
the cell is small enough, random ones otherwise), computes every applicable
bound, optionally the exact independence number, and aggregates:

* violations: a bound exceeding an exhausted alpha, or leaving 0..n;
* dominance counts: strict wins / ties / losses for each pair of bounds;
* flagged: CPS boundary warnings, unexhausted alpha, per-instance errors.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb

from .alpha import SolverConfig, alpha_exact
from .bounds import (
    BOUND_NAMES,
    caro_tuza_bound,
    compute_report,
    cps_bound,
    ell_bound,
    turan_spencer_bound,
)
from .errors import HiboundError, InvalidParams
from .hypergraph import all_hypergraphs, complete_minus_one_edge, random_regular, random_uniform

PAIRS = tuple(f"{a}_vs_{b}" for a, b in combinations(BOUND_NAMES, 2))


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("HIBOUND_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SweepSpec:
    n_range: tuple[int, int]
    k_range: tuple[int, int]
    m_policy: str = "random"
    instances_per_cell: int = 1
    seed: int = 0
    with_alpha: bool = False
    alpha_budget: int = 10**6
    exhaustive_cap: int = 20  # enumerate every edge set only when C(n,k) <= cap

    def __post_init__(self):
        (n0, n1), (k0, k1) = self.n_range, self.k_range
        if n0 < 1 or n1 < n0:
            raise InvalidParams(f"bad n_range {self.n_range}")
        if k0 < 2 or k1 < k0:
            raise InvalidParams(f"bad k_range {self.k_range}")
        if self.m_policy not in ("exhaustive", "random"):
            raise InvalidParams(f"m_policy must be 'exhaustive' or 'random', got {self.m_policy!r}")
        if self.instances_per_cell < 1:
            raise InvalidParams("instances_per_cell must be >= 1")
        if self.alpha_budget < 1:
            raise InvalidParams("alpha_budget must be >= 1")

    def units(self) -> list[tuple[int, int]]:
        return [(n, k) for n in range(self.n_range[0], self.n_range[1] + 1)
                for k in range(self.k_range[0], self.k_range[1] + 1)]


@dataclass
class CellRecord:
    n: int
    k: int
    m: int
    instances: int = 0
    ranges: dict[str, list[int]] = field(default_factory=dict)

    def add(self, name: str, value: int) -> None:
        r = self.ranges.get(name)
        if r is None:
            self.ranges[name] = [value, value]
        else:
            r[0] = min(r[0], value)
            r[1] = max(r[1], value)


@dataclass
class SweepResult:
    instances: int = 0
    cells: list[CellRecord] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    dominance_counts: dict[str, dict[str, int]] = field(
        default_factory=lambda: {p: {"wins": 0, "ties": 0, "losses": 0} for p in PAIRS}
    )
    flagged: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "SweepResult") -> None:
        self.instances += other.instances
        self.cells.extend(other.cells)
        self.violations.extend(other.violations)
        self.flagged.extend(other.flagged)
        for p, counts in other.dominance_counts.items():
            for key, v in counts.items():
                self.dominance_counts[p][key] += v

    def to_dict(self) -> dict:
        return {
            "instances": self.instances,
            "ok": self.ok,
            "violations": self.violations,
            "dominance_counts": self.dominance_counts,
            "flagged": self.flagged,
            "cells": [asdict(c) for c in self.cells],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        """One row per (n,k,m) cell; a value reads ``lo..hi`` when instances disagree."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", "k", *BOUND_NAMES, "alpha", "instances"])
        for c in self.cells:
            row = [c.n, c.m, c.k]
            for name in (*BOUND_NAMES, "alpha"):
                r = c.ranges.get(name)
                row.append("" if r is None else str(r[0]) if r[0] == r[1] else f"{r[0]}..{r[1]}")
            row.append(c.instances)
            w.writerow(row)
        return buf.getvalue()

    def to_table(self) -> str:
        lines = [f"instances: {self.instances}", f"violations: {len(self.violations)}",
                 f"flagged: {len(self.flagged)}", "dominance (wins/ties/losses):"]
        for p in PAIRS:
            c = self.dominance_counts[p]
            if c["wins"] or c["ties"] or c["losses"]:
                lines.append(f"  {p:<28} {c['wins']}/{c['ties']}/{c['losses']}")
        return "\n".join(lines) + "\n"


def _instances(spec: SweepSpec, n: int, k: int):
    total = comb(n, k)
    if spec.m_policy == "exhaustive" and total <= spec.exhaustive_cap:
        yield from all_hypergraphs(n, k)
    elif spec.m_policy == "exhaustive":
        for m in range(total + 1):
            for j in range(spec.instances_per_cell):
                yield random_uniform(n, k, m, seed=f"{spec.seed}:{n}:{k}:{m}:{j}")
    else:
        for j in range(spec.instances_per_cell):
            m = random.Random(f"{spec.seed}:{n}:{k}:{j}:m").randint(0, total)
            yield random_uniform(n, k, m, seed=f"{spec.seed}:{n}:{k}:{j}")


def check_instance(h, result: SweepResult, cells: dict, with_alpha: bool, budget: int) -> None:
    """Evaluate one hypergraph and fold it into ``result``."""
    result.instances += 1
    try:
        rep = compute_report(h, with_alpha=with_alpha, solver_config=SolverConfig(node_budget=budget))
    except HiboundError as exc:
        result.flagged.append({"n": h.n, "k": h.k, "m": h.m, "reason": f"error: {exc}"})
        return
    cell = cells.get(h.m)
    if cell is None:
        cell = cells[h.m] = CellRecord(h.n, h.k, h.m)
    cell.instances += 1
    present = rep.present()
    for name, v in present.items():
        cell.add(name, v)
        if not 0 <= v <= h.n:
            result.violations.append({"n": h.n, "k": h.k, "m": h.m, "bound": name, "value": v,
                                      "alpha": None, "edges": [list(e) for e in h.edges]})
    for w in rep.warnings:
        result.flagged.append({"n": h.n, "k": h.k, "m": h.m, "reason": w})
    if rep.alpha is not None and rep.alpha_exhausted:
        cell.add("alpha", rep.alpha)
        for name, v in present.items():
            if v > rep.alpha:
                result.violations.append({"n": h.n, "k": h.k, "m": h.m, "bound": name, "value": v,
                                          "alpha": rep.alpha, "edges": [list(e) for e in h.edges]})
    for a, b in combinations(BOUND_NAMES, 2):
        if a in present and b in present:
            c = result.dominance_counts[f"{a}_vs_{b}"]
            va, vb = present[a], present[b]
            c["wins" if va > vb else "ties" if va == vb else "losses"] += 1


def _run_unit(args) -> SweepResult:
    spec, n, k = args
    res = SweepResult()
    cells: dict[int, CellRecord] = {}
    try:
        for h in _instances(spec, n, k):
            check_instance(h, res, cells, spec.with_alpha, spec.alpha_budget)
    except HiboundError as exc:
        res.flagged.append({"n": n, "k": k, "m": None, "reason": f"error: {exc}"})
    res.cells = [cells[m] for m in sorted(cells)]
    return res


def run_sweep(spec: SweepSpec, workers: int | None = None) -> SweepResult:
    """Run every cell of ``spec``; the result does not depend on ``workers``."""
    workers = default_workers() if workers is None else workers
    jobs = [(spec, n, k) for n, k in spec.units()]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_unit, jobs))
    else:
        parts = [_run_unit(j) for j in jobs]
    out = SweepResult()
    for p in parts:
        out.merge(p)
    return out


# --- worked examples --------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  {json.dumps(self.details, sort_keys=True)}"


def check_ts_below_k(ks=(3, 4, 5), n_max: int = 12) -> CheckResult:
    """For n^k/k^k <= m < C(n,k): TS < k <= ell."""
    checked, failures = 0, []
    for k in ks:
        for n in range(k, n_max + 1):
            lo = -(-n**k // k**k)
            for m in range(lo, comb(n, k)):
                ts, ell = turan_spencer_bound(n, m, k), ell_bound(n, m, k)
                checked += 1
                if not ts < k <= ell:
                    failures.append([n, m, k, ts, ell])
    return CheckResult("ts_below_k_le_ell", not failures,
                       {"checked": checked, "failures": failures[:10]})


def check_ts_below_5(n_lo: int = 10, n_hi: int = 20) -> CheckResult:
    """k=3, n^3/108 <= m < (n-2)(n-3)(n-4)/60: TS < 5 <= ell."""
    checked, failures = 0, []
    for n in range(n_lo, n_hi + 1):
        m = -(-n**3 // 108)
        while 60 * m < (n - 2) * (n - 3) * (n - 4):
            ts, ell = turan_spencer_bound(n, m, 3), ell_bound(n, m, 3)
            checked += 1
            if not ts < 5 <= ell:
                failures.append([n, m, 3, ts, ell])
            m += 1
    return CheckResult("ts_below_5_le_ell", not failures,
                       {"checked": checked, "failures": failures[:10]})


def check_regular_ct_vs_ell(seed: int = 0) -> CheckResult:
    """The 7-regular 3-uniform and 6-regular 4-uniform hypergraphs on 6 vertices."""
    expected = {(6, 3, 7): (2, 3), (6, 4, 6): (3, 4)}
    got, passed = {}, True
    for (n, k, d), want in expected.items():
        try:
            h = random_regular(n, k, d, seed=seed)
        except HiboundError as exc:
            got[f"{n},{k},{d}"] = f"error: {exc}"
            passed = False
            continue
        pair = (caro_tuza_bound(h.degrees(), k), ell_bound(n, h.m, k))
        got[f"{n},{k},{d}"] = list(pair)
        passed &= pair == want and set(h.degrees()) == {d}
    return CheckResult("regular_ct_below_ell", passed, got)


def cps_threshold(n_max: int = 40) -> tuple[int, dict[int, int]]:
    """Smallest n0 with CPS(G_n) = 2 for every n0 <= n <= n_max, where G_n is
    the complete 3-uniform hypergraph minus one edge."""
    values = {n: cps_bound(complete_minus_one_edge(n, 3).degrees()) for n in range(3, n_max + 1)}
    n0 = n_max + 1
    for n in range(n_max, 2, -1):
        if values[n] != 2:
            break
        n0 = n
    return n0, values


def check_cps_minus_one_edge(n_lo: int = 10, n_max: int = 40, alpha_max: int = 16) -> CheckResult:
    n0, values = cps_threshold(n_max)
    start = min(n0, n_lo)
    ells = {n: ell_bound(n, comb(n, 3) - 1, 3) for n in range(start, n_max + 1)}
    alphas = {}
    for n in range(start, alpha_max + 1):
        r = alpha_exact(complete_minus_one_edge(n, 3))
        alphas[n] = r.alpha if r.exhausted else None
    passed = (
        n0 <= n_lo
        and all(values[n] == 2 for n in range(start, n_max + 1))
        and all(v == 3 for v in ells.values())
        and all(v == 3 for v in alphas.values())
    )
    return CheckResult("cps_minus_one_edge", passed, {
        "threshold": n0,
        "cps_range": [min(values[n] for n in range(start, n_max + 1)),
                      max(values[n] for n in range(start, n_max + 1))],
        "ell_values": sorted(set(ells.values())),
        "alpha_values": sorted(set(v if v is not None else -1 for v in alphas.values())),
        "n_range": [start, n_max],
    })


def reproduce_worked_examples() -> list[CheckResult]:
    return [
        check_ts_below_k(),
        check_ts_below_5(),
        check_regular_ct_vs_ell(),
        check_cps_minus_one_edge(),
    ]
