"""Sweep drivers: every checker, over grids of residue families.

A verify run walks all residue subsets R of {0..m-1} for each modulus
m <= m_max (the empty subset rides along vacuously), shares exact count
tables through a per-modulus TableFactory, and aggregates one summary per
named check.  Work is split by modulus across processes when a worker
count above 1 is requested; rows are merged in a fixed order either way,
so output is deterministic.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from . import bounds, series
from .counting import (
    ORACLE_CEILING_DEFAULT,
    TableFactory,
    count_bruteforce,
    count_dp,
    count_recurrence,
)
from .partset import ResidueSpec, VARIANT_LABELS, parts_up_to

CHECK_NAMES = (
    "counts",
    "theorem1",
    "erdos",
    "chain",
    "rpoly",
    "eq1",
    "eq2",
    "eq3",
    "helpers",
    "remark",
    "ratio",
)

SWEEP_VARIANTS = ("full-a", "a-plus", "r-plus")

# Brute-force oracle leg of the counts check stays below this n; the walk
# visits every partition, so it must not scale with the sweep's n_max.
ORACLE_N_CAP = 40

SQRT_SWEEP_N_MAX = 200


@dataclass(frozen=True)
class SweepConfig:
    """What to verify, over which grid, and where to put the rows."""

    m_max: int = 4
    n_max: int = 300
    variants: tuple[str, ...] = SWEEP_VARIANTS
    checks: tuple[str, ...] = CHECK_NAMES
    output_format: str = "json"
    output_path: str | None = None
    workers: int = 1

    def validated(self) -> "SweepConfig":
        if self.m_max < 1:
            raise ValueError(f"m_max must be >= 1, got {self.m_max}")
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        for v in self.variants:
            if v not in SWEEP_VARIANTS:
                raise ValueError(f"unknown variant {v!r}; choose from {SWEEP_VARIANTS}")
        for c in self.checks:
            if c not in CHECK_NAMES:
                raise ValueError(f"unknown check {c!r}; choose from {CHECK_NAMES}")
        if self.output_format not in ("json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        ordered = tuple(c for c in CHECK_NAMES if c in self.checks)
        return replace(self, checks=ordered)


@dataclass
class CheckSummary:
    """Aggregate verdict for one named check."""

    name: str
    rows: int
    failures: int
    worst_margin: float | None
    holds: bool

    def as_row(self) -> dict:
        return {
            "name": self.name,
            "rows": self.rows,
            "failures": self.failures,
            "worst_margin": self.worst_margin,
            "holds": self.holds,
        }


@dataclass
class VerifyResult:
    summaries: list[CheckSummary] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.holds for s in self.summaries)


def subsets_for_modulus(m: int, include_empty: bool = True) -> list[ResidueSpec]:
    """All residue subsets of {0..m-1} as specs, in bitmask order."""
    start = 0 if include_empty else 1
    out = []
    for bits in range(start, 1 << m):
        residues = tuple(r for r in range(m) if bits >> r & 1)
        out.append(ResidueSpec(m=m, residues=residues))
    return out


def ratio_checkpoints(n_max: int) -> list[int]:
    """Sparse n values for the convergence diagnostic."""
    marks = {n for n in (1, 10, 100, 1000, 10000) if n <= n_max}
    if n_max >= 1:
        marks.add(n_max)
    return sorted(marks)


# --- per-spec row builders ----------------------------------------------------


def _ratio_rows(spec: ResidueSpec, table, n_max: int) -> list[dict]:
    params = bounds.BoundParams.from_spec(spec)
    rows = []
    for n in ratio_checkpoints(n_max):
        cnt = table.values[n]
        if cnt < 1:
            continue
        rows.append(
            {
                "check": "ratio",
                "m": spec.m,
                "R": list(spec.residues),
                "variant": "full-a",
                "n": n,
                "count": str(cnt),
                "log_count": bounds.log_of_count(cnt),
                "bound": params.c * math.sqrt(n),
                "ratio": bounds.asymptotic_ratio(spec, n, count=cnt),
                "holds": True,
            }
        )
    return rows


def oracle_equivalence_rows(
    m: int,
    n_max: int,
    variants: tuple[str, ...],
    *,
    brute_cap: int = ORACLE_N_CAP,
    include_empty: bool = True,
) -> list[dict]:
    """Three-engine agreement for every subset of {0..m-1} and variant.

    Identical part lists across (R, variant) combinations are computed once;
    the brute-force leg stops at brute_cap, the other two engines run to
    n_max.  Each row reports one (spec, variant) verdict.
    """
    cache: dict[tuple[int, ...], tuple[bool, int]] = {}
    rows = []
    brute_top = min(n_max, brute_cap, ORACLE_CEILING_DEFAULT)
    for spec in subsets_for_modulus(m, include_empty):
        for label in variants:
            parts = tuple(parts_up_to(spec, VARIANT_LABELS[label], n_max))
            cached = cache.get(parts)
            if cached is None:
                dp = count_dp(parts, n_max)
                rec = count_recurrence(parts, n_max)
                agree = dp.values == rec.values
                if agree:
                    brute_parts = tuple(p for p in parts if p <= brute_top)
                    agree = all(
                        count_bruteforce(brute_parts, n) == dp.values[n]
                        for n in range(brute_top + 1)
                    )
                cached = (agree, dp.values[n_max])
                cache[parts] = cached
            agree, top_count = cached
            rows.append(
                {
                    "check": "counts",
                    "m": spec.m,
                    "R": list(spec.residues),
                    "variant": label,
                    "n": n_max,
                    "count": str(top_count),
                    "holds": agree,
                }
            )
    return rows


def _rows_for_modulus(args: tuple) -> dict[str, list[dict]]:
    """All spec-dependent check rows for one modulus (worker entry point)."""
    m, n_max, checks, variants = args
    by_check: dict[str, list[dict]] = {name: [] for name in checks}
    factory = TableFactory(n_max)
    x_grid = series.default_x_grid()
    t_grid = series.default_t_grid()

    if "eq2" in by_check:
        for r in range(m):
            for x in x_grid:
                by_check["eq2"].append(series.check_eq2_pointwise(r, m, x).as_row())

    if "counts" in by_check:
        by_check["counts"].extend(oracle_equivalence_rows(m, n_max, variants))

    need_aplus = "theorem1" in by_check
    need_full = "chain" in by_check or "ratio" in by_check
    need_rplus = "rpoly" in by_check
    for spec in subsets_for_modulus(m):
        if need_aplus:
            table = factory.aplus(spec)
            for rep in bounds.check_theorem1(spec, n_max, table=table):
                by_check["theorem1"].append(rep.as_row())
        if need_full:
            table = factory.full_a(spec)
            if "chain" in by_check:
                for rep in bounds.check_nathanson_chain(spec, n_max, table=table):
                    by_check["chain"].append(rep.as_row())
            if "ratio" in by_check and spec.rsize > 0:
                by_check["ratio"].extend(_ratio_rows(spec, table, n_max))
        if need_rplus:
            table = factory.rplus(spec)
            for rep in bounds.check_rplus_poly_bound(spec, n_max, table=table):
                by_check["rpoly"].append(rep.as_row())
        if "eq1" in by_check:
            for t in t_grid:
                by_check["eq1"].append(series.check_eq1(spec, t).as_row())
        if "eq3" in by_check:
            for x in x_grid:
                by_check["eq3"].append(series.check_eq3(spec, x).as_row())
    return by_check


def _helper_rows(m_max: int, n_sqrt_max: int) -> list[dict]:
    """Grid rows for the sinh gap, the envelope facts, and the sqrt split."""
    rows = []
    x_grid = series.default_x_grid()
    for x in x_grid:
        rows.append(series.check_sinh_inequality(x).as_row())
    envelope_grid = [0.0] + x_grid
    for m in range(1, m_max + 1):
        for r in range(m):
            for rep in series.check_derivative_nonpositive(r, m, envelope_grid):
                rows.append(rep.as_row())
    for n in range(1, n_sqrt_max + 1):
        worst = math.inf
        ok = True
        root_n = math.sqrt(n)
        for a in range(1, n + 1):
            for k in range(1, n // a + 1):
                ok = ok and series.check_sqrt_inequality(n, a, k)
                margin = (root_n - a * k / (2.0 * root_n)) - math.sqrt(n - a * k)
                worst = min(worst, margin)
        rows.append(
            {
                "check": "sqrt-split",
                "n": n,
                "margin": worst,
                "holds": ok,
            }
        )
    return rows


def _margin_of(row: dict) -> float | None:
    margin = row.get("margin")
    if margin is None:
        margin = row.get("slack")
    return margin


def _summarize(name: str, rows: list[dict]) -> CheckSummary:
    margins = [m for m in (_margin_of(r) for r in rows) if m is not None]
    failures = sum(1 for r in rows if r.get("holds") is False)
    if name == "remark":
        # success means the finder produced witnesses; worst = largest violation
        return CheckSummary(
            name=name,
            rows=len(rows),
            failures=failures,
            worst_margin=max(margins) if margins else None,
            holds=len(rows) > 0 and failures == 0,
        )
    return CheckSummary(
        name=name,
        rows=len(rows),
        failures=failures,
        worst_margin=min(margins) if margins else None,
        holds=failures == 0,
    )


def run_verify(config: SweepConfig) -> VerifyResult:
    """Run every selected check over the configured grid."""
    config = config.validated()
    by_check: dict[str, list[dict]] = {name: [] for name in config.checks}

    spec_checks = [
        c for c in config.checks if c in ("counts", "theorem1", "chain", "rpoly", "eq1", "eq2", "eq3", "ratio")
    ]
    if spec_checks:
        tasks = [
            (m, config.n_max, tuple(spec_checks), config.variants)
            for m in range(1, config.m_max + 1)
        ]
        if config.workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=config.workers) as pool:
                partials = list(pool.map(_rows_for_modulus, tasks))
        else:
            partials = [_rows_for_modulus(t) for t in tasks]
        for partial in partials:
            for name, rows in partial.items():
                by_check[name].extend(rows)

    if "erdos" in by_check:
        by_check["erdos"] = [rep.as_row() for rep in bounds.check_erdos(config.n_max)]
    if "helpers" in by_check:
        by_check["helpers"] = _helper_rows(
            config.m_max, min(config.n_max, SQRT_SWEEP_N_MAX)
        )
    if "remark" in by_check:
        by_check["remark"] = [
            rep.as_row()
            for rep in series.find_counterexample_odd_remark(series.default_x_grid())
        ]

    result = VerifyResult()
    for name in config.checks:
        rows = by_check[name]
        result.summaries.append(_summarize(name, rows))
        result.rows.extend(rows)
    return result


# --- per-spec tables for the table/sweep commands ------------------------------


def table_rows(spec: ResidueSpec, n_max: int, factory: TableFactory | None = None) -> list[dict]:
    """Per-n rows: the three counts, the tail bound, its slack, the ratio."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    factory = factory or TableFactory(n_max)
    full = factory.full_a(spec)
    tail = factory.aplus(spec)
    head = factory.rplus(spec)
    params = bounds.BoundParams.from_spec(spec)
    rows = []
    for n in range(n_max + 1):
        bound = params.c * math.sqrt(n)
        tail_count = tail.values[n]
        slack = bound - bounds.log_of_count(tail_count) if tail_count > 0 else None
        full_count = full.values[n]
        if n >= 1 and full_count >= 1 and params.c > 0:
            ratio = bounds.asymptotic_ratio(spec, n, count=full_count)
        else:
            ratio = None
        rows.append(
            {
                "n": n,
                "p_a": str(full_count),
                "p_a_plus": str(tail_count),
                "p_r_plus": str(head.values[n]),
                "bound": bound,
                "slack": slack,
                "ratio": ratio,
            }
        )
    return rows


def sweep_rows(m_max: int, n_max: int, workers: int = 1) -> list[dict]:
    """table_rows for every nonempty subset of every modulus up to m_max."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    tasks = [(m, n_max) for m in range(1, m_max + 1)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_sweep_rows_for_modulus, tasks))
    else:
        partials = [_sweep_rows_for_modulus(t) for t in tasks]
    out: list[dict] = []
    for partial in partials:
        out.extend(partial)
    return out


def _sweep_rows_for_modulus(args: tuple) -> list[dict]:
    m, n_max = args
    factory = TableFactory(n_max)
    rows = []
    for spec in subsets_for_modulus(m, include_empty=False):
        for row in table_rows(spec, n_max, factory=factory):
            rows.append({"m": spec.m, "R": list(spec.residues), **row})
    return rows
