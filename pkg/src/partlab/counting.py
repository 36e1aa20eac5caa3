"""Exact partition counting with three mutually independent engines.

All counts are exact Python integers (arbitrary precision, never floats):

* ``count_dp`` - coin-change style accumulation, the workhorse;
* ``count_recurrence`` - bottom-up evaluation of the double-counting
  identity ``n * p(n) = sum_{s <= n} s * sum_{k >= 1} p(n - s*k)``, with a
  hard divisibility assertion at every level;
* ``count_bruteforce`` - exhaustive enumeration of nonincreasing summand
  sequences, usable up to a configured ceiling.

The engines share no code paths, so agreement among them certifies each.
``TableFactory`` adds a fast exact route for sweeps over many residue
subsets: per-residue slice tables combined by packed convolution (see the
``packed`` module), cross-validated against ``count_dp`` in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import packed
from .partset import (
    A_PLUS,
    FULL_A,
    R_PLUS,
    PartSetVariant,
    ResidueSpec,
    parts_up_to,
)

# Partition counts are plain ints; the alias marks contract boundaries.
BigCount = int

ORACLE_CEILING_DEFAULT = 60


class IntegrityError(RuntimeError):
    """An exact identity that is a theorem failed; indicates an engine bug."""


@dataclass(frozen=True)
class CountTable:
    """Counts of partitions of 0..n from a fixed part list; immutable."""

    parts: tuple[int, ...]
    values: tuple[BigCount, ...]

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> BigCount:
        return self.values[n]


@dataclass(frozen=True)
class MultiplicityQuery:
    """Ask about partitions where part ``s`` appears ``t`` times."""

    s: int
    t: int

    def __post_init__(self) -> None:
        if self.s < 1:
            raise ValueError(f"part must be >= 1, got {self.s}")
        if self.t < 0:
            raise ValueError(f"multiplicity must be >= 0, got {self.t}")


def _validated_parts(parts: Iterable[int]) -> tuple[int, ...]:
    ps = tuple(parts)
    prev = 0
    for p in ps:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"parts must be positive integers, got {p!r}")
        if p <= prev:
            raise ValueError("parts must be strictly increasing")
        prev = p
    return ps


def count_dp(parts: Iterable[int], n: int) -> CountTable:
    """Exact counts of partitions of 0..n via part-by-part accumulation.

    Outer loop over parts, inner ascending loop over totals: unordered
    multiset semantics, so partitions are counted rather than compositions.
    """
    ps = _validated_parts(parts)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    values = [0] * (n + 1)
    values[0] = 1
    for a in ps:
        if a > n:
            break
        for j in range(a, n + 1):
            values[j] += values[j - a]
    return CountTable(parts=ps, values=tuple(values))


def count_recurrence(parts: Iterable[int], n: int) -> CountTable:
    """Exact counts built bottom-up from the double-counting identity.

    At each level j the accumulated sum ``sum_{s <= j} s * sum_k p(j - s*k)``
    must be divisible by j; that divisibility is a theorem, so failure
    raises IntegrityError rather than returning a wrong table.

    Memory is O(|parts| * n); intended as an oracle engine at moderate n.
    """
    ps = _validated_parts(parts)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    usable = [s for s in ps if s <= n]
    values = [0] * (n + 1)
    values[0] = 1
    # tail[s][j] = sum_{k >= 1, s*k <= j} values[j - s*k], built incrementally
    tail = {s: [0] * (n + 1) for s in usable}
    for j in range(1, n + 1):
        acc = 0
        for s in usable:
            if s > j:
                break
            row = tail[s]
            row[j] = values[j - s] + row[j - s]
            acc += s * row[j]
        if acc % j:
            raise IntegrityError(
                f"level {j}: weighted tail sum {acc} not divisible by {j}"
            )
        values[j] = acc // j
    return CountTable(parts=ps, values=tuple(values))


def count_bruteforce(
    parts: Iterable[int], n: int, *, ceiling: int = ORACLE_CEILING_DEFAULT
) -> BigCount:
    """Exact count by exhaustive enumeration of nonincreasing summands.

    Independent oracle: no memoization, no shared state with the other
    engines.  Rejects n above the ceiling because the walk visits every
    partition once.
    """
    ps = _validated_parts(parts)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > ceiling:
        raise ValueError(f"n={n} exceeds brute-force ceiling {ceiling}")
    if n == 0:
        return 1
    usable = [p for p in ps if p <= n]
    if not usable:
        return 0

    def walk(remaining: int, top: int) -> int:
        total = 0
        for i in range(top + 1):
            p = usable[i]
            if p > remaining:
                break
            if p == remaining:
                total += 1
            else:
                total += walk(remaining - p, i)
        return total

    return walk(n, len(usable) - 1)


# --- multiplicity-resolved counts -------------------------------------------


def count_exact_multiplicity(
    parts: Iterable[int], n: int, q: MultiplicityQuery
) -> BigCount:
    """Partitions of n where part s appears exactly t times.

    Equals the count over the part list without s at offset n - s*t.
    """
    ps = _validated_parts(parts)
    if q.s not in ps:
        raise ValueError(f"part {q.s} not in the part list")
    rest = n - q.s * q.t
    if rest < 0:
        return 0
    others = tuple(p for p in ps if p != q.s)
    return count_dp(others, rest).values[rest]


def count_min_multiplicity(
    parts: Iterable[int], n: int, q: MultiplicityQuery
) -> BigCount:
    """Partitions of n where part s appears at least t times.

    Removing t forced copies of s leaves an unconstrained count over the
    same part list: p(n - s*t).  Zero when s*t exceeds n.
    """
    ps = _validated_parts(parts)
    if q.s not in ps:
        raise ValueError(f"part {q.s} not in the part list")
    rest = n - q.s * q.t
    if rest < 0:
        return 0
    return count_dp(ps, rest).values[rest]


# --- identities --------------------------------------------------------------


def eq4_rhs_direct(table: CountTable, n: int) -> BigCount:
    """Literal evaluation of ``sum_{s <= n} s * sum_{1 <= k <= n/s} p(n - s*k)``."""
    if not 0 <= n <= table.n_max:
        raise ValueError(f"n={n} outside table range 0..{table.n_max}")
    values = table.values
    total = 0
    for s in table.parts:
        if s > n:
            break
        inner = 0
        for j in range(n - s, -1, -s):
            inner += values[j]
        total += s * inner
    return total


def eq4_rhs_all(table: CountTable) -> list[BigCount]:
    """The double-counting right side at every level 0..n, computed at once.

    Grouping the double sum by the product d = s*k turns it into the
    convolution of the count table with ``sigma(d) = sum of parts dividing d``,
    evaluated exactly by one packed multiply.
    """
    n = table.n_max
    sigma = [0] * (n + 1)
    for s in table.parts:
        if s > n:
            break
        for d in range(s, n + 1, s):
            sigma[d] += s
    return packed.convolve_truncated(table.values, sigma, n)


def check_eq4(table: CountTable) -> bool:
    """True iff ``n * p(n)`` matches the double-counting sum for all n."""
    rhs = eq4_rhs_all(table)
    return all(j * v == rhs[j] for j, v in enumerate(table.values))


@dataclass(frozen=True)
class ConvolutionReport:
    """One check of splitting partitions into head (R+) and tail (A+) parts."""

    n: int
    lhs: BigCount
    rhs: BigCount

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def convolution_check(spec: ResidueSpec, n: int) -> ConvolutionReport:
    """Verify p_A(n) = sum_{n'} p_{R+}(n') * p_{A+}(n - n') exactly.

    Every partition from the full set splits uniquely into its parts below
    m (members of R+) and its parts at least m (members of A+).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    full = count_dp(parts_up_to(spec, FULL_A, n), n).values
    head = count_dp(parts_up_to(spec, R_PLUS, n), n).values
    tail = count_dp(parts_up_to(spec, A_PLUS, n), n).values
    rhs = sum(head[k] * tail[n - k] for k in range(n + 1))
    return ConvolutionReport(n=n, lhs=full[n], rhs=rhs)


def convolution_check_range(spec: ResidueSpec, n_max: int) -> list[ConvolutionReport]:
    """Convolution identity at every 0 <= n <= n_max, sharing the tables."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    full = count_dp(parts_up_to(spec, FULL_A, n_max), n_max).values
    head = count_dp(parts_up_to(spec, R_PLUS, n_max), n_max).values
    tail = count_dp(parts_up_to(spec, A_PLUS, n_max), n_max).values
    out = []
    for n in range(n_max + 1):
        rhs = sum(head[k] * tail[n - k] for k in range(n + 1))
        out.append(ConvolutionReport(n=n, lhs=full[n], rhs=rhs))
    return out


# --- sweep-scale table factory -----------------------------------------------


class TableFactory:
    """Exact count tables for many residue subsets at one fixed n_max.

    The tail set of (m, R) is the disjoint union of its single-residue
    slices, so its count table is the convolution of the slice tables.
    The factory builds each slice table once per modulus, packs it, and
    combines subsets by packed products with prefix reuse; full-set tables
    extend the tail table with the small parts of R+.  All results are
    exact and agree with ``count_dp`` (asserted in the test suite).
    """

    def __init__(self, n_max: int) -> None:
        if n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {n_max}")
        self.n_max = n_max
        self._wbytes = packed.limb_bytes(n_max)
        self._mask = packed.truncation_mask(n_max + 1, self._wbytes)
        self._subset_packed: dict[tuple[int, int], object] = {}

    def _packed_for(self, m: int, bits: int):
        """Packed tail-set table for the residue subset encoded by bits."""
        if bits == 0:
            return packed.mpz(1)  # delta table: one empty partition
        key = (m, bits)
        cached = self._subset_packed.get(key)
        if cached is not None:
            return cached
        low = bits & -bits
        rest = bits ^ low
        if rest == 0:
            r = low.bit_length() - 1
            slice_table = count_dp(range(m + r, self.n_max + 1, m), self.n_max)
            value = packed.pack(slice_table.values, self._wbytes)
        else:
            value = (self._packed_for(m, rest) * self._packed_for(m, low)) & self._mask
        self._subset_packed[key] = value
        return value

    def aplus(self, spec: ResidueSpec) -> CountTable:
        """Counts over the tail set (all members >= m)."""
        bits = sum(1 << r for r in spec.residues)
        values = packed.unpack(
            self._packed_for(spec.m, bits), self.n_max + 1, self._wbytes
        )
        parts = tuple(parts_up_to(spec, A_PLUS, self.n_max))
        return CountTable(parts=parts, values=tuple(values))

    def full_a(self, spec: ResidueSpec) -> CountTable:
        """Counts over the full set: tail table extended by the R+ parts."""
        values = list(self.aplus(spec).values)
        for r in spec.residues:
            if r >= 1:
                for j in range(r, self.n_max + 1):
                    values[j] += values[j - r]
        parts = tuple(parts_up_to(spec, FULL_A, self.n_max))
        return CountTable(parts=parts, values=tuple(values))

    def rplus(self, spec: ResidueSpec) -> CountTable:
        """Counts over the head set R+ (at most m-1 small parts)."""
        return count_dp(parts_up_to(spec, R_PLUS, self.n_max), self.n_max)

    def table(self, spec: ResidueSpec, variant: PartSetVariant) -> CountTable:
        if variant == FULL_A:
            return self.full_a(spec)
        if variant == A_PLUS:
            return self.aplus(spec)
        if variant == R_PLUS:
            return self.rplus(spec)
        return count_dp(parts_up_to(spec, variant, self.n_max), self.n_max)
