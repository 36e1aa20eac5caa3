"""Analytic identities and pointwise inequalities behind the tail-set bound.

Checked numerically at double precision:

* the weighted tail series ``sum_{a in A+} a*t**a`` against its closed form
  ``sum_r ((r+m)*t**(r+m) - r*t**(2m+r)) / (1 - t**m)**2``;
* the per-residue kernel bound (lhs of the closed form at t = e**-x is at
  most ``1/(m*x**2)``) and its summed version (at most ``|R|/(m*x**2)``);
* the helper facts ``e**(x/2) - e**(-x/2) > x``, the monotone envelope
  ``(r+m)e**(-rx) - r*e**(-(m+r)x) <= m`` with equality at 0, and
  ``sqrt(n-ak) <= sqrt(n) - ak/(2*sqrt(n))``;
* the failure of the analogous kernel bound for the odd-part full set,
  ``(e**-x + e**-3x)/(1 - e**-2x)**2 <= 1/(2x**2)``, which is false: the
  finder reports every grid point where it breaks.

Near-singular denominators always go through expm1, so the two sides of
each inequality keep ~15 significant digits even as both blow up like
1/x**2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .partset import ResidueSpec

# One-sided checks: absolute tolerance at moderate x, scaled to the
# magnitude of the bound where both sides blow up.
EPS_ONE_SIDED = 1e-9
SERIES_REL_TOL = 1e-9
TAIL_RULE_REL = 1e-12
TAIL_RULE_START = 64
TAIL_RULE_CAP = 2**20


def one_sided_eps(x: float, rhs: float) -> float:
    """Comparison slack for an inequality checked at x with right side rhs."""
    if x < 1e-2:
        return EPS_ONE_SIDED * abs(rhs)
    return EPS_ONE_SIDED


@dataclass(frozen=True)
class SeriesPoint:
    """An evaluation point, carried both as x > 0 and as t = e**-x in (0,1)."""

    x: float
    t: float

    @classmethod
    def from_x(cls, x: float) -> "SeriesPoint":
        if x <= 0:
            raise ValueError(f"x must be > 0, got {x}")
        return cls(x=x, t=math.exp(-x))

    @classmethod
    def from_t(cls, t: float) -> "SeriesPoint":
        if not 0.0 < t < 1.0:
            raise ValueError(f"t must lie in (0, 1), got {t}")
        return cls(x=-math.log(t), t=t)


@dataclass(frozen=True)
class SeriesCheckReport:
    """One evaluated check; margin semantics depend on the check.

    For one-sided inequalities margin = rhs - lhs (nonnegative means the
    inequality holds); for identities margin = |lhs - rhs|.  The finder for
    the odd-part counterexample inverts this: margin = lhs - rhs measures
    the violation it is looking for.
    """

    check: str
    point: SeriesPoint
    lhs: float
    rhs: float
    margin: float
    holds: bool
    m: int | None = None
    residues: tuple[int, ...] | None = None
    r: int | None = None

    def as_row(self) -> dict:
        return {
            "check": self.check,
            "m": self.m,
            "R": list(self.residues) if self.residues is not None else None,
            "r": self.r,
            "x": self.point.x,
            "t": self.point.t,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "holds": self.holds,
        }


def default_x_grid(
    num: int = 200, lo_exp: float = -3.0, hi_exp: float = 2.0
) -> list[float]:
    """Log-spaced grid on [10**lo_exp, 10**hi_exp], plus the exact unit point.

    The raw 200-point spacing never lands on x = 1.0 exactly, and the
    odd-part counterexample is traditionally quoted there, so 1.0 is
    inserted explicitly.
    """
    step = (hi_exp - lo_exp) / (num - 1)
    pts = [10.0 ** (lo_exp + i * step) for i in range(num)]
    if 1.0 not in pts:
        pts.append(1.0)
        pts.sort()
    return pts


def default_t_grid() -> list[float]:
    """Uniform t grid {0.05, 0.10, ..., 0.95}."""
    return [i / 20 for i in range(1, 20)]


# --- the weighted tail series and its closed form ----------------------------


def lhs_series_truncated(spec: ResidueSpec, t: float, cutoff: int) -> float:
    """Partial sum of ``a * t**a`` over tail-set members a <= cutoff.

    Terms are accumulated in increasing a; powers advance by repeated
    multiplication with t**m within each residue class.
    """
    if not 0.0 < t < 1.0:
        raise ValueError(f"t must lie in (0, 1), got {t}")
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    m = spec.m
    residues = spec.residues
    if not residues:
        return 0.0
    tm = t**m
    powers = [t ** (m + r) for r in residues]
    total = 0.0
    k = 1
    while m * k + residues[0] <= cutoff:
        base = m * k
        for i, r in enumerate(residues):
            a = base + r
            if a > cutoff:
                break
            total += a * powers[i]
            powers[i] *= tm
        k += 1
    return total


@dataclass(frozen=True)
class TruncationResult:
    """Outcome of the doubling tail rule for the truncated series."""

    value: float
    cutoff: int
    converged: bool


def series_sum_adaptive(
    spec: ResidueSpec,
    t: float,
    *,
    start: int = TAIL_RULE_START,
    cap: int = TAIL_RULE_CAP,
    rel_tol: float = TAIL_RULE_REL,
) -> TruncationResult:
    """Sum the tail series with cutoff doubling until the increment is tiny.

    Doubles the cutoff from ``start`` until the last doubling changes the
    partial sum by less than ``rel_tol`` relatively, giving a certified
    truncation without symbolic tail bounds.  Gives up (converged=False)
    past ``cap`` terms, which occurs only as t approaches 1.
    """
    if not 0.0 < t < 1.0:
        raise ValueError(f"t must lie in (0, 1), got {t}")
    if not spec.residues:
        return TruncationResult(value=0.0, cutoff=start, converged=True)
    cutoff = start
    value = lhs_series_truncated(spec, t, cutoff)
    while cutoff <= cap // 2:
        cutoff *= 2
        extended = lhs_series_truncated(spec, t, cutoff)
        if extended == 0.0:
            return TruncationResult(value=extended, cutoff=cutoff, converged=True)
        if (extended - value) <= rel_tol * extended:
            return TruncationResult(value=extended, cutoff=cutoff, converged=True)
        value = extended
    return TruncationResult(value=value, cutoff=cutoff, converged=False)


def rhs_closed_form(spec: ResidueSpec, t: float) -> float:
    """Closed form of the weighted tail series at t in (0, 1)."""
    if not 0.0 < t < 1.0:
        raise ValueError(f"t must lie in (0, 1), got {t}")
    m = spec.m
    den = 1.0 - t**m
    den2 = den * den
    total = 0.0
    for r in spec.residues:
        total += ((r + m) * t ** (r + m) - r * t ** (2 * m + r)) / den2
    return total


def _kernel_term(r: int, m: int, x: float) -> float:
    """One residue's closed-form term at t = e**-x, via expm1.

    ((r+m)e**-(r+m)x - r e**-(2m+r)x) / (1 - e**-mx)**2, stable for tiny x.
    """
    den = -math.expm1(-m * x)
    num = (r + m) * math.exp(-(r + m) * x) - r * math.exp(-(2 * m + r) * x)
    return num / (den * den)


def closed_form_exp_arg(spec: ResidueSpec, x: float) -> float:
    """Closed form of the tail series at t = e**-x, cancellation-safe."""
    if x <= 0:
        raise ValueError(f"x must be > 0, got {x}")
    return sum(_kernel_term(r, spec.m, x) for r in spec.residues)


def check_eq1(spec: ResidueSpec, t: float) -> SeriesCheckReport:
    """Truncated tail series vs. closed form, within relative tolerance."""
    result = series_sum_adaptive(spec, t)
    rhs = rhs_closed_form(spec, t)
    diff = abs(result.value - rhs)
    scale = max(abs(rhs), abs(result.value))
    margin = diff / scale if scale > 0 else 0.0
    holds = result.converged and margin <= SERIES_REL_TOL
    return SeriesCheckReport(
        check="eq1",
        point=SeriesPoint.from_t(t),
        lhs=result.value,
        rhs=rhs,
        margin=margin,
        holds=holds,
        m=spec.m,
        residues=spec.residues,
    )


# --- pointwise inequalities ---------------------------------------------------


def check_eq2_pointwise(r: int, m: int, x: float) -> SeriesCheckReport:
    """Per-residue kernel bound: closed-form term at e**-x vs. 1/(m*x**2)."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if not 0 <= r <= m - 1:
        raise ValueError(f"residue {r} out of range [0, {m - 1}]")
    if x <= 0:
        raise ValueError(f"x must be > 0, got {x}")
    lhs = _kernel_term(r, m, x)
    rhs = 1.0 / (m * x * x)
    margin = rhs - lhs
    return SeriesCheckReport(
        check="eq2",
        point=SeriesPoint.from_x(x),
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        holds=margin >= -one_sided_eps(x, rhs),
        m=m,
        r=r,
    )


def check_eq3(spec: ResidueSpec, x: float) -> SeriesCheckReport:
    """Summed kernel bound: tail series at e**-x vs. |R|/(m*x**2)."""
    lhs = closed_form_exp_arg(spec, x)
    rhs = spec.rsize / (spec.m * x * x)
    margin = rhs - lhs
    return SeriesCheckReport(
        check="eq3",
        point=SeriesPoint.from_x(x),
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        holds=margin >= -one_sided_eps(x, rhs),
        m=spec.m,
        residues=spec.residues,
    )


def check_sinh_inequality(x: float) -> SeriesCheckReport:
    """Strict gap e**(x/2) - e**(-x/2) > x, plus its reciprocal consequence.

    The equivalent consequence e**-x / (1 - e**-x)**2 < 1/x**2 is evaluated
    through the same sinh expression, so both must hold strictly.  The
    margin near 0 behaves like x**3/24 and needs full double precision.
    """
    if x <= 0:
        raise ValueError(f"x must be > 0, got {x}")
    gap = 2.0 * math.sinh(0.5 * x)
    primary = gap > x
    # consequence: 1/gap**2 < 1/x**2  (gap may overflow for huge x; then it holds)
    if math.isinf(gap):
        consequence = True
    else:
        consequence = 1.0 / (gap * gap) < 1.0 / (x * x)
    return SeriesCheckReport(
        check="sinh",
        point=SeriesPoint.from_x(x),
        lhs=x,
        rhs=gap,
        margin=gap - x,
        holds=primary and consequence,
    )


def check_sqrt_inequality(n: int, a: int, k: int) -> bool:
    """sqrt(n - a*k) <= sqrt(n) - a*k/(2*sqrt(n)), for 1 <= a*k <= n."""
    if n < 1 or a < 1 or k < 1:
        raise ValueError("n, a, k must all be >= 1")
    if a * k > n:
        raise ValueError(f"a*k = {a * k} exceeds n = {n}")
    root_n = math.sqrt(n)
    return math.sqrt(n - a * k) <= root_n - (a * k) / (2.0 * root_n) + EPS_ONE_SIDED


def check_derivative_nonpositive(
    r: int, m: int, x_grid: list[float]
) -> list[SeriesCheckReport]:
    """Monotone-envelope facts for (r+m)e**(-rx) - r*e**(-(m+r)x).

    Emits, per grid point x >= 0: the derivative value
    r(r+m)(e**(-(m+r)x) - e**(-rx)) checked nonpositive, and the envelope
    value checked at most m.  At x = 0 the envelope must equal m exactly.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if not 0 <= r <= m - 1:
        raise ValueError(f"residue {r} out of range [0, {m - 1}]")
    out = []
    for x in x_grid:
        if x < 0:
            raise ValueError(f"grid points must be >= 0, got {x}")
        point = SeriesPoint.from_x(x) if x > 0 else SeriesPoint(x=0.0, t=1.0)
        deriv = r * (r + m) * (math.exp(-(m + r) * x) - math.exp(-r * x))
        out.append(
            SeriesCheckReport(
                check="envelope-derivative",
                point=point,
                lhs=deriv,
                rhs=0.0,
                margin=-deriv,
                holds=deriv <= EPS_ONE_SIDED,
                m=m,
                r=r,
            )
        )
        envelope = (r + m) * math.exp(-r * x) - r * math.exp(-(m + r) * x)
        if x == 0:
            margin = abs(envelope - m)
            holds = margin <= 1e-12
            label = "envelope-at-zero"
        else:
            margin = m - envelope
            holds = margin >= -EPS_ONE_SIDED
            label = "envelope-cap"
        out.append(
            SeriesCheckReport(
                check=label,
                point=point,
                lhs=envelope,
                rhs=float(m),
                margin=margin,
                holds=holds,
                m=m,
                r=r,
            )
        )
    return out


def find_counterexample_odd_remark(x_grid: list[float]) -> list[SeriesCheckReport]:
    """Grid points where (e**-x + e**-3x)/(1 - e**-2x)**2 > 1/(2x**2).

    This is the kernel bound one would want for the odd-part FULL set; it
    is false, and the returned reports are the witnesses.  Margin is the
    violation lhs - rhs; only genuinely violating points (beyond the
    comparison slack) are reported.
    """
    out = []
    for x in x_grid:
        if x <= 0:
            raise ValueError(f"grid points must be > 0, got {x}")
        den = -math.expm1(-2.0 * x)
        lhs = (math.exp(-x) + math.exp(-3.0 * x)) / (den * den)
        rhs = 1.0 / (2.0 * x * x)
        margin = lhs - rhs
        if margin > one_sided_eps(x, rhs):
            out.append(
                SeriesCheckReport(
                    check="odd-remark",
                    point=SeriesPoint.from_x(x),
                    lhs=lhs,
                    rhs=rhs,
                    margin=margin,
                    holds=True,
                )
            )
    return out
