"""Series engine for expected exit times.

For an analytic map f(z) = sum a_n z^n that is conformal (or B-proper) on
the unit disc, the expected time for planar Brownian motion started at
f(0) to leave f(rD) equals (1/2) sum_{n>=1} |a_n|^2 r^{2n}.  The engine
evaluates that series with a certified truncation bound derived from the
stream's growth class or from a stream-supplied tail bracket, detects
provable divergence, and refuses to make claims it cannot certify.

The series is computed unconditionally from the coefficients; whether the
value is an exit time is the caller's responsibility (it requires the map
to be conformal or B-proper on the disc).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ToleranceUnreachable
from .streams import (
    BoundedByLinear,
    CoefficientStream,
    FiniteSupport,
    Geometric,
)

DEFAULT_TERM_BUDGET = 1_000_000
MAX_CERTIFIED_TERMS = 2**28
DIVERGENCE_GUARD = 1e12

STATUS_FINITE = "finite"
STATUS_DIVERGENT = "divergent"


@dataclass(frozen=True)
class ExitTimeResult:
    """Outcome of a series evaluation.

    For finite results, |value - true| <= tail_bound is certified.
    ``partial_sum`` is the raw half-sum of the computed terms; it differs
    from ``value`` when a two-sided tail bracket supplied a midpoint
    correction.
    """

    status: str
    value: float | None
    tail_bound: float | None
    terms_used: int
    radius: float
    partial_sum: float | None = None

    @property
    def is_finite(self) -> bool:
        return self.status == STATUS_FINITE


def default_tolerance(r: float) -> float:
    return 1e-10 if r <= 0.95 else 1e-6


def growth_tail_bound(growth, n_terms: int, r: float) -> float:
    """Upper bound for sum_{n > n_terms} |a_n|^2 r^{2n} from the growth class."""
    if isinstance(growth, FiniteSupport):
        return 0.0 if n_terms >= growth.last_index else np.inf
    if isinstance(growth, Geometric):
        q = (growth.ratio * r) ** 2
        if q >= 1.0:
            return np.inf
        return growth.scale**2 * q ** (n_terms + 1) / (1.0 - q)
    if isinstance(growth, BoundedByLinear):
        return linear_coeff_tail(n_terms, r)
    return np.inf


def linear_coeff_tail(n_terms: int, r: float) -> float:
    """Closed form of sum_{n > N} n^2 x^n with x = r^2 (infinite at r = 1)."""
    x = r * r
    if x >= 1.0:
        return np.inf
    n = float(n_terms)
    poly = (n + 1.0) ** 2 - (2.0 * n * n + 2.0 * n - 1.0) * x + n * n * x * x
    return x ** (n + 1.0) * poly / (1.0 - x) ** 3
    # N = 0 reduces to x(1+x)/(1-x)^3, the generating function of n^2.


def _tail_info(coeffs: CoefficientStream, n_terms: int, r: float):
    """(error_bound_on_value, correction, raw_bracket) after summing n_terms."""
    br = coeffs.tail_bracket(n_terms, r)
    if br is not None:
        lo, hi = br
        if lo > 0.0:
            # Two-sided bracket: midpoint correction halves the error.
            return (hi - lo) / 4.0, (hi + lo) / 4.0, br
        return hi / 2.0, 0.0, br
    hi = growth_tail_bound(coeffs.growth, n_terms, r)
    return hi / 2.0, 0.0, (0.0, hi)


def exit_time_series(
    coeffs: CoefficientStream,
    r: float,
    tol: float | None = None,
    *,
    term_budget: int = DEFAULT_TERM_BUDGET,
) -> ExitTimeResult:
    """Evaluate (1/2) sum_{n>=1} |a_n|^2 r^{2n} with a certified error bound.

    Returns a finite result with tail_bound <= tol when the growth class or
    a stream tail bracket certifies the truncation error, and a divergent
    result when divergence is provable.  Raises ToleranceUnreachable when
    neither is possible within the term budget.
    """
    if not 0.0 < r <= 1.0:
        raise ValueError(f"r must lie in (0, 1], got {r}")
    if tol is None:
        tol = default_tolerance(r)
    if tol <= 0.0:
        raise ValueError("tol must be positive")

    if coeffs.certified_divergent(r):
        return ExitTimeResult(STATUS_DIVERGENT, None, None, 0, r)

    growth = coeffs.growth
    if isinstance(growth, FiniteSupport):
        n = max(growth.last_index, 1)
        s = coeffs.weighted_partial_sum(n, r)
        return ExitTimeResult(STATUS_FINITE, 0.5 * s, 0.0, n, r, partial_sum=0.5 * s)

    # Tail bounds are analytic in n_terms, so the truncation point can be
    # chosen before any summation by doubling on the bound alone.
    n = 64
    err, _, _ = _tail_info(coeffs, n, r)
    while err > tol and n < MAX_CERTIFIED_TERMS:
        n *= 2
        err, _, _ = _tail_info(coeffs, n, r)

    if err <= tol:
        s = coeffs.weighted_partial_sum(n, r)
        err, correction, _ = _tail_info(coeffs, n, r)
        half = 0.5 * s
        return ExitTimeResult(
            STATUS_FINITE, half + correction, err, n, r, partial_sum=half
        )

    return _uncertified_scan(coeffs, r, term_budget)


def _uncertified_scan(coeffs, r, term_budget):
    """Sum without a bound, watching for provable divergence.

    Positive terms that never decrease force divergence, so a partial sum
    crossing the overflow guard with a non-decreasing term trend is a
    certificate; anything else is reported as unreachable tolerance.
    """
    block = 4096
    total = 0.0
    prev_term = -np.inf
    nondecreasing = True
    n_done = 0
    while n_done < term_budget:
        lo = n_done + 1
        hi = min(lo + block, term_budget + 1)
        a2 = coeffs.abs2(lo, hi)
        if r == 1.0:
            terms = a2
        else:
            terms = a2 * (r * r) ** np.arange(lo, hi, dtype=float)
        with np.errstate(over="ignore"):
            total += float(np.sum(terms))
        if terms.size:
            seq = np.concatenate(([prev_term], terms))
            if np.any(np.diff(seq) < -1e-12 * np.maximum(seq[:-1], 1e-300)):
                nondecreasing = False
            prev_term = float(terms[-1])
        n_done = hi - 1
        if 0.5 * total > DIVERGENCE_GUARD or not np.isfinite(total):
            if nondecreasing:
                return ExitTimeResult(STATUS_DIVERGENT, None, None, n_done, r)
            break
    raise ToleranceUnreachable(
        f"no certified bound within {n_done} terms at r={r}",
        partial_sum=0.5 * total,
        terms_used=n_done,
    )


def hardy_h2_norm_sq(coeffs: CoefficientStream, tol: float | None = None) -> ExitTimeResult:
    """sum_{n>=0} |a_n|^2, i.e. |a_0|^2 plus twice the r = 1 exit-time series."""
    if tol is None:
        tol = default_tolerance(1.0)
    res = exit_time_series(coeffs, 1.0, tol / 2.0)
    if not res.is_finite:
        return res
    a0 = abs(coeffs.coeff(0)) ** 2
    return ExitTimeResult(
        STATUS_FINITE,
        2.0 * res.value + a0,
        2.0 * res.tail_bound,
        res.terms_used,
        1.0,
        partial_sum=2.0 * res.partial_sum + a0,
    )


def parseval_discrepancy(
    coeffs: CoefficientStream,
    evaluator,
    s: float,
    n_samples: int,
    n_terms: int,
) -> float:
    """Relative gap between the circle average of |f|^2 and the partial series.

    circle_average = mean_j |f(s e^{2 pi i j / n_samples})|^2 is compared
    with sum_{n<=n_terms} |a_n|^2 s^{2n}.  Used as a property-test
    primitive; the uniform grid makes the average exact for trigonometric
    polynomials up to the sampling degree.
    """
    if not 0.0 < s < 1.0:
        raise ValueError("s must lie in (0, 1)")
    if n_samples < 8:
        raise ValueError("n_samples must be at least 8")
    theta = 2.0 * np.pi * np.arange(n_samples) / n_samples
    z = s * np.exp(1j * theta)
    circle_average = float(np.mean(np.abs(np.asarray(evaluator(z))) ** 2))
    powers = (s * s) ** np.arange(n_terms + 1, dtype=float)
    series_partial = float(np.dot(coeffs.abs2(0, n_terms + 1), powers))
    return abs(circle_average - series_partial) / max(1.0, series_partial)


def suggest_parseval_terms(s: float, tol: float = 1e-9) -> int:
    """Truncation depth making the |a_n| <= n tail of the Parseval sum <= tol."""
    n = 8
    while linear_coeff_tail(n, s) > tol:
        n *= 2
        if n > 2**24:
            raise ValueError("no reasonable truncation depth; s too close to 1")
    return n
