"""Real-argument special functions used by the domain catalog.

Gamma and Beta come from the C library via ``math`` (relative error well
inside 1e-12 on the range used here, validated against the reflection
identity in the test suite).  The generalized hypergeometric series at
argument 1 is summed directly by its term-ratio recurrence with an
explicit tail estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .backend import jit
from .errors import DivergentSeries, DomainError, ToleranceUnreachable, UnsupportedParameter

PFQ_TERM_BUDGET = 10_000_000


def gamma(x: float) -> float:
    """Gamma function for x > 0."""
    if not (x > 0.0) or math.isinf(x):
        raise DomainError(f"gamma requires x > 0, got {x}")
    return math.gamma(x)


def beta(a: float, b: float) -> float:
    """Euler Beta via log-gamma; DomainError for nonpositive arguments.

    The Beta integral diverges at a <= 0 or b <= 0, which is exactly how
    divergent wedge exit times announce themselves downstream.
    """
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"beta requires positive arguments, got ({a}, {b})")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def pochhammer(p: float, n: int) -> float:
    """Rising factorial (p)_n = p (p+1) ... (p+n-1), with (p)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer order must be nonnegative")
    out = 1.0
    for k in range(n):
        out *= p + k
    return out


def gauss_2f1_at_1(a: float, b: float, c: float) -> float:
    """2F1(a, b; c; 1) by the Gauss summation formula.

    Returns math.inf when c - a - b <= 0 (the series diverges there).
    """
    if c <= 0.0 and c == int(c):
        raise DomainError("c must not be a nonpositive integer")
    s = c - a - b
    if s <= 0.0:
        return math.inf
    for arg in (c, c - a, c - b):
        if arg <= 0.0:
            raise DomainError(f"gamma argument {arg} <= 0 outside the divergent case")
    return math.exp(
        math.lgamma(c) + math.lgamma(s) - math.lgamma(c - a) - math.lgamma(c - b)
    )


@dataclass(frozen=True)
class HyperGeomParams:
    """Parameter lists for pFq evaluated at argument 1."""

    numerator: tuple[float, ...]
    denominator: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(float(a) for a in self.numerator))
        object.__setattr__(self, "denominator", tuple(float(b) for b in self.denominator))
        for b in self.denominator:
            if b <= 0.0 and b == int(b):
                raise DomainError(f"denominator parameter {b} is a nonpositive integer")

    @property
    def convergence_margin(self) -> float:
        return sum(self.denominator) - sum(self.numerator)


@dataclass(frozen=True)
class PFQResult:
    value: float
    tail_bound: float
    terms_used: int


@jit()
def _pfq_sum(num, den, s, tol, budget):
    """Term-ratio summation; returns (sum, bound, terms, certified flag).

    Tail estimate once past the largest parameter: the larger of a
    geometric comparison with the current ratio and the algebraic
    envelope t_n * n / s for terms decaying like n^{-1-s}.
    """
    n_big = 2.0
    for i in range(num.shape[0]):
        n_big = max(n_big, abs(num[i]) + 1.0)
    for j in range(den.shape[0]):
        n_big = max(n_big, abs(den[j]) + 1.0)

    total = 1.0
    term = 1.0
    n = 0
    while n < budget:
        ratio = 1.0
        for i in range(num.shape[0]):
            ratio *= num[i] + n
        for j in range(den.shape[0]):
            ratio /= den[j] + n
        ratio /= n + 1.0
        term *= ratio
        total += term
        n += 1
        if n > n_big:
            abs_term = abs(term)
            abs_ratio = abs(ratio)
            geo = abs_term * abs_ratio / (1.0 - abs_ratio) if abs_ratio < 1.0 else np.inf
            alg = abs_term * n / s
            bound = max(geo, alg)
            if bound <= tol:
                return total, bound, n, True
    return total, np.inf, n, False


def pfq_at_1(
    params: HyperGeomParams, tol: float, term_budget: int = PFQ_TERM_BUDGET
) -> PFQResult:
    """Sum pFq at argument 1 until the tail estimate drops below tol."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    s = params.convergence_margin
    if len(params.numerator) >= len(params.denominator) + 1 and s <= 0.0:
        raise DivergentSeries(
            f"pFq at 1 diverges: convergence margin {s} <= 0"
        )
    num = np.asarray(params.numerator, dtype=float)
    den = np.asarray(params.denominator, dtype=float)
    total, bound, terms, ok = _pfq_sum(num, den, max(s, 1e-300), tol, term_budget)
    if not ok:
        raise ToleranceUnreachable(
            f"pFq tail estimate above {tol} after {terms} terms",
            partial_sum=total,
            terms_used=terms,
        )
    return PFQResult(float(total), float(bound), int(terms))


def wedge_bounds(p: float) -> tuple[float, float]:
    """Certified bracket for the exit time of the infinite wedge of opening pi*p.

    The wedge {|Arg z| < pi p / 2} from base point 1 is sandwiched between
    the domain {Re(z^{1/p}) > 1/2} and its affine enlargement, whose exit
    times are (G - 1)/2 and 2^{2p}/(2 (2^p - 1)^2) * (G - 1) with
    G = beta(p, 1-2p) / (Gamma(1-p) Gamma(p)).  The pair is returned
    sorted ascending, i.e. (smaller domain's value, larger domain's value);
    domain monotonicity of exit times fixes that orientation.  For
    p >= 1/2 the Beta factor raises DomainError: both ends are infinite.
    """
    if not 0.0 < p < 1.0:
        raise UnsupportedParameter(f"wedge parameter must lie in (0, 1), got {p}")
    g = beta(p, 1.0 - 2.0 * p) / (gamma(1.0 - p) * gamma(p))
    inner = 0.5 * (g - 1.0)
    outer = 2.0 ** (2.0 * p) / (2.0 * (2.0**p - 1.0) ** 2) * (g - 1.0)
    return (min(inner, outer), max(inner, outer))


def mgon_sidelength_factor(m: int) -> float:
    """g(1) = beta(1/m, (m-2)/m) / m, the vertex radius scale of the m-gon map."""
    if m < 3:
        raise UnsupportedParameter(f"regular m-gon needs m >= 3, got {m}")
    return beta(1.0 / m, (m - 2.0) / m) / m


def mgon_exit_time(m: int, tol: float = 1e-8) -> float:
    """Expected exit time from the center of the regular m-gon with unit vertices.

    Equals 4F3(1/m,1/m,2/m,2/m; (m+1)/m,(m+1)/m,1; 1) * m^2 / (2 beta(1/m,(m-2)/m)^2).
    """
    if m < 3:
        raise UnsupportedParameter(f"regular m-gon needs m >= 3, got {m}")
    w = mgon_sidelength_factor(m)
    scale = 1.0 / (2.0 * w * w)
    params = HyperGeomParams(
        numerator=(1.0 / m, 1.0 / m, 2.0 / m, 2.0 / m),
        denominator=((m + 1.0) / m, (m + 1.0) / m, 1.0),
    )
    res = pfq_at_1(params, tol / scale)
    return res.value * scale


def hyp2f1_series(a: float, b: float, c: float, w) -> np.ndarray:
    """2F1(a, b; c; w) for |w| < 1 by direct summation (complex w allowed)."""
    w = np.asarray(w, dtype=complex)
    wmax = float(np.max(np.abs(w))) if w.size else 0.0
    if wmax >= 1.0:
        raise DomainError("hyp2f1_series requires |w| < 1")
    total = np.ones_like(w)
    term = np.ones_like(w)
    coef = 1.0
    n = 0
    while True:
        coef *= (a + n) * (b + n) / ((c + n) * (n + 1.0))
        term = term * w
        total = total + coef * term
        n += 1
        if abs(coef) * wmax**n < 1e-17 * max(1.0, wmax) or n > 100_000:
            break
    return total
