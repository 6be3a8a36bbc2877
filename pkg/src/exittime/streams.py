"""Taylor-coefficient streams and stream algebra.

A stream exposes indexed coefficients a_0, a_1, ... together with a
declared growth class used to certify series truncation error.  Streams
are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMap


@dataclass(frozen=True)
class FiniteSupport:
    """coeff(n) == 0 for all n > last_index."""

    last_index: int


@dataclass(frozen=True)
class BoundedByLinear:
    """|coeff(n)| <= n for n >= 1 (the de Branges bound for schlicht maps)."""


@dataclass(frozen=True)
class Geometric:
    """|coeff(n)| <= scale * ratio**n with ratio in (0, 1)."""

    ratio: float
    scale: float = 1.0


@dataclass(frozen=True)
class Unknown:
    """No declared coefficient bound."""


GrowthClass = FiniteSupport | BoundedByLinear | Geometric | Unknown

_BLOCK = 4096


class CoefficientStream:
    """Base class: deterministic indexed coefficients plus tail certificates.

    Subclasses must implement ``coeff``.  ``min_abs = (c, n0)`` optionally
    declares |coeff(n)| >= c > 0 for all n >= n0, which certifies
    divergence of sum |a_n|^2 at r = 1.
    """

    growth: GrowthClass = Unknown()
    scale_note: str | None = None
    min_abs: tuple[float, int] | None = None

    def coeff(self, n: int) -> complex:
        raise NotImplementedError

    def abs2(self, start: int, stop: int) -> np.ndarray:
        """|coeff(n)|^2 for n in [start, stop). Subclasses may vectorize."""
        return np.array([abs(self.coeff(n)) ** 2 for n in range(start, stop)])

    def weighted_partial_sum(self, n_terms: int, r: float) -> float:
        """sum_{n=1}^{n_terms} |a_n|^2 r^{2n}, accumulated blockwise."""
        total = 0.0
        r2 = r * r
        for lo in range(1, n_terms + 1, _BLOCK):
            hi = min(lo + _BLOCK, n_terms + 1)
            a2 = self.abs2(lo, hi)
            if r == 1.0:
                total += float(np.sum(a2))
            else:
                total += float(np.sum(a2 * r2 ** np.arange(lo, hi, dtype=float)))
        return total

    def tail_bracket(self, n_terms: int, r: float) -> tuple[float, float] | None:
        """Certified (lo, hi) bracket of sum_{n > n_terms} |a_n|^2 r^{2n}, or None.

        None means the series engine falls back to the declared growth class.
        """
        return None

    def certified_divergent(self, r: float) -> bool:
        """True when sum_n |a_n|^2 r^{2n} provably diverges."""
        if r >= 1.0 and self.min_abs is not None:
            c, _ = self.min_abs
            return c > 0.0
        return False


class ArrayStream(CoefficientStream):
    """Finitely supported stream backed by an explicit coefficient array."""

    def __init__(self, values, scale_note=None):
        vals = np.asarray(values, dtype=complex)
        self._values = vals
        self._abs2 = np.abs(vals) ** 2
        self.growth = FiniteSupport(len(vals) - 1)
        self.scale_note = scale_note

    def coeff(self, n: int) -> complex:
        if 0 <= n < len(self._values):
            return complex(self._values[n])
        return 0j

    def abs2(self, start: int, stop: int) -> np.ndarray:
        out = np.zeros(stop - start)
        hi = min(stop, len(self._values))
        if hi > start:
            out[: hi - start] = self._abs2[start:hi]
        return out

    def tail_bracket(self, n_terms, r):
        if n_terms >= len(self._values) - 1:
            return (0.0, 0.0)
        return None


class CallableStream(CoefficientStream):
    """Stream defined by a coefficient function, for ad-hoc construction."""

    def __init__(self, coeff_fn, growth: GrowthClass = Unknown(), min_abs=None, scale_note=None):
        self._fn = coeff_fn
        self.growth = growth
        self.min_abs = min_abs
        self.scale_note = scale_note

    def coeff(self, n: int) -> complex:
        return complex(self._fn(n))


class NormalizedStream(CoefficientStream):
    """View of a stream divided by its first coefficient, with a_0 dropped.

    Tail certificates are inherited from the base stream scaled by
    1/|a_1|^2; the declared growth class is remapped exactly where
    possible and left Unknown otherwise.
    """

    def __init__(self, base: CoefficientStream, a1: complex):
        self._base = base
        self._a1 = a1
        self._inv2 = 1.0 / abs(a1) ** 2
        g = base.growth
        if isinstance(g, FiniteSupport):
            self.growth = g
        elif isinstance(g, Geometric):
            self.growth = Geometric(g.ratio, g.scale / abs(a1))
        elif isinstance(g, BoundedByLinear) and abs(a1) >= 1.0:
            self.growth = g
        else:
            self.growth = Unknown()
        if base.min_abs is not None:
            c, n0 = base.min_abs
            self.min_abs = (c / abs(a1), n0)
        self.scale_note = base.scale_note

    def coeff(self, n: int) -> complex:
        if n == 0:
            return 0j
        return self._base.coeff(n) / self._a1

    def abs2(self, start, stop):
        out = self._base.abs2(start, stop) * self._inv2
        if start == 0:
            out[0] = 0.0
        return out

    def tail_bracket(self, n_terms, r):
        br = self._base.tail_bracket(n_terms, r)
        if br is None:
            return None
        return (br[0] * self._inv2, br[1] * self._inv2)

    def certified_divergent(self, r):
        return self._base.certified_divergent(r)


def normalize_schlicht(coeffs: CoefficientStream) -> tuple[CoefficientStream, complex]:
    """Rescale a stream to b_0 = 0, b_1 = 1 and return (stream, a_1).

    Exit times satisfy E(original, r) = |a_1|^2 * E(normalized, r).
    """
    a1 = complex(coeffs.coeff(1))
    if a1 == 0:
        raise DegenerateMap("coeff(1) = 0: stream cannot be normalized")
    return NormalizedStream(coeffs, a1), a1


def exp_compose(coeffs: CoefficientStream, n_max: int) -> ArrayStream:
    """Taylor coefficients of exp(f(z)) through degree n_max.

    Uses the convolution recurrence c_0 = e^{a_0},
    c_n = (1/n) * sum_{k=1}^{n} k a_k c_{n-k}.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    ka = np.array([k * coeffs.coeff(k) for k in range(n_max + 1)], dtype=complex)
    c = np.zeros(n_max + 1, dtype=complex)
    c[0] = np.exp(coeffs.coeff(0))
    for n in range(1, n_max + 1):
        c[n] = np.dot(ka[1 : n + 1], c[:n][::-1]) / n
    return ArrayStream(c, scale_note=f"exp of stream, truncated at degree {n_max}")
