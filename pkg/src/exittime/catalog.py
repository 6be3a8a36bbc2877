"""Catalog of named planar domains with conformal (or B-proper) disc maps.

Each entry packages the Taylor-coefficient stream of the mapping function,
a membership predicate, the base point f(0), optional evaluators for f and
f', and a closed-form expected exit time where one exists (math.inf marks
a provably infinite expectation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import geometry
from .backend import jit
from .errors import BasePointOutside, UnsupportedParameter
from .special import gamma, hyp2f1_series, mgon_exit_time, mgon_sidelength_factor, wedge_bounds
from .streams import (
    ArrayStream,
    BoundedByLinear,
    CoefficientStream,
    Geometric,
    Unknown,
)

DIVERGENT = math.inf

ANNULUS_R_IN = math.exp(-math.pi / 4)
ANNULUS_R_OUT = math.exp(math.pi / 4)


def koebe_exit_closed(r: float) -> float:
    """Exit time of the Koebe image of the r-disc: r^2 (1+r^2) / (2 (1-r^2)^3).

    The closed form of (1/2) sum n^2 r^{2n}; finite only for r < 1.
    """
    if r >= 1.0:
        return DIVERGENT
    x = r * r
    return x * (1.0 + x) / (2.0 * (1.0 - x) ** 3)


@dataclass(frozen=True)
class DomainSpec:
    """A named domain and everything needed to compute its exit time."""

    name: str
    params: dict = field(default_factory=dict)
    base_point: complex = 0j
    coeffs: CoefficientStream = None
    contains: Callable | None = None
    deriv: Callable | None = None
    map_eval: Callable | None = None
    closed_form: float | None = None
    bproper_only: bool = False
    mc_kind: int | None = None
    mc_params: np.ndarray | None = None
    mc_eligible: bool = False

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={_fmt_param(v)}" for k, v in self.params.items())
        return f"{self.name}({inner})"


def _fmt_param(v) -> str:
    if isinstance(v, complex):
        if v.imag == 0:
            return _fmt_param(v.real)
        return str(v).strip("()")
    if isinstance(v, float) and v == int(v):
        return str(int(v))
    return str(v)


# ---------------------------------------------------------------------------
# coefficient streams
# ---------------------------------------------------------------------------


class MobiusDiscStream(CoefficientStream):
    """Disc automorphism r(rz + a)/(r + conj(a) z): a_0 = a,
    a_n = (r^2 - |a|^2)(-1)^{n-1} conj(a)^{n-1} / r^n."""

    def __init__(self, radius, a):
        self._radius = radius
        self._a = complex(a)
        mod = abs(self._a)
        self._c = (radius**2 - mod**2) / mod  # |a_n| = c * (mod/radius)^n
        self._rho = mod / radius
        self.growth = Geometric(self._rho, self._c)

    def coeff(self, n):
        if n == 0:
            return self._a
        r = self._radius
        return (r * r - abs(self._a) ** 2) * (-1) ** (n - 1) * np.conj(self._a) ** (n - 1) / r**n

    def abs2(self, start, stop):
        n = np.arange(start, stop, dtype=float)
        out = self._c**2 * self._rho ** (2 * n)
        if start == 0:
            out[0] = abs(self._a) ** 2
        return out

    def tail_bracket(self, n_terms, r):
        # |a_n| = c rho^n exactly, so the geometric tail is exact.
        q = (self._rho * r) ** 2
        t = self._c**2 * q ** (n_terms + 1) / (1.0 - q)
        return (t, t)


class OnesStream(CoefficientStream):
    """a_n = 1 for n >= 1 (the half-plane map z/(1-z)).

    |a_n| <= n holds, giving certified geometric-damped tails for r < 1;
    the unit lower bound certifies divergence of the series at r = 1.
    """

    growth = BoundedByLinear()
    min_abs = (1.0, 1)

    def coeff(self, n):
        return 1.0 + 0j if n >= 1 else 0j

    def abs2(self, start, stop):
        out = np.ones(stop - start)
        if start == 0:
            out[0] = 0.0
        return out


class KoebeStream(CoefficientStream):
    """a_n = n, the extremal schlicht coefficients."""

    growth = BoundedByLinear()
    min_abs = (1.0, 1)
    scale_note = "coefficient bound |a_n| <= n attained for every n"

    def coeff(self, n):
        return complex(n)

    def abs2(self, start, stop):
        n = np.arange(start, stop, dtype=float)
        return n * n


class CatenaryStream(CoefficientStream):
    """a_n = (-1)^{n+1}/n from log(1+z)."""

    growth = BoundedByLinear()

    def coeff(self, n):
        if n == 0:
            return 0j
        return complex((-1) ** (n + 1) / n)

    def abs2(self, start, stop):
        n = np.arange(start, stop, dtype=float)
        out = np.zeros(stop - start)
        pos = n >= 1
        out[pos] = 1.0 / n[pos] ** 2
        return out

    def tail_bracket(self, n_terms, r):
        if n_terms < 1:
            return None
        if r == 1.0:
            # classic integral-test bracket for sum_{n>N} 1/n^2
            return (1.0 / (n_terms + 1.0), 1.0 / n_terms)
        hi = r ** (2 * (n_terms + 1)) / ((n_terms + 1.0) ** 2 * (1.0 - r * r))
        return (0.0, hi)


class ArctanStream(CoefficientStream):
    """a_{2k-1} = (-1)^{k+1}/(2k-1) from arctan z."""

    growth = BoundedByLinear()

    def coeff(self, n):
        if n >= 1 and n % 2 == 1:
            k = (n + 1) // 2
            return complex((-1) ** (k + 1) / n)
        return 0j

    def abs2(self, start, stop):
        n = np.arange(start, stop, dtype=float)
        out = np.zeros(stop - start)
        odd = (np.arange(start, stop) % 2 == 1) & (n >= 1)
        out[odd] = 1.0 / n[odd] ** 2
        return out

    def tail_bracket(self, n_terms, r):
        k = (n_terms + 1) // 2  # odd indices <= n_terms
        if k < 1:
            return None
        if r == 1.0:
            # sum_{j>k} 1/(2j-1)^2 lies in (1/(4k+2), 1/(4k-2))
            return (1.0 / (4.0 * k + 2.0), 1.0 / (4.0 * k - 2.0))
        hi = r ** (4 * k + 2) / ((2.0 * k + 1.0) ** 2 * (1.0 - r**4))
        return (0.0, hi)


class BinomialPowStream(CoefficientStream):
    """a_n = (p)_n / n! from (1 - z)^{-p}, 0 < p < 1.

    Wendel's inequality brackets Gamma(n+p)/Gamma(n+1) between
    (n+p)^{p-1} and n^{p-1}, which yields a certified two-sided tail at
    r = 1 for p < 1/2 and a divergence certificate for p >= 1/2.
    """

    def __init__(self, p):
        if not 0.0 < p < 1.0:
            raise UnsupportedParameter(f"exponent must lie in (0, 1), got {p}")
        self._p = p
        self._gp2 = gamma(p) ** 2
        self._cache = np.array([1.0, p])
        self.growth = BoundedByLinear()

    def _extend(self, n):
        cur = self._cache
        if n < len(cur):
            return
        size = max(2 * len(cur), n + 1)
        out = np.empty(size)
        out[: len(cur)] = cur
        p = self._p
        for k in range(len(cur), size):
            out[k] = out[k - 1] * (p + k - 1.0) / k
        self._cache = out

    def coeff(self, n):
        self._extend(n)
        return complex(self._cache[n])

    def abs2(self, start, stop):
        self._extend(stop - 1)
        return self._cache[start:stop] ** 2

    def certified_divergent(self, r):
        # terms ~ n^{2p-2} are not summable once p >= 1/2
        return r >= 1.0 and self._p >= 0.5

    def tail_bracket(self, n_terms, r):
        if r < 1.0 or self._p >= 0.5 or n_terms < 1:
            return None
        p = self._p
        s = 1.0 - 2.0 * p
        hi = n_terms**-s / (s * self._gp2)
        lo = (n_terms + 2.0) ** -s / (s * self._gp2)
        return (lo, hi)


class AffineImageStream(CoefficientStream):
    """Stream of s*(f(z) - f(0)) + w0: coefficients scaled by s, a_0 = w0."""

    def __init__(self, base: CoefficientStream, scale: float, w0: complex):
        self._base = base
        self._s = float(scale)
        self._w0 = complex(w0)
        self.growth = Unknown()  # tails inherited from the base, rescaled

    def coeff(self, n):
        if n == 0:
            return self._w0
        return self._s * self._base.coeff(n)

    def abs2(self, start, stop):
        out = self._base.abs2(start, stop) * self._s**2
        if start == 0:
            out[0] = abs(self._w0) ** 2
        return out

    def certified_divergent(self, r):
        return self._base.certified_divergent(r)

    def tail_bracket(self, n_terms, r):
        from .series import growth_tail_bound

        br = self._base.tail_bracket(n_terms, r)
        if br is None:
            hi = growth_tail_bound(self._base.growth, n_terms, r)
            if not np.isfinite(hi):
                return None
            br = (0.0, hi)
        return (br[0] * self._s**2, br[1] * self._s**2)


class MgonStream(CoefficientStream):
    """Coefficients of the disc-to-regular-m-gon map (vertices e^{2 pi i k/m}).

    Nonzero only at n = m k + 1, where a_{mk+1} =
    (1/m)_k (2/m)_k / (((m+1)/m)_k k! W); computed by the Pochhammer ratio
    recurrence so numerator and denominator growth cancel term by term.
    """

    def __init__(self, m):
        if m < 3:
            raise UnsupportedParameter(f"regular m-gon needs m >= 3, got {m}")
        self._m = m
        self._w = mgon_sidelength_factor(m)
        self._cache = np.array([1.0 / self._w])
        self.growth = BoundedByLinear()

    def _extend(self, k):
        cur = self._cache
        if k < len(cur):
            return
        size = max(2 * len(cur), k + 1)
        out = np.empty(size)
        out[: len(cur)] = cur
        m = self._m
        for j in range(len(cur), size):
            i = j - 1.0
            out[j] = out[j - 1] * (i + 1.0 / m) * (i + 2.0 / m) / ((i + 1.0 + 1.0 / m) * (i + 1.0))
        self._cache = out

    def coeff(self, n):
        if n < 1 or (n - 1) % self._m:
            return 0j
        k = (n - 1) // self._m
        self._extend(k)
        return complex(self._cache[k])

    def abs2(self, start, stop):
        out = np.zeros(stop - start)
        idx = np.arange(start, stop)
        sel = (idx >= 1) & ((idx - 1) % self._m == 0)
        if np.any(sel):
            ks = (idx[sel] - 1) // self._m
            self._extend(int(ks.max()))
            out[sel] = self._cache[ks] ** 2
        return out

    def tail_bracket(self, n_terms, r):
        if r < 1.0:
            return None
        m = self._m
        k = (n_terms - 1) // m  # coefficient indices included so far
        if k < 1:
            return None
        q = 2.0 / m
        s = 3.0 - 2.0 * q
        gq = gamma(q)
        base = 1.0 / (m * self._w * gq) ** 2
        d = ((k + 2.0) / (k + 1.0 + q)) ** (2.0 * q)
        hi = d * base * k ** (2.0 * q - 3.0) / s
        lo = base * (k + 2.0) ** (2.0 * q - 3.0) / s
        return (lo, hi)


ANNULUS_CLOSED_FORM = (
    -0.5 + math.exp(-math.pi / 2) / 2 + (math.exp(math.pi / 2) - math.exp(-math.pi / 2)) / 4
)

# Coefficient envelope for exp(arctan z): splitting into the two binomial
# factors (1+iz)^{-i/2} (1-iz)^{i/2}, each factor's coefficients have
# modulus <= C/k with C = sqrt(sinh(pi/2)/(pi/2))/2, so the convolution
# gives |c_n| <= (A + B ln n)/n.
_ENV_C = 0.5 * math.sqrt(math.sinh(math.pi / 2) / (math.pi / 2))
_ENV_A = 2.0 * _ENV_C + 2.0 * _ENV_C**2
_ENV_B = 2.0 * _ENV_C**2


@jit()
def _annulus_weighted_sum(n_terms, r):
    # (1 + z^2) f' = f gives (n+1) c_{n+1} = c_n - (n-1) c_{n-1}
    r2 = r * r
    c_prev = 1.0  # c_0
    c_cur = 1.0  # c_1
    w = r2
    total = c_cur * c_cur * w
    for n in range(1, n_terms):
        c_next = (c_cur - (n - 1.0) * c_prev) / (n + 1.0)
        w *= r2
        total += c_next * c_next * w
        c_prev = c_cur
        c_cur = c_next
    return total


class ExpArctanStream(CoefficientStream):
    """Taylor coefficients of exp(arctan z), the B-proper disc-to-annulus map.

    Mathematically equal to exp_compose applied to the arctan stream; the
    coefficients satisfy the three-term recurrence of the generating
    function's first-order ODE, which makes summing a few times 1e8 terms
    affordable.
    """

    growth = Unknown()
    scale_note = "log-over-n coefficient envelope; see tail_bracket"

    def __init__(self):
        self._cache = np.array([1.0, 1.0])

    def _extend(self, n):
        cur = self._cache
        if n < len(cur):
            return
        size = max(2 * len(cur), n + 1)
        out = np.empty(size)
        out[: len(cur)] = cur
        for j in range(len(cur), size):
            out[j] = (out[j - 1] - (j - 2.0) * out[j - 2]) / j
        self._cache = out

    def coeff(self, n):
        if n > 2**22:
            raise ValueError("coefficient cache capped at 2**22; use the series engine")
        self._extend(n)
        return complex(self._cache[n])

    def abs2(self, start, stop):
        self._extend(stop - 1)
        return self._cache[start:stop] ** 2

    def weighted_partial_sum(self, n_terms, r):
        return float(_annulus_weighted_sum(n_terms, float(r)))

    @staticmethod
    def envelope(n) -> float:
        return (_ENV_A + _ENV_B * math.log(n)) / n

    def tail_bracket(self, n_terms, r):
        if n_terms < 4:
            return None
        if r == 1.0:
            # integral of the squared envelope: decreasing for all n >= 1
            t = _ENV_A + _ENV_B * math.log(n_terms)
            hi = (t * t + 2.0 * _ENV_B * t + 2.0 * _ENV_B**2) / n_terms
            return (0.0, hi)
        hi = self.envelope(n_terms + 1) ** 2 * r ** (2 * (n_terms + 1)) / (1.0 - r * r)
        return (0.0, hi)


# ---------------------------------------------------------------------------
# catalog constructors
# ---------------------------------------------------------------------------


def disc(radius: float = 1.0, a: complex = 0j) -> DomainSpec:
    """Disc of given radius, exit from interior point a."""
    if radius <= 0:
        raise UnsupportedParameter(f"radius must be positive, got {radius}")
    a = complex(a)
    if abs(a) >= radius:
        raise BasePointOutside(f"|a| = {abs(a)} must be < radius = {radius}")
    if a == 0:
        stream = ArrayStream([0.0, radius])
    else:
        stream = MobiusDiscStream(radius, a)
    abar = np.conj(a)
    mc_params = np.array([radius * radius])
    return DomainSpec(
        name="disc",
        params={"radius": radius, "a": a},
        base_point=a,
        coeffs=stream,
        contains=geometry.membership_predicate(geometry.KIND_DISC, mc_params),
        deriv=lambda z, r=radius, ab=abar, aa=a: r * (r * r - abs(aa) ** 2) / (r + ab * np.asarray(z, complex)) ** 2,
        map_eval=lambda z, r=radius, ab=abar, aa=a: r * (r * np.asarray(z, complex) + aa) / (r + ab * np.asarray(z, complex)),
        closed_form=0.5 * (radius**2 - abs(a) ** 2),
        mc_kind=geometry.KIND_DISC,
        mc_params=mc_params,
        mc_eligible=True,
    )


def half_plane() -> DomainSpec:
    """Half-plane Re z > -1/2 via z/(1-z); expected exit time is infinite."""
    mc_params = np.array([-0.5])
    return DomainSpec(
        name="half-plane",
        base_point=0j,
        coeffs=OnesStream(),
        contains=geometry.membership_predicate(geometry.KIND_HALF_PLANE, mc_params),
        deriv=lambda z: 1.0 / (1.0 - np.asarray(z, complex)) ** 2,
        map_eval=lambda z: np.asarray(z, complex) / (1.0 - np.asarray(z, complex)),
        closed_form=DIVERGENT,
        mc_kind=geometry.KIND_HALF_PLANE,
        mc_params=mc_params,
        mc_eligible=False,  # infinite expectation; no honest censoring horizon
    )


def cardioid() -> DomainSpec:
    """Cardioid rho = 2(1 + cos theta) via (1+z)^2, exit from the point 1."""
    mc_params = np.zeros(0)
    return DomainSpec(
        name="cardioid",
        base_point=1 + 0j,
        coeffs=ArrayStream([1.0, 2.0, 1.0]),
        contains=geometry.membership_predicate(geometry.KIND_CARDIOID, mc_params),
        deriv=lambda z: 2.0 * (1.0 + np.asarray(z, complex)),
        map_eval=lambda z: (1.0 + np.asarray(z, complex)) ** 2,
        closed_form=2.5,
        mc_kind=geometry.KIND_CARDIOID,
        mc_params=mc_params,
        mc_eligible=True,
    )


def catenary() -> DomainSpec:
    """Region bounded by e^x = 2 cos y (catenary of equal resistance), via log(1+z)."""
    mc_params = np.zeros(0)
    return DomainSpec(
        name="catenary",
        base_point=0j,
        coeffs=CatenaryStream(),
        contains=geometry.membership_predicate(geometry.KIND_CATENARY, mc_params),
        deriv=lambda z: 1.0 / (1.0 + np.asarray(z, complex)),
        map_eval=lambda z: np.log(1.0 + np.asarray(z, complex)),
        closed_form=math.pi**2 / 12,
        mc_kind=geometry.KIND_CATENARY,
        mc_params=mc_params,
        mc_eligible=True,
    )


def strip() -> DomainSpec:
    """Vertical strip |Re z| < pi/4 via arctan z."""
    mc_params = np.array([math.pi / 4])
    return DomainSpec(
        name="strip",
        base_point=0j,
        coeffs=ArctanStream(),
        contains=geometry.membership_predicate(geometry.KIND_STRIP, mc_params),
        deriv=lambda z: 1.0 / (1.0 + np.asarray(z, complex) ** 2),
        map_eval=lambda z: np.arctan(np.asarray(z, complex)),
        closed_form=math.pi**2 / 16,
        mc_kind=geometry.KIND_STRIP,
        mc_params=mc_params,
        mc_eligible=True,
    )


def _tilde_wedge_contains(p: float):
    """Membership in {Re(z^{1/p}) > 1/2} as the image of {Re w > 1/2} under w^p.

    Points of that image satisfy |Arg z| < pi p / 2, which also keeps the
    principal branch of z^{1/p} the actual inverse; the bare
    Re(z^{1/p}) > 1/2 test alone would wrap spurious sectors in for small p.
    """

    def contains(z):
        z = np.asarray(z, dtype=complex)
        arg_ok = np.abs(np.angle(z)) < math.pi * p / 2
        with np.errstate(invalid="ignore", divide="ignore"):
            root = np.where(arg_ok, z, 1.0) ** (1.0 / p)
        res = arg_ok & (root.real > 0.5)
        if res.ndim == 0:
            return bool(res)
        return res

    return contains


def wedge_inner(p: float) -> DomainSpec:
    """Inner wedge approximant {Re(z^{1/p}) > 1/2} via (1-z)^{-p}."""
    if not 0.0 < p < 1.0:
        raise UnsupportedParameter(f"wedge parameter must lie in (0, 1), got {p}")
    closed = wedge_bounds(p)[0] if p < 0.5 else DIVERGENT
    return DomainSpec(
        name="wedge-inner",
        params={"p": p},
        base_point=1 + 0j,
        coeffs=BinomialPowStream(p),
        contains=_tilde_wedge_contains(p),
        deriv=lambda z, pp=p: pp * (1.0 - np.asarray(z, complex)) ** (-pp - 1.0),
        map_eval=lambda z, pp=p: (1.0 - np.asarray(z, complex)) ** (-pp),
        closed_form=closed,
        mc_eligible=False,
    )


def wedge_outer(p: float) -> DomainSpec:
    """Affine enlargement of the inner wedge approximant containing the true wedge."""
    if not 0.0 < p < 1.0:
        raise UnsupportedParameter(f"wedge parameter must lie in (0, 1), got {p}")
    s = 2.0**p / (2.0**p - 1.0)
    shift = 2.0**-p
    inner_contains = _tilde_wedge_contains(p)
    closed = wedge_bounds(p)[1] if p < 0.5 else DIVERGENT

    def contains(z):
        z = np.asarray(z, dtype=complex)
        return inner_contains((1.0 / s) * z + shift)

    return DomainSpec(
        name="wedge-outer",
        params={"p": p},
        base_point=1 + 0j,
        coeffs=AffineImageStream(BinomialPowStream(p), s, 1.0),
        contains=contains,
        deriv=lambda z, pp=p, ss=s: ss * pp * (1.0 - np.asarray(z, complex)) ** (-pp - 1.0),
        map_eval=lambda z, pp=p, ss=s, sh=shift: ss * ((1.0 - np.asarray(z, complex)) ** (-pp) - sh),
        closed_form=closed,
        mc_eligible=False,
    )


def mgon(m: int) -> DomainSpec:
    """Regular m-gon with vertices e^{2 pi i k / m}, exit from the center."""
    m = int(m)
    if m < 3:
        raise UnsupportedParameter(f"regular m-gon needs m >= 3, got {m}")
    w = mgon_sidelength_factor(m)
    mc_params = geometry.mgon_params(m)

    def map_eval(z, mm=m, ww=w):
        z = np.asarray(z, dtype=complex)
        return (z / ww) * hyp2f1_series(1.0 / mm, 2.0 / mm, (mm + 1.0) / mm, z**mm)

    return DomainSpec(
        name="mgon",
        params={"m": m},
        base_point=0j,
        coeffs=MgonStream(m),
        contains=geometry.membership_predicate(geometry.KIND_MGON, mc_params),
        deriv=lambda z, mm=m, ww=w: (1.0 / ww) * (1.0 - np.asarray(z, complex) ** mm) ** (-2.0 / mm),
        map_eval=map_eval,
        closed_form=mgon_exit_time(m, tol=1e-9),
        mc_kind=geometry.KIND_MGON,
        mc_params=mc_params,
        mc_eligible=True,
    )


def koebe() -> DomainSpec:
    """Koebe map z/(1-z)^2 onto the slit plane; usable for r < 1 only."""
    return DomainSpec(
        name="koebe",
        base_point=0j,
        coeffs=KoebeStream(),
        contains=None,  # unbounded slit plane: no Monte Carlo membership
        deriv=lambda z: (1.0 + np.asarray(z, complex)) / (1.0 - np.asarray(z, complex)) ** 3,
        map_eval=lambda z: np.asarray(z, complex) / (1.0 - np.asarray(z, complex)) ** 2,
        closed_form=DIVERGENT,
        mc_eligible=False,
    )


def identity_disc() -> DomainSpec:
    """Unit disc under the identity map."""
    mc_params = np.array([1.0])
    return DomainSpec(
        name="identity",
        base_point=0j,
        coeffs=ArrayStream([0.0, 1.0]),
        contains=geometry.membership_predicate(geometry.KIND_DISC, mc_params),
        deriv=lambda z: np.ones_like(np.asarray(z, complex)),
        map_eval=lambda z: np.asarray(z, complex),
        closed_form=0.5,
        mc_kind=geometry.KIND_DISC,
        mc_params=mc_params,
        mc_eligible=True,
    )


def annulus_bproper() -> DomainSpec:
    """Annulus e^{-pi/4} < |z| < e^{pi/4} via the non-injective B-proper map e^{arctan z}.

    The map is not proper (boundary points +-i spiral along |z| = 1), but
    Brownian images still leave every compact subset, so the series
    identity applies.  The closed form solves u'' + u'/rho = -2 with zero
    boundary values at both radii, evaluated at rho = 1.
    """
    mc_params = np.array([ANNULUS_R_IN**2, ANNULUS_R_OUT**2])
    return DomainSpec(
        name="annulus",
        base_point=1 + 0j,
        coeffs=ExpArctanStream(),
        contains=geometry.membership_predicate(geometry.KIND_ANNULUS, mc_params),
        deriv=lambda z: np.exp(np.arctan(np.asarray(z, complex))) / (1.0 + np.asarray(z, complex) ** 2),
        map_eval=lambda z: np.exp(np.arctan(np.asarray(z, complex))),
        closed_form=ANNULUS_CLOSED_FORM,
        bproper_only=True,
        mc_kind=geometry.KIND_ANNULUS,
        mc_params=mc_params,
        mc_eligible=True,
    )


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_BUILDERS = {
    "disc": disc,
    "half-plane": half_plane,
    "cardioid": cardioid,
    "catenary": catenary,
    "strip": strip,
    "wedge-inner": wedge_inner,
    "wedge-outer": wedge_outer,
    "mgon": mgon,
    "koebe": koebe,
    "identity": identity_disc,
    "annulus": annulus_bproper,
}

DOMAIN_NAMES = tuple(_BUILDERS)

PARAM_HELP = {
    "disc": "radius (default 1), a (complex start point, default 0)",
    "wedge-inner": "p in (0, 1)",
    "wedge-outer": "p in (0, 1)",
    "mgon": "m >= 3",
}


def build_domain(name: str, **params) -> DomainSpec:
    """Construct a catalog domain by name."""
    if name not in _BUILDERS:
        raise UnsupportedParameter(
            f"unknown domain {name!r}; known: {', '.join(DOMAIN_NAMES)}"
        )
    return _BUILDERS[name](**params)


def default_catalog() -> list[DomainSpec]:
    """One representative DomainSpec per catalog entry (three disc variants)."""
    return [
        disc(1.0, 0j),
        disc(1.0, 0.5 + 0j),
        disc(2.0, 1j),
        half_plane(),
        cardioid(),
        catenary(),
        strip(),
        wedge_inner(0.25),
        wedge_outer(0.25),
        mgon(3),
        mgon(4),
        koebe(),
        identity_disc(),
        annulus_bproper(),
    ]
