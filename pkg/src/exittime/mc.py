"""Monte Carlo estimation of expected exit times.

Paths evolve by Gaussian Euler increments z_{k+1} = z_k + (g1 + i g2) sqrt(dt)
with increments derived counter-style from (seed, path, step), so results
are independent of execution order and identical under any thread count.
Paths still inside the domain at the censoring horizon t_max contribute
t_max, making the reported mean a deterministic lower-biased estimate;
the censored count is always surfaced.  Discretization bias is addressed
by the optional two-level mode (same estimator rerun at dt/4) rather than
analytic boundary corrections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geometry
from .backend import USE_NUMBA, apply_thread_cap, jit, prange
from .catalog import DomainSpec
from .errors import IneligibleDomain, StartOutsideDomain, UnsupportedParameter
from .rng import gauss_pair, gauss_pairs_array, split_seed

BIAS_RAW = "raw"
BIAS_TWO_LEVEL = "two-level"


@dataclass(frozen=True)
class MCConfig:
    n_paths: int = 100_000
    dt: float = 1e-4
    t_max: float = 100.0
    seed: int = 0
    bias_mode: str = BIAS_RAW

    def __post_init__(self):
        if self.n_paths < 100:
            raise ValueError("n_paths must be at least 100")
        if not 0.0 < self.dt < self.t_max:
            raise ValueError("need 0 < dt < t_max")
        if self.bias_mode not in (BIAS_RAW, BIAS_TWO_LEVEL):
            raise ValueError(f"unknown bias_mode {self.bias_mode!r}")
        if round(self.t_max / self.dt) * 4 >= 2**32:
            raise ValueError("t_max/dt too large for the 32-bit step counter")

    @property
    def n_steps(self) -> int:
        return int(round(self.t_max / self.dt))


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    stderr: float
    n_paths: int
    n_censored: int
    dt: float
    mean_fine: float | None = None


@jit(parallel=True)
def _walk_paths(kind, params, x0, y0, dt, n_steps, k0, k1, times, censored):
    sqrt_dt = math.sqrt(dt)
    horizon = n_steps * dt
    for p in prange(times.shape[0]):
        x = x0
        y = y0
        t_exit = horizon
        hit = False
        for k in range(n_steps):
            g1, g2 = gauss_pair(k, p, k0, k1)
            x += g1 * sqrt_dt
            y += g2 * sqrt_dt
            if not geometry.contains_point(kind, params, x, y):
                t_exit = (k + 1) * dt
                hit = True
                break
        times[p] = t_exit
        censored[p] = not hit


def _walk_paths_numpy(kind, params, x0, y0, dt, n_steps, k0, k1, n_paths):
    """Step-synchronous vectorized fallback; same increments per (path, step)."""
    sqrt_dt = math.sqrt(dt)
    times = np.full(n_paths, n_steps * dt)
    censored = np.ones(n_paths, dtype=bool)
    alive = np.arange(n_paths, dtype=np.uint32)
    x = np.full(n_paths, float(x0))[alive]
    y = np.full(n_paths, float(y0))[alive]
    for k in range(n_steps):
        if alive.size == 0:
            break
        g1, g2 = gauss_pairs_array(np.uint32(k), alive, k0, k1)
        x = x + g1 * sqrt_dt
        y = y + g2 * sqrt_dt
        inside = geometry.contains_array(kind, params, x, y)
        if not inside.all():
            exited = ~inside
            times[alive[exited]] = (k + 1) * dt
            censored[alive[exited]] = False
            alive = alive[inside]
            x = x[inside]
            y = y[inside]
    return times, censored


def _run(kind, params, start: complex, cfg: MCConfig, dt: float) -> tuple[np.ndarray, int]:
    n_steps = int(round(cfg.t_max / dt))
    k0, k1 = split_seed(cfg.seed)
    if USE_NUMBA:
        apply_thread_cap()
        times = np.empty(cfg.n_paths)
        censored = np.empty(cfg.n_paths, dtype=np.bool_)
        _walk_paths(
            kind, params, start.real, start.imag, dt, n_steps, k0, k1, times, censored
        )
    else:
        times, censored = _walk_paths_numpy(
            kind, params, start.real, start.imag, dt, n_steps, k0, k1, cfg.n_paths
        )
    return times, int(np.count_nonzero(censored))


def _estimate(kind, params, start: complex, cfg: MCConfig) -> MCEstimate:
    times, n_censored = _run(kind, params, start, cfg, cfg.dt)
    mean = float(np.mean(times))
    stderr = float(np.std(times, ddof=1) / math.sqrt(cfg.n_paths))
    mean_fine = None
    if cfg.bias_mode == BIAS_TWO_LEVEL:
        fine_times, _ = _run(kind, params, start, cfg, cfg.dt / 4.0)
        mean_fine = float(np.mean(fine_times))
    return MCEstimate(
        mean=mean,
        stderr=stderr,
        n_paths=cfg.n_paths,
        n_censored=n_censored,
        dt=cfg.dt,
        mean_fine=mean_fine,
    )


def estimate_exit_time(domain: DomainSpec, start: complex, cfg: MCConfig) -> MCEstimate:
    """Estimate the expected exit time of Brownian motion from a catalog domain."""
    start = complex(start)
    if not domain.mc_eligible or domain.mc_kind is None:
        raise IneligibleDomain(
            f"{domain.label} is not Monte Carlo eligible (unbounded with infinite expectation "
            "or no step-kernel membership test)"
        )
    if domain.contains is not None and not domain.contains(start):
        raise StartOutsideDomain(f"start {start} is outside {domain.label}")
    return _estimate(domain.mc_kind, domain.mc_params, start, cfg)


def estimate_wedge(p: float, cfg: MCConfig, start: complex = 1 + 0j) -> MCEstimate:
    """Exit-time estimate for the infinite wedge |Arg z| < pi p / 2 from start.

    Restricted to p < 1/2 where the expectation is finite; for p in
    [1/2, 1) the mean does not exist and censored simulation would be
    systematically meaningless.  Heavy tails near p = 1/2 make the
    estimate t_max sensitive; judge the censored count.
    """
    if not 0.0 < p < 1.0:
        raise UnsupportedParameter(f"wedge parameter must lie in (0, 1), got {p}")
    if p >= 0.5:
        raise IneligibleDomain(f"wedge exit time is infinite for p = {p} >= 1/2")
    start = complex(start)
    params = np.array([math.pi * p / 2.0])
    if not abs(math.atan2(start.imag, start.real)) < params[0]:
        raise StartOutsideDomain(f"start {start} is outside the wedge of half-angle {params[0]}")
    return _estimate(geometry.KIND_WEDGE, params, start, cfg)
