"""Point-membership predicates for the catalog domains.

Each Monte Carlo-eligible domain is described by an integer kind plus a
small float parameter vector, so the membership test can run inside the
compiled path kernel.  ``contains_array`` is the vectorized numpy twin
used by the fallback backend and by Python-level predicates; both
implement identical arithmetic.
"""

from __future__ import annotations

import math

import numpy as np

from .backend import jit

KIND_DISC = 0  # params: [radius**2]
KIND_CARDIOID = 1  # boundary rho = 2(1 + cos(theta)); params unused
KIND_CATENARY = 2  # e^x < 2 cos(y), |y| < pi/2
KIND_STRIP = 3  # params: [half_width]; |x| < half_width
KIND_WEDGE = 4  # params: [half_angle]; |Arg z| < half_angle
KIND_MGON = 5  # params: [m, apothem - slack, cos(phi_0), sin(phi_0), ...]
KIND_ANNULUS = 6  # params: [r_inner**2, r_outer**2]
KIND_HALF_PLANE = 7  # params: [x_min]; x > x_min

MGON_EDGE_SLACK = 1e-12  # deterministic closed/open boundary convention


@jit(inline="always")
def contains_point(kind, params, x, y):
    if kind == KIND_DISC:
        return x * x + y * y < params[0]
    if kind == KIND_CARDIOID:
        # rho < 2(1 + cos theta) in Cartesian form; classifies the origin
        # (the cusp) and the negative real axis as outside.
        q = x * x + y * y
        return q - 2.0 * x < 2.0 * math.sqrt(q)
    if kind == KIND_CATENARY:
        return abs(y) < 0.5 * math.pi and math.exp(x) < 2.0 * math.cos(y)
    if kind == KIND_STRIP:
        return abs(x) < params[0]
    if kind == KIND_WEDGE:
        return abs(math.atan2(y, x)) < params[0]
    if kind == KIND_MGON:
        m = int(params[0])
        bound = params[1]
        for i in range(m):
            if x * params[2 + 2 * i] + y * params[3 + 2 * i] >= bound:
                return False
        return True
    if kind == KIND_ANNULUS:
        q = x * x + y * y
        return params[0] < q < params[1]
    if kind == KIND_HALF_PLANE:
        return x > params[0]
    return False


def contains_array(kind: int, params: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Vectorized membership test, same arithmetic as contains_point."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if kind == KIND_DISC:
        return x * x + y * y < params[0]
    if kind == KIND_CARDIOID:
        q = x * x + y * y
        return q - 2.0 * x < 2.0 * np.sqrt(q)
    if kind == KIND_CATENARY:
        return (np.abs(y) < 0.5 * np.pi) & (np.exp(x) < 2.0 * np.cos(y))
    if kind == KIND_STRIP:
        return np.abs(x) < params[0]
    if kind == KIND_WEDGE:
        return np.abs(np.arctan2(y, x)) < params[0]
    if kind == KIND_MGON:
        m = int(params[0])
        bound = params[1]
        inside = np.ones(x.shape, dtype=bool)
        for i in range(m):
            inside &= x * params[2 + 2 * i] + y * params[3 + 2 * i] < bound
        return inside
    if kind == KIND_ANNULUS:
        q = x * x + y * y
        return (params[0] < q) & (q < params[1])
    if kind == KIND_HALF_PLANE:
        return x > params[0]
    raise ValueError(f"unknown membership kind {kind}")


def mgon_params(m: int) -> np.ndarray:
    """Edge-normal parameter vector for the regular m-gon with vertices e^{2 pi i k/m}."""
    apothem = math.cos(math.pi / m)
    out = np.empty(2 + 2 * m)
    out[0] = float(m)
    out[1] = apothem - MGON_EDGE_SLACK
    for k in range(m):
        phi = 2.0 * math.pi * (k + 0.5) / m  # outward normal of edge k
        out[2 + 2 * k] = math.cos(phi)
        out[3 + 2 * k] = math.sin(phi)
    return out


def membership_predicate(kind: int, params: np.ndarray):
    """Build a contains(z) callable accepting complex scalars or arrays."""

    def contains(z):
        z = np.asarray(z, dtype=complex)
        res = contains_array(kind, params, z.real, z.imag)
        if res.ndim == 0:
            return bool(res)
        return res

    return contains
