"""Counter-based Gaussian increments for reproducible parallel simulation.

Each Brownian increment is a pure function of (seed, path index, step
index) through a Philox4x32-10 block cipher, so paths can be generated in
any order (or in parallel) with identical results.  One Philox call yields
128 bits, turned into two 53-bit uniforms and then a pair of independent
standard normals by the Box-Muller transform.
"""

from __future__ import annotations

import math

import numpy as np

from .backend import jit

_M0 = np.uint32(0xD2511F53)
_M1 = np.uint32(0xCD9E8D57)
_W0 = np.uint32(0x9E3779B9)
_W1 = np.uint32(0xBB67AE85)
_INV53 = 1.0 / 9007199254740992.0  # 2**-53
_ROUNDS = 10


def split_seed(seed: int) -> tuple[np.uint32, np.uint32]:
    """Split a 64-bit seed into the two 32-bit Philox key words."""
    s = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    return np.uint32(s & np.uint64(0xFFFFFFFF)), np.uint32(s >> np.uint64(32))


@jit(inline="always")
def philox4x32(c0, c1, c2, c3, k0, k1):
    """One Philox4x32-10 block: counter (c0..c3), key (k0, k1) -> 4 uint32."""
    for _ in range(_ROUNDS):
        p0 = np.uint64(_M0) * np.uint64(c0)
        p1 = np.uint64(_M1) * np.uint64(c2)
        hi0 = np.uint32(p0 >> np.uint64(32))
        lo0 = np.uint32(p0 & np.uint64(0xFFFFFFFF))
        hi1 = np.uint32(p1 >> np.uint64(32))
        lo1 = np.uint32(p1 & np.uint64(0xFFFFFFFF))
        c0 = hi1 ^ c1 ^ k0
        c1 = lo1
        c2 = hi0 ^ c3 ^ k1
        c3 = lo0
        k0 = np.uint32(k0 + _W0)
        k1 = np.uint32(k1 + _W1)
    return c0, c1, c2, c3


@jit(inline="always")
def gauss_pair(step, path, k0, k1):
    """Standard-normal pair for (seed key, path, step)."""
    x0, x1, x2, x3 = philox4x32(
        np.uint32(step), np.uint32(path), np.uint32(0), np.uint32(0), k0, k1
    )
    w1 = (np.uint64(x0) << np.uint64(32)) | np.uint64(x1)
    w2 = (np.uint64(x2) << np.uint64(32)) | np.uint64(x3)
    u1 = 1.0 - (w1 >> np.uint64(11)) * _INV53  # (0, 1]: safe for log
    u2 = (w2 >> np.uint64(11)) * _INV53  # [0, 1)
    rad = math.sqrt(-2.0 * math.log(u1))
    ang = 2.0 * math.pi * u2
    return rad * math.cos(ang), rad * math.sin(ang)


def philox4x32_array(c0, c1, k0, k1):
    """Vectorized Philox4x32-10 over counter arrays (c2 = c3 = 0).

    Bit-identical to the scalar kernel; used by the numpy Monte Carlo
    backend and by cross-backend tests.
    """
    c0 = np.asarray(c0, dtype=np.uint32)
    c1 = np.asarray(c1, dtype=np.uint32)
    c0, c1 = np.broadcast_arrays(c0, c1)
    c0 = c0.copy()
    c1 = c1.copy()
    c2 = np.zeros_like(c0)
    c3 = np.zeros_like(c0)
    k0 = np.full_like(c0, np.uint32(k0))
    k1 = np.full_like(c0, np.uint32(k1))
    for _ in range(_ROUNDS):
        p0 = c0.astype(np.uint64) * np.uint64(_M0)
        p1 = c2.astype(np.uint64) * np.uint64(_M1)
        hi0 = (p0 >> np.uint64(32)).astype(np.uint32)
        lo0 = p0.astype(np.uint32)
        hi1 = (p1 >> np.uint64(32)).astype(np.uint32)
        lo1 = p1.astype(np.uint32)
        c0 = hi1 ^ c1 ^ k0
        c1 = lo1
        c2 = hi0 ^ c3 ^ k1
        c3 = lo0
        k0 = k0 + _W0
        k1 = k1 + _W1
    return c0, c1, c2, c3


def gauss_pairs_array(step, paths, k0, k1):
    """Vectorized counterpart of gauss_pair over an array of path indices."""
    x0, x1, x2, x3 = philox4x32_array(np.uint32(step), paths, k0, k1)
    w1 = (x0.astype(np.uint64) << np.uint64(32)) | x1.astype(np.uint64)
    w2 = (x2.astype(np.uint64) << np.uint64(32)) | x3.astype(np.uint64)
    u1 = 1.0 - (w1 >> np.uint64(11)) * _INV53
    u2 = (w2 >> np.uint64(11)) * _INV53
    rad = np.sqrt(-2.0 * np.log(u1))
    ang = 2.0 * np.pi * u2
    return rad * np.cos(ang), rad * np.sin(ang)
