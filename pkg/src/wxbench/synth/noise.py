"""Seeded low-frequency value noise.

A lattice of uniform random values at `scale`-pixel spacing, smoothstep-
interpolated to full resolution. Output lies in [0, 1) and is a pure
function of (height, width, scale, seed).
"""

from __future__ import annotations

import numpy as np


def value_noise(height: int, width: int, scale: int, seed: int) -> np.ndarray:
    """Smooth noise field, shape (height, width), float64 in [0, 1)."""
    rng = np.random.Generator(np.random.PCG64(seed))
    grid_h = height // scale + 2
    grid_w = width // scale + 2
    lattice = rng.random((grid_h, grid_w))

    ys = np.arange(height, dtype=np.float64) / scale
    xs = np.arange(width, dtype=np.float64) / scale
    y0 = np.floor(ys).astype(np.intp)
    x0 = np.floor(xs).astype(np.intp)
    ty = ys - y0
    tx = xs - x0
    # smoothstep weights
    sy = ty * ty * (3.0 - 2.0 * ty)
    sx = tx * tx * (3.0 - 2.0 * tx)

    v00 = lattice[np.ix_(y0, x0)]
    v01 = lattice[np.ix_(y0, x0 + 1)]
    v10 = lattice[np.ix_(y0 + 1, x0)]
    v11 = lattice[np.ix_(y0 + 1, x0 + 1)]

    sx_row = sx[np.newaxis, :]
    sy_col = sy[:, np.newaxis]
    top = v00 + sx_row * (v01 - v00)
    bottom = v10 + sx_row * (v11 - v10)
    return top + sy_col * (bottom - top)
