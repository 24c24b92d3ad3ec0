"""Grid geometry and field containers.

Arrays are stored with shape ``(n, m)``: ``n`` rows indexed by the y
coordinate, ``m`` columns indexed by x.  Row ``j`` sits at
``y = c + j*h_y`` and column ``i`` at ``x = a + i*h_x`` (0-based
indices), so row 0 is the bottom of the domain.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError


@dataclass(frozen=True)
class GridSpec:
    """Rectangular sampling grid on the domain [a, b] x [c, d]."""

    a: float
    b: float
    c: float
    d: float
    m: int  # columns (x samples)
    n: int  # rows (y samples)

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise InvalidInputError(f"grid needs at least 2x2 samples, got m={self.m}, n={self.n}")
        if not (self.b > self.a and self.d > self.c):
            raise InvalidInputError("grid domain must have positive extent")

    @property
    def hx(self) -> float:
        return (self.b - self.a) / (self.m - 1)

    @property
    def hy(self) -> float:
        return (self.d - self.c) / (self.n - 1)

    @property
    def shape(self) -> tuple[int, int]:
        """Array shape (rows, cols) = (n, m)."""
        return (self.n, self.m)

    @property
    def cell_area(self) -> float:
        return self.hx * self.hy

    def meshgrid(self) -> tuple[np.ndarray, np.ndarray]:
        """Coordinate arrays X, Y of shape (n, m)."""
        x = np.linspace(self.a, self.b, self.m)
        y = np.linspace(self.c, self.d, self.n)
        return np.meshgrid(x, y)


def _as_grid_array(values, grid: GridSpec, what: str) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.shape != grid.shape:
        raise InvalidInputError(
            f"{what} has shape {arr.shape}, grid expects {grid.shape}"
        )
    if not np.isfinite(arr).all():
        raise InvalidInputError(f"{what} contains non-finite samples")
    return arr


@dataclass
class ScalarField:
    """Real-valued samples on a GridSpec (phase maps, fringes, amplitudes)."""

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        self.values = _as_grid_array(self.values, self.grid, "ScalarField.values")

    @classmethod
    def zeros(cls, grid: GridSpec) -> "ScalarField":
        return cls(grid, np.zeros(grid.shape))

    @classmethod
    def full(cls, grid: GridSpec, value: float) -> "ScalarField":
        return cls(grid, np.full(grid.shape, float(value)))

    @classmethod
    def from_function(cls, grid: GridSpec, fn) -> "ScalarField":
        X, Y = grid.meshgrid()
        return cls(grid, fn(X, Y))

    def copy(self) -> "ScalarField":
        return ScalarField(self.grid, self.values.copy())

    def same_grid(self, other) -> bool:
        return self.grid == other.grid


@dataclass
class VectorField:
    """Pair of scalar sample arrays (u, v) on a shared GridSpec.

    Used for phase-gradient estimates; u is the x component, v the y
    component.
    """

    grid: GridSpec
    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        self.u = _as_grid_array(self.u, self.grid, "VectorField.u")
        self.v = _as_grid_array(self.v, self.grid, "VectorField.v")

    @classmethod
    def zeros(cls, grid: GridSpec) -> "VectorField":
        return cls(grid, np.zeros(grid.shape), np.zeros(grid.shape))

    def copy(self) -> "VectorField":
        return VectorField(self.grid, self.u.copy(), self.v.copy())


def require_same_grid(*fields):
    """Raise InvalidInputError unless all fields share one GridSpec."""
    grids = {f.grid for f in fields}
    if len(grids) > 1:
        raise InvalidInputError(f"fields live on different grids: {grids}")
