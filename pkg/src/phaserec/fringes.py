"""Fringe-pair container."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import GridSpec, ScalarField, require_same_grid


@dataclass
class FringeSet:
    """Quadrature fringe pair (I^c, I^s) with the derived amplitude.

    ``b`` is always recomputed as sqrt(ic^2 + is^2); the amplitude the
    solver sees is the one measurable from the (possibly noisy) data.
    ``provenance`` records how the pair was produced (generator name,
    noise seed, source files).
    """

    grid: GridSpec
    ic: ScalarField
    is_: ScalarField
    b: ScalarField = None
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        require_same_grid(self.ic, self.is_)
        if self.ic.grid != self.grid:
            raise ValueError("fringe fields do not match the declared grid")
        derived = np.sqrt(self.ic.values**2 + self.is_.values**2)
        if self.b is None:
            self.b = ScalarField(self.grid, derived)
        else:
            require_same_grid(self.ic, self.b)

    @classmethod
    def from_arrays(cls, grid: GridSpec, ic, is_, provenance=None) -> "FringeSet":
        return cls(
            grid,
            ScalarField(grid, ic),
            ScalarField(grid, is_),
            provenance=provenance or {},
        )
