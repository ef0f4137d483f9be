"""Sub/superluminal region map over the (pump rate, coupling strength) plane.

Two classification routes are provided.  The analytic route takes the sign
of the closed-form line-centre slope coefficient; the numeric route runs the
full steady-state solver and classifies the sign of n_g - 1 at zero probe
detuning.  Away from the threshold curve both must agree; comparing them is
a whole-pipeline consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .analytic import omega_c_necessary, slope_coefficient
from .errors import DomainError, LambdaProbeError
from .model import SystemParams
from .response import Classification, classify_propagation

__all__ = ["RegionGrid", "ERROR_CELL", "classify_grid", "boundary_curve", "DEFAULT_GRID_PARAMS"]

#: Marker stored for cells where the per-cell solve failed.
ERROR_CELL = "error"

#: Probe strength used for numeric classification; matches the plotted regime.
DEFAULT_GRID_PARAMS = SystemParams(omega_p=0.01, delta_p=0.0, delta_c=0.0)


@dataclass(frozen=True)
class RegionGrid:
    """Classification of a rectangular lattice of drive parameters.

    ``cells[i, j]`` holds the class at ``(r_axis[i], omega_c_axis[j])`` as a
    lowercase string (one of the :class:`Classification` values or
    :data:`ERROR_CELL`).  Cells are evaluated and stored row-major over the
    pump axis regardless of how the work is scheduled.
    """

    r_axis: np.ndarray
    omega_c_axis: np.ndarray
    cells: np.ndarray
    method: str


def _axis(name: str, bounds: tuple[float, float], count: int) -> np.ndarray:
    lo, hi = float(bounds[0]), float(bounds[1])
    if lo <= 0.0:
        raise ValueError(f"{name} range must be positive, got lower bound {lo!r}")
    if not lo < hi:
        raise ValueError(f"{name} range must be increasing, got ({lo!r}, {hi!r})")
    if count < 2:
        raise ValueError(f"{name} sample count must be at least 2, got {count!r}")
    return np.linspace(lo, hi, count)


def classify_grid(
    r_range: tuple[float, float],
    omega_c_range: tuple[float, float],
    n_r: int,
    n_omega: int,
    method: str = "analytic",
    base: SystemParams | None = None,
    h: float = 1.0e-4,
) -> RegionGrid:
    """Classify every lattice cell as sub/superluminal (or boundary).

    Args:
        r_range, omega_c_range: inclusive (low, high) bounds, both positive.
        n_r, n_omega: samples per axis, at least 2.
        method: "analytic" (sign of the closed-form slope coefficient) or
            "numeric" (sign of n_g - 1 from the full solver at delta_p = 0).
        base: parameters shared by all cells; pump_R and omega_c are
            overridden per cell.  Defaults to the plotted regime
            (omega_p = 0.01, resonant fields).
        h: detuning step for the numeric dispersion slope.

    Cells whose solve fails are marked :data:`ERROR_CELL`; the grid is never
    aborted by a single bad cell.
    """
    if method not in ("analytic", "numeric"):
        raise ValueError(f"method must be 'analytic' or 'numeric', got {method!r}")
    base = DEFAULT_GRID_PARAMS if base is None else base
    if method == "analytic" and (base.delta_c != 0.0 or base.gamma1 != 1.0 or base.gamma2 != 1.0):
        raise DomainError(
            "analytic classification requires delta_c = 0 and gamma1 = gamma2 = 1"
        )

    r_axis = _axis("pump_R", r_range, n_r)
    omega_c_axis = _axis("omega_c", omega_c_range, n_omega)
    cells = np.empty((n_r, n_omega), dtype="<U16")

    for i, pump in enumerate(r_axis):
        for j, coupling in enumerate(omega_c_axis):
            cell = replace(base, pump_R=float(pump), omega_c=float(coupling))
            try:
                if method == "analytic":
                    coefficient = slope_coefficient(cell)
                    if coefficient < 0.0:
                        cells[i, j] = Classification.SUPERLUMINAL.value
                    elif coefficient > 0.0:
                        cells[i, j] = Classification.SUBLUMINAL.value
                    else:
                        cells[i, j] = Classification.BOUNDARY.value
                else:
                    cells[i, j] = classify_propagation(cell, h=h).value
            except LambdaProbeError:
                cells[i, j] = ERROR_CELL

    return RegionGrid(r_axis=r_axis, omega_c_axis=omega_c_axis, cells=cells, method=method)


def boundary_curve(r_range: tuple[float, float], n: int) -> np.ndarray:
    """Sample the threshold curve omega_c_necessary over a pump-rate range.

    Returns an (n, 2) array of (pump_R, omega_c_necessary) rows.  The curve
    diverges as the pump rate approaches 1 from above, so the range must
    stay strictly above 1.

    Raises:
        DomainError: if the range touches pump_R <= 1.
    """
    lo, hi = float(r_range[0]), float(r_range[1])
    if lo <= 1.0:
        raise DomainError(
            f"threshold curve exists only for pump_R > 1; range starts at {lo!r}"
        )
    if not lo < hi:
        raise ValueError(f"pump_R range must be increasing, got ({lo!r}, {hi!r})")
    if n < 2:
        raise ValueError(f"sample count must be at least 2, got {n!r}")
    pumps = np.linspace(lo, hi, n)
    thresholds = np.array([omega_c_necessary(p) for p in pumps])
    return np.column_stack([pumps, thresholds])
