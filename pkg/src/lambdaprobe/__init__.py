"""Steady-state probe response of a driven three-level lambda atom.

A coherent coupling field, a weak probe and an indirect incoherent pump
drive the atom; the package solves the exact stationary density matrix,
derives the probe susceptibility, dispersion slope and group index, and
maps where the probe pulse peak travels slower or faster than light.

All quantities are dimensionless, scaled by the reference decay rate.
"""

from .analytic import (
    CriticalParams,
    DressedState,
    critical_params,
    dressed_states,
    eit_susceptibility,
    omega_c_min,
    omega_c_necessary,
    pump_roots,
    rho31_weak_probe,
    slope_coefficient,
)
from .errors import (
    DerivativeUnstable,
    DomainError,
    LambdaProbeError,
    NonPhysicalState,
    SingularSystem,
)
from .model import (
    DensityMatrixReport,
    SystemParams,
    VEC_ORDER,
    assemble_liouvillian,
    evolve,
    steady_state,
    unvectorize,
    validate_density_matrix,
    vectorize,
)
from .regionmap import ERROR_CELL, RegionGrid, boundary_curve, classify_grid
from .response import (
    BOUNDARY_BAND,
    Classification,
    ProbeResponse,
    classify_propagation,
    dispersion_slope,
    group_index,
    probe_response,
    susceptibility,
)

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY_BAND",
    "Classification",
    "CriticalParams",
    "DensityMatrixReport",
    "DerivativeUnstable",
    "DomainError",
    "DressedState",
    "ERROR_CELL",
    "LambdaProbeError",
    "NonPhysicalState",
    "ProbeResponse",
    "RegionGrid",
    "SingularSystem",
    "SystemParams",
    "VEC_ORDER",
    "assemble_liouvillian",
    "boundary_curve",
    "classify_grid",
    "classify_propagation",
    "critical_params",
    "dispersion_slope",
    "dressed_states",
    "eit_susceptibility",
    "evolve",
    "group_index",
    "omega_c_min",
    "omega_c_necessary",
    "probe_response",
    "pump_roots",
    "rho31_weak_probe",
    "slope_coefficient",
    "steady_state",
    "susceptibility",
    "unvectorize",
    "validate_density_matrix",
    "vectorize",
    "__version__",
]
