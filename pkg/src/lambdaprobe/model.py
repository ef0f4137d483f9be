"""Core model of a driven three-level lambda atom.

A weak probe couples the ground level |1> to the excited level |3>, a strong
coherent coupling field drives |2> <-> |3>, and an indirect incoherent pump
transfers population from |1> to |3> at rate ``pump_R``.  The pump dephases
the probe and ground-state coherences at ``pump_R / 2`` but leaves the
coupling coherence untouched.  Spontaneously generated coherence is not
modelled.  All rates and frequencies are dimensionless, scaled by the
reference decay rate gamma.

The nine density-matrix elements are vectorised in the fixed order

    (rho11, rho22, rho33, rho21, rho12, rho31, rho13, rho32, rho23)

and evolve linearly, d(vec rho)/dt = L @ vec(rho).  The equation for rho33
is reconstructed from trace conservation, which closes the system; the
equations for rho12, rho13 and rho23 are the complex conjugates of their
mirror elements.  Rabi frequencies are restricted to real, non-negative
values at the API boundary: the placement of conjugates in the equations of
motion only matters for complex drives, which are therefore rejected rather
than guessed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPhysicalState, SingularSystem

__all__ = [
    "SystemParams",
    "DensityMatrixReport",
    "VEC_ORDER",
    "assemble_liouvillian",
    "steady_state",
    "evolve",
    "validate_density_matrix",
    "vectorize",
    "unvectorize",
]

#: Names of the vector components, in order.
VEC_ORDER = (
    "rho11", "rho22", "rho33",
    "rho21", "rho12",
    "rho31", "rho13",
    "rho32", "rho23",
)

#: (row, column) of each vector slot in the 3x3 density matrix (zero-based).
_MATRIX_SLOTS = (
    (0, 0), (1, 1), (2, 2),
    (1, 0), (0, 1),
    (2, 0), (0, 2),
    (2, 1), (1, 2),
)

_COND_LIMIT = 1.0e12
_RESIDUAL_LIMIT = 1.0e-10

# density-matrix invariant tolerances
HERMITICITY_TOL = 1.0e-12
TRACE_TOL = 1.0e-10
POSITIVITY_TOL = 1.0e-9

_PARAM_FIELDS = (
    "gamma1", "gamma2", "pump_R", "omega_p", "omega_c",
    "delta_p", "delta_c", "chi_prefactor", "nu_p_scale",
)


@dataclass(frozen=True)
class SystemParams:
    """Physical parameters of the driven atom, in units of gamma.

    Attributes:
        gamma1: decay rate |3> -> |1|, must be positive.
        gamma2: decay rate |3> -> |2>, must be positive.
        pump_R: indirect incoherent pump rate on |1> <-> |3>, >= 0.
        omega_p: probe Rabi frequency, real and >= 0.
        omega_c: coupling Rabi frequency, real and >= 0.
        delta_p: probe detuning (probe frequency minus the |1>-|3> splitting).
        delta_c: coupling detuning (coupling frequency minus the |2>-|3> splitting).
        chi_prefactor: dimensionless scale applied to rho31 in the
            susceptibility; the realistic-medium choice is 1.
        nu_p_scale: probe optical frequency in units of gamma.  Enters the
            group index only; the default 1e7 reflects an optical frequency
            of ~1e15 rad/s against gamma ~ 1e8 rad/s.
    """

    gamma1: float = 1.0
    gamma2: float = 1.0
    pump_R: float = 0.0
    omega_p: float = 0.01
    omega_c: float = 1.0
    delta_p: float = 0.0
    delta_c: float = 0.0
    chi_prefactor: float = 1.0
    nu_p_scale: float = 1.0e7

    def __post_init__(self) -> None:
        for name in _PARAM_FIELDS:
            value = getattr(self, name)
            if not isinstance(value, (int, float, np.integer, np.floating)):
                raise ValueError(
                    f"{name} must be a real number, got {value!r}; "
                    "complex Rabi frequencies are not supported"
                )
            value = float(value)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.gamma1 <= 0.0 or self.gamma2 <= 0.0:
            raise ValueError("decay rates gamma1 and gamma2 must be positive")
        if self.pump_R < 0.0:
            raise ValueError("pump_R must be non-negative")
        if self.omega_p < 0.0 or self.omega_c < 0.0:
            raise ValueError("Rabi frequencies must be non-negative")
        if self.chi_prefactor <= 0.0:
            raise ValueError("chi_prefactor must be positive")
        if self.nu_p_scale <= 0.0:
            raise ValueError("nu_p_scale must be positive")


def vectorize(rho: np.ndarray) -> np.ndarray:
    """Flatten a 3x3 density matrix into the fixed component order."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (3, 3):
        raise ValueError(f"density matrix must be 3x3, got shape {rho.shape}")
    return np.array([rho[i, j] for i, j in _MATRIX_SLOTS], dtype=complex)

def unvectorize(vec: np.ndarray) -> np.ndarray:
    """Inverse of :func:`vectorize`."""
    vec = np.asarray(vec, dtype=complex)
    if vec.shape != (9,):
        raise ValueError(f"state vector must have 9 components, got shape {vec.shape}")
    rho = np.empty((3, 3), dtype=complex)
    for k, (i, j) in enumerate(_MATRIX_SLOTS):
        rho[i, j] = vec[k]
    return rho


def assemble_liouvillian(params: SystemParams) -> np.ndarray:
    """Build the 9x9 generator of the equations of motion.

    Rows follow :data:`VEC_ORDER`.  The rho33 row is the exact negative of
    the rho11 and rho22 rows (trace conservation), and each conjugate
    coherence row mirrors its partner, so trace and Hermiticity are
    preserved by construction.
    """
    g1, g2, R = params.gamma1, params.gamma2, params.pump_R
    op, oc = params.omega_p, params.omega_c
    dp, dc = params.delta_p, params.delta_c

    lio = np.zeros((9, 9), dtype=complex)

    # rho11: fed by gamma1 decay, drained by the pump, driven by the probe
    lio[0, 0] = -R
    lio[0, 2] = g1
    lio[0, 5] = 1j * op
    lio[0, 6] = -1j * op
    # rho22: fed by gamma2 decay, driven by the coupling field
    lio[1, 2] = g2
    lio[1, 7] = 1j * oc
    lio[1, 8] = -1j * oc
    # rho33 = -(rho11 + rho22) termwise
    lio[2, 0] = R
    lio[2, 2] = -(g1 + g2)
    lio[2, 5] = -1j * op
    lio[2, 6] = 1j * op
    lio[2, 7] = -1j * oc
    lio[2, 8] = 1j * oc
    # ground-state coherence rho21: pump dephasing only, no radiative decay
    lio[3, 3] = -(0.5 * R + 1j * (dc - dp))
    lio[3, 5] = 1j * oc
    lio[3, 8] = -1j * op
    lio[4, 4] = -(0.5 * R - 1j * (dc - dp))
    lio[4, 6] = -1j * oc
    lio[4, 7] = 1j * op
    # probe coherence rho31: decays at (gamma1 + gamma2 + R)/2
    lio[5, 5] = 1j * dp - 0.5 * (g1 + g2 + R)
    lio[5, 3] = 1j * oc
    lio[5, 0] = 1j * op
    lio[5, 2] = -1j * op
    lio[6, 6] = -1j * dp - 0.5 * (g1 + g2 + R)
    lio[6, 4] = -1j * oc
    lio[6, 0] = -1j * op
    lio[6, 2] = 1j * op
    # coupling coherence rho32: no pump dephasing on this leg
    lio[7, 7] = 1j * dc - 0.5 * (g1 + g2)
    lio[7, 4] = 1j * op
    lio[7, 1] = 1j * oc
    lio[7, 2] = -1j * oc
    lio[8, 8] = -1j * dc - 0.5 * (g1 + g2)
    lio[8, 3] = -1j * op
    lio[8, 1] = -1j * oc
    lio[8, 2] = 1j * oc

    return lio


def steady_state(params: SystemParams) -> np.ndarray:
    """Solve for the unique stationary density matrix.

    The redundant rho33 row of the generator is replaced by the unit-trace
    constraint and the resulting 9x9 complex system is solved by dense LU
    with partial pivoting.  The 1-norm condition number is checked first so
    that physically degenerate parameter sets fail loudly.

    Returns:
        3x3 complex Hermitian density matrix with unit trace.

    Raises:
        SingularSystem: if the system is (numerically) singular, e.g. when
            probe, coupling and pump are all switched off.
    """
    lio = assemble_liouvillian(params)
    a = lio.copy()
    a[2, :] = 0.0
    a[2, 0] = a[2, 1] = a[2, 2] = 1.0
    b = np.zeros(9, dtype=complex)
    b[2] = 1.0

    try:
        cond = float(abs(np.linalg.cond(a, 1)))
    except np.linalg.LinAlgError:
        cond = math.inf
    if not math.isfinite(cond) or cond > _COND_LIMIT:
        raise SingularSystem(
            f"stationary state is not unique (condition estimate {cond:.3e}); "
            "the parameters leave a degenerate dark manifold"
        )
    vec = np.linalg.solve(a, b)

    scale = float(np.abs(lio).sum(axis=1).max())  # infinity norm of the generator
    residual = float(np.abs(lio @ vec).max())
    if scale > 0.0 and residual > _RESIDUAL_LIMIT * scale:
        raise SingularSystem(
            f"steady-state residual {residual:.3e} exceeds {_RESIDUAL_LIMIT:g} * |L| = "
            f"{_RESIDUAL_LIMIT * scale:.3e}"
        )

    rho = unvectorize(vec)
    # strip solver roundoff: exact Hermiticity and unit trace
    rho = 0.5 * (rho + rho.conj().T)
    rho /= np.trace(rho).real
    return rho


def evolve(
    params: SystemParams,
    rho0: np.ndarray,
    t_final: float,
    dt: float | None = None,
) -> np.ndarray:
    """Integrate the equations of motion with classical fixed-step RK4.

    Serves as an independent oracle for :func:`steady_state`: the stationary
    state is an exact fixed point of the RK4 map, so long integrations
    converge onto it from any physical initial state.

    Args:
        params: system parameters.
        rho0: initial 3x3 density matrix; must satisfy the density-matrix
            invariants.
        t_final: integration time in units of 1/gamma.
        dt: step size; defaults to min(1e-3, 1e-2 / fastest rate).

    Raises:
        NonPhysicalState: if the trace drifts by more than 1e-6, which
            signals a step size too large for the fastest rate.
    """
    report = validate_density_matrix(rho0)
    if not report.passed:
        raise ValueError(f"rho0 is not a valid density matrix: {report.summary()}")
    if t_final < 0.0:
        raise ValueError("t_final must be non-negative")
    if dt is None:
        fastest = max(
            params.gamma1 + params.gamma2 + params.pump_R,
            params.omega_c, params.omega_p,
            abs(params.delta_p), abs(params.delta_c),
            1.0,
        )
        dt = min(1.0e-3, 1.0e-2 / fastest)
    if dt <= 0.0:
        raise ValueError("dt must be positive")

    vec = vectorize(rho0)
    if t_final == 0.0:
        return unvectorize(vec)

    lio = assemble_liouvillian(params)
    n_steps = max(1, math.ceil(t_final / dt - 1.0e-12))
    h = t_final / n_steps

    for step in range(n_steps):
        k1 = lio @ vec
        k2 = lio @ (vec + (0.5 * h) * k1)
        k3 = lio @ (vec + (0.5 * h) * k2)
        k4 = lio @ (vec + h * k3)
        vec = vec + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if step % 64 == 0 or step == n_steps - 1:
            trace = vec[0] + vec[1] + vec[2]
            if not np.isfinite(vec).all() or abs(trace - 1.0) > 1.0e-6:
                raise NonPhysicalState(
                    f"trace drifted to {trace!r} by t = {(step + 1) * h:.4g}; "
                    f"step dt = {h:.3g} is too large"
                )

    return unvectorize(vec)


@dataclass(frozen=True)
class DensityMatrixReport:
    """Diagnostics of a candidate density matrix against the invariants."""

    hermiticity_defect: float
    trace_defect: float
    min_population: float
    max_population: float
    min_eigenvalue: float
    hermitian_ok: bool
    trace_ok: bool
    populations_ok: bool
    positive_ok: bool

    @property
    def passed(self) -> bool:
        return self.hermitian_ok and self.trace_ok and self.populations_ok and self.positive_ok

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (
            f"{status}: hermiticity defect {self.hermiticity_defect:.2e}, "
            f"trace defect {self.trace_defect:.2e}, "
            f"populations in [{self.min_population:.3g}, {self.max_population:.3g}], "
            f"min eigenvalue {self.min_eigenvalue:.3g}"
        )


def validate_density_matrix(rho: np.ndarray) -> DensityMatrixReport:
    """Check Hermiticity, unit trace, population range and positivity."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (3, 3):
        raise ValueError(f"density matrix must be 3x3, got shape {rho.shape}")

    herm_defect = float(np.abs(rho - rho.conj().T).max())
    trace_defect = float(abs(np.trace(rho) - 1.0))
    populations = rho.diagonal().real
    min_pop = float(populations.min())
    max_pop = float(populations.max())
    eigenvalues = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    min_eig = float(eigenvalues.min())

    return DensityMatrixReport(
        hermiticity_defect=herm_defect,
        trace_defect=trace_defect,
        min_population=min_pop,
        max_population=max_pop,
        min_eigenvalue=min_eig,
        hermitian_ok=herm_defect <= HERMITICITY_TOL,
        trace_ok=trace_defect <= TRACE_TOL,
        populations_ok=(min_pop >= -POSITIVITY_TOL) and (max_pop <= 1.0 + POSITIVITY_TOL),
        positive_ok=min_eig >= -POSITIVITY_TOL,
    )
