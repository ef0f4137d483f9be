"""Closed-form weak-probe response and critical drive parameters.

To first order in the probe, with the coupling field on resonance and equal
decay rates (gamma1 = gamma2 = 1 in scaled units), the probe coherence has
the closed form

    rho31 = 4*Oc^2*Op*[2*Dp*(1 - R) - i*R^2]
            / ([R + 2*Oc^2*(1 + 2R)] * [4*Oc^2 + R^2 + 2R*(1 - 2i*Dp) - 4*Dp*(i + Dp)])

whose real part near line centre is S * Dp with

    S = 8*Oc^2*Op*[R^3 + R^2 + 2R + 4*Oc^2*(1 - R)]
        / ([R + 2*Oc^2*(1 + 2R)] * (4*Oc^2 + R^2 + 2R)^2).

S changes sign where the coupling strength crosses

    omega_c_necessary(R) = sqrt((R^3 + R^2 + 2R) / (R - 1)) / 2,

which exists only for pump rates above 1.  Minimising it over R gives the
smallest coupling strength for which anomalous line-centre dispersion is
possible at all; for a fixed coupling above that minimum the anomalous
window is bounded by two pump rates, the real roots above 1 of

    R^3 + R^2 + (2 - 4*Oc^2)*R + 4*Oc^2 = 0.

With the pump off the response reduces to the transparency form
rho31 = Op*Dp / (Oc^2 - Dp^2 - i*Dp), whose absorption peaks sit at the
dressed-state splitting +-omega_c.

All expressions are guarded by their derivation regime (delta_c = 0,
gamma1 = gamma2 = 1, weak probe) instead of being silently extrapolated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import DomainError
from .model import SystemParams

__all__ = [
    "CriticalParams",
    "DressedState",
    "rho31_weak_probe",
    "slope_coefficient",
    "omega_c_necessary",
    "omega_c_min",
    "pump_roots",
    "eit_susceptibility",
    "dressed_states",
    "critical_params",
]

_ROOT_XTOL = 1.0e-12


@dataclass(frozen=True)
class CriticalParams:
    """Critical drive parameters for the sub/superluminal transition."""

    omega_c_necessary: Optional[float]  # at the requested pump rate; None for R <= 1
    r_star: float                       # pump rate minimising the boundary curve
    omega_c_min: float                  # smallest coupling allowing anomalous dispersion
    r_roots: tuple[float, ...]          # pump rates bounding the window at the requested coupling


@dataclass(frozen=True)
class DressedState:
    """Eigenstate of the atom plus coupling field, pump and probe off."""

    amp_excited: complex  # amplitude on |3>
    amp_ground: complex   # amplitude on |2>
    energy: float         # in units of hbar * gamma


def _require_weak_probe_regime(params: SystemParams) -> None:
    if params.delta_c != 0.0:
        raise DomainError(
            f"closed form requires a resonant coupling field (delta_c = 0), got {params.delta_c!r}"
        )
    if params.gamma1 != 1.0 or params.gamma2 != 1.0:
        raise DomainError(
            "closed form requires equal unit decay rates (gamma1 = gamma2 = 1), "
            f"got gamma1 = {params.gamma1!r}, gamma2 = {params.gamma2!r}"
        )


def rho31_weak_probe(params: SystemParams) -> complex:
    """First-order probe coherence, valid for delta_c = 0 and gamma1 = gamma2 = 1.

    Raises:
        DomainError: outside the derivation regime.
        ZeroDivisionError: for pump_R = 0 with omega_c = 0, where the
            expression degenerates.
    """
    _require_weak_probe_regime(params)
    pump = params.pump_R
    oc2 = params.omega_c ** 2
    dp = params.delta_p
    if pump == 0.0 and oc2 == 0.0:
        raise ZeroDivisionError("weak-probe coherence is undefined for pump_R = 0 and omega_c = 0")
    numerator = 4.0 * oc2 * params.omega_p * (2.0 * dp * (1.0 - pump) - 1j * pump * pump)
    denominator = (pump + 2.0 * oc2 * (1.0 + 2.0 * pump)) * (
        4.0 * oc2 + pump * pump + 2.0 * pump * (1.0 - 2j * dp) - 4.0 * dp * (1j + dp)
    )
    return numerator / denominator


def slope_coefficient(params: SystemParams) -> float:
    """Line-centre dispersion-slope coefficient S with Re[rho31] ~ S * delta_p.

    S is exactly the detuning derivative of Re[rho31_weak_probe] at zero
    detuning; multiplied by chi_prefactor it is the line-centre slope of the
    dispersion.  Positive S means normal (subluminal) dispersion.
    """
    _require_weak_probe_regime(params)
    pump = params.pump_R
    oc2 = params.omega_c ** 2
    if pump == 0.0 and oc2 == 0.0:
        raise ZeroDivisionError("slope coefficient is undefined for pump_R = 0 and omega_c = 0")
    numerator = 8.0 * oc2 * params.omega_p * (
        pump ** 3 + pump ** 2 + 2.0 * pump + 4.0 * oc2 * (1.0 - pump)
    )
    denominator = (pump + 2.0 * oc2 * (1.0 + 2.0 * pump)) * (4.0 * oc2 + pump * pump + 2.0 * pump) ** 2
    return numerator / denominator


def omega_c_necessary(pump_R: float) -> Optional[float]:
    """Coupling strength at which the line-centre slope changes sign.

    Returns None for pump rates at or below 1: there the slope is positive
    for every coupling strength and no finite threshold exists.

    Raises:
        DomainError: for pump_R <= 0.
    """
    pump = float(pump_R)
    if pump <= 0.0:
        raise DomainError(f"pump rate must be positive, got {pump!r}")
    if pump <= 1.0:
        return None
    return 0.5 * math.sqrt((pump ** 3 + pump ** 2 + 2.0 * pump) / (pump - 1.0))


def _refine_root(
    func: Callable[[float], float],
    dfunc: Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float = _ROOT_XTOL,
    max_iter: int = 200,
) -> float:
    """Safeguarded Newton iteration on a sign-changing bracket.

    Newton steps are accepted only while they stay inside the shrinking
    bisection bracket, so convergence is guaranteed.
    """
    f_lo, f_hi = func(lo), func(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0.0:
        raise ValueError(f"root not bracketed on [{lo}, {hi}]")
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        fx = func(x)
        if fx == 0.0:
            return x
        if f_lo * fx < 0.0:
            hi = x
        else:
            lo, f_lo = x, fx
        if hi - lo <= xtol * max(1.0, abs(x)):
            break
        slope = dfunc(x)
        x_new = x - fx / slope if slope != 0.0 else 0.5 * (lo + hi)
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        x = x_new
    return 0.5 * (lo + hi)


def omega_c_min() -> tuple[float, float]:
    """Minimum of the boundary curve over the pump rate.

    The stationarity condition of omega_c_necessary reduces to the cubic
    r^3 - r^2 - r - 1 = 0, solved on the fixed bracket [1.5, 2.5].

    Returns:
        (r_star, omega_c_min): the minimising pump rate and the minimum
        coupling strength.
    """
    cubic = lambda r: ((r - 1.0) * r - 1.0) * r - 1.0
    dcubic = lambda r: (3.0 * r - 2.0) * r - 1.0
    r_star = _refine_root(cubic, dcubic, 1.5, 2.5)
    threshold = omega_c_necessary(r_star)
    assert threshold is not None
    return r_star, threshold


def pump_roots(omega_c: float) -> tuple[float, ...]:
    """Pump rates bounding the anomalous-dispersion window at fixed coupling.

    Rearranging the threshold condition gives the cubic

        c(r) = r^3 + r^2 + (2 - 4*omega_c^2)*r + 4*omega_c^2,

    with c(1) = 4 for every coupling, so physical roots sit strictly above
    1.  The cubic is bracketed analytically around the vertex of its
    derivative: below the minimum coupling it never dips negative (no
    roots), at the minimum it osculates zero (double root), above it there
    are two simple roots refined by safeguarded Newton iteration.

    Raises:
        DomainError: for omega_c <= 0.
    """
    oc = float(omega_c)
    if oc <= 0.0:
        raise DomainError(f"omega_c must be positive, got {oc!r}")
    w4 = 4.0 * oc * oc

    def cubic(r: float) -> float:
        return ((r + 1.0) * r + (2.0 - w4)) * r + w4

    def dcubic(r: float) -> float:
        return (3.0 * r + 2.0) * r + (2.0 - w4)

    disc = 3.0 * w4 - 5.0  # discriminant of the derivative
    if disc <= 0.0:
        return ()
    r_vertex = (math.sqrt(disc) - 1.0) / 3.0  # local minimum of the cubic
    if r_vertex <= 1.0:
        return ()
    c_min = cubic(r_vertex)
    if c_min > 0.0:
        return ()
    if c_min == 0.0:
        return (r_vertex,)

    hi = 2.0 * r_vertex
    while cubic(hi) <= 0.0:
        hi *= 2.0
    lower = _refine_root(cubic, dcubic, 1.0, r_vertex)
    upper = _refine_root(cubic, dcubic, r_vertex, hi)
    return (lower, upper)


def eit_susceptibility(params: SystemParams) -> complex:
    """Transparency-regime susceptibility with the pump off.

    chi = chi_prefactor * omega_p * delta_p / (omega_c^2 - delta_p^2 - i*delta_p),
    the zero-pump reduction of :func:`rho31_weak_probe`.  Absorption
    vanishes at line centre and peaks at the dressed-state splitting.

    Raises:
        DomainError: if the pump is on, the coupling is detuned, or the
            decay rates differ from 1.
        ZeroDivisionError: at omega_c = 0 with delta_p = 0.
    """
    if params.pump_R != 0.0:
        raise DomainError(f"transparency form requires pump_R = 0, got {params.pump_R!r}")
    _require_weak_probe_regime(params)
    oc2 = params.omega_c ** 2
    dp = params.delta_p
    denominator = oc2 - dp * dp - 1j * dp
    if denominator == 0.0:
        raise ZeroDivisionError("transparency response is undefined at omega_c = 0, delta_p = 0")
    return params.chi_prefactor * params.omega_p * dp / denominator


def dressed_states(omega_c: float) -> tuple[DressedState, DressedState]:
    """Eigenstates of the atom dressed by a resonant coupling field.

    With the pump off the coupled |2>, |3> pair splits into the symmetric
    and antisymmetric combinations at energies -+ omega_c, so absorption
    features are separated by 2*omega_c.

    Raises:
        DomainError: for omega_c <= 0.
    """
    oc = float(omega_c)
    if oc <= 0.0:
        raise DomainError(f"omega_c must be positive, got {oc!r}")
    amp = 1.0 / math.sqrt(2.0)
    plus = DressedState(amp_excited=amp, amp_ground=amp, energy=-oc)
    minus = DressedState(amp_excited=amp, amp_ground=-amp, energy=+oc)
    return plus, minus


def critical_params(
    pump_R: Optional[float] = None,
    omega_c: Optional[float] = None,
) -> CriticalParams:
    """Bundle the critical parameters for a report.

    Either argument may be omitted; the boundary minimum is always included.
    """
    r_star, oc_min = omega_c_min()
    threshold = omega_c_necessary(pump_R) if pump_R is not None else None
    roots = pump_roots(omega_c) if omega_c is not None else ()
    return CriticalParams(
        omega_c_necessary=threshold,
        r_star=r_star,
        omega_c_min=oc_min,
        r_roots=roots,
    )
