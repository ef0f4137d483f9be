"""Probe response derived from the stationary coherence rho31.

The linear susceptibility is chi = chi_prefactor * rho31; its real part is
the dispersion seen by the probe and its imaginary part the absorption
(negative values mean gain).  The group index follows from the line-centre
dispersion slope,

    n_g - 1 = 2*pi*chi' + 2*pi*nu_p * d(chi')/d(delta_p),

where the derivative with respect to the probe frequency is taken at fixed
atomic splitting, i.e. as a detuning derivative.  Only n_g - 1 is ever
computed; the speed of light never enters numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .errors import DerivativeUnstable
from .model import SystemParams, steady_state

__all__ = [
    "Classification",
    "ProbeResponse",
    "BOUNDARY_BAND",
    "DEFAULT_FD_STEP",
    "susceptibility",
    "dispersion_slope",
    "group_index",
    "classify_propagation",
    "probe_response",
]

#: Half-width of the n_g - 1 band treated as a boundary instead of a sign.
BOUNDARY_BAND = 1.0e-9

#: Default detuning step for the finite-difference slope, three decades below
#: the narrowest spectral features of interest (width ~ gamma/10).
DEFAULT_FD_STEP = 1.0e-4

_RICHARDSON_RTOL = 1.0e-4
# Absolute allowance for the 3- vs 5-point disagreement.  The truncation
# mismatch scales with chi_prefactor * omega_p; measured values sit near
# 1e-10 * that scale for the default step, so this floor keeps legitimate
# near-zero slopes (critical drive strengths) from tripping the check.
_RICHARDSON_FLOOR = 1.0e-9


class Classification(str, Enum):
    """Propagation regime of the probe pulse peak."""

    SUBLUMINAL = "subluminal"
    SUPERLUMINAL = "superluminal"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class ProbeResponse:
    """Full probe response at one parameter point."""

    chi_re: float
    chi_im: float
    slope: float
    group_index_minus_one: float
    classification: Classification


def susceptibility(params: SystemParams) -> complex:
    """Probe susceptibility chi = chi_prefactor * rho31 at the steady state."""
    rho = steady_state(params)
    return complex(params.chi_prefactor * rho[2, 0])


def _chi_re_at(params: SystemParams, delta_p: float) -> float:
    return susceptibility(replace(params, delta_p=delta_p)).real


def _slope_estimates(params: SystemParams, h: float) -> tuple[float, float]:
    d0 = params.delta_p
    f_p1 = _chi_re_at(params, d0 + h)
    f_m1 = _chi_re_at(params, d0 - h)
    f_p2 = _chi_re_at(params, d0 + 2.0 * h)
    f_m2 = _chi_re_at(params, d0 - 2.0 * h)
    three_point = (f_p1 - f_m1) / (2.0 * h)
    five_point = (-f_p2 + 8.0 * f_p1 - 8.0 * f_m1 + f_m2) / (12.0 * h)
    return five_point, three_point


def dispersion_slope(params: SystemParams, h: float = DEFAULT_FD_STEP) -> float:
    """d(chi')/d(delta_p) by 5-point central differences.

    The 3-point estimate is computed from the same stencil and must agree
    with the 5-point one to a relative 1e-4 (above an absolute floor set by
    the probe scale); disagreement means the step straddles a feature
    sharper than it can resolve.

    Raises:
        DerivativeUnstable: if the two estimates disagree.
    """
    if h <= 0.0:
        raise ValueError("finite-difference step h must be positive")
    five_point, three_point = _slope_estimates(params, h)
    diff = abs(five_point - three_point)
    floor = _RICHARDSON_FLOOR * params.chi_prefactor * params.omega_p
    if diff > _RICHARDSON_RTOL * max(abs(five_point), abs(three_point)) and diff > floor:
        raise DerivativeUnstable(
            f"3-point and 5-point slope estimates disagree ({three_point:.6e} vs "
            f"{five_point:.6e}) at delta_p = {params.delta_p:g}; retry with a smaller h"
        )
    return five_point


def group_index(params: SystemParams, h: float = DEFAULT_FD_STEP) -> float:
    """Group index minus one, 2*pi*(chi' + nu_p * d(chi')/d(delta_p))."""
    slope = dispersion_slope(params, h)
    chi_re = susceptibility(params).real
    return 2.0 * math.pi * (chi_re + params.nu_p_scale * slope)


def _classify(ng_minus_one: float) -> Classification:
    if ng_minus_one < -BOUNDARY_BAND:
        return Classification.SUPERLUMINAL
    if ng_minus_one > BOUNDARY_BAND:
        return Classification.SUBLUMINAL
    return Classification.BOUNDARY


def classify_propagation(params: SystemParams, h: float = DEFAULT_FD_STEP) -> Classification:
    """Sub/superluminal classification from the sign of n_g - 1."""
    return _classify(group_index(params, h))


def probe_response(params: SystemParams, h: float = DEFAULT_FD_STEP) -> ProbeResponse:
    """Susceptibility, slope, group index and classification in one shot."""
    chi = susceptibility(params)
    slope = dispersion_slope(params, h)
    ng_minus_one = 2.0 * math.pi * (chi.real + params.nu_p_scale * slope)
    return ProbeResponse(
        chi_re=chi.real,
        chi_im=chi.imag,
        slope=slope,
        group_index_minus_one=ng_minus_one,
        classification=_classify(ng_minus_one),
    )
