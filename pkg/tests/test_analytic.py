"""Tests for the closed-form response and the critical-parameter solvers."""

import math
from dataclasses import replace

import numpy as np
import pytest

from lambdaprobe import (
    DomainError,
    SystemParams,
    dressed_states,
    eit_susceptibility,
    omega_c_min,
    omega_c_necessary,
    pump_roots,
    rho31_weak_probe,
    slope_coefficient,
    steady_state,
)


def weak_params(**kwargs):
    defaults = dict(gamma1=1.0, gamma2=1.0, delta_c=0.0, omega_p=1e-3)
    defaults.update(kwargs)
    return SystemParams(**defaults)


def slope_by_finite_difference(params, h=1e-3):
    # high-order centred derivative of the closed form itself
    f = lambda d: rho31_weak_probe(replace(params, delta_p=d)).real
    return (-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h)


class TestWeakProbeCoherence:
    def test_reduces_to_transparency_form_at_zero_pump(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            params = weak_params(
                pump_R=0.0,
                omega_c=rng.uniform(0.2, 4.0),
                delta_p=rng.uniform(-8.0, 8.0),
            )
            full = rho31_weak_probe(params)
            reduced = eit_susceptibility(params) / params.chi_prefactor
            assert abs(full - reduced) <= 1e-12 * max(abs(reduced), 1e-30)

    def test_purely_imaginary_at_line_centre(self):
        value = rho31_weak_probe(weak_params(pump_R=1.5, omega_c=2.0, delta_p=0.0))
        oc2, pump, op = 4.0, 1.5, 1e-3
        expected = -4j * oc2 * op * pump**2 / (
            (pump + 2 * oc2 * (1 + 2 * pump)) * (4 * oc2 + pump**2 + 2 * pump)
        )
        assert value.real == 0.0
        assert value == pytest.approx(expected, rel=1e-12)

    def test_matches_full_solver_over_detuning_grid(self):
        for delta in np.linspace(-10.0, 10.0, 41):
            params = weak_params(pump_R=1.5, omega_c=3.0, delta_p=float(delta))
            analytic = rho31_weak_probe(params)
            numeric = steady_state(params)[2, 0]
            assert abs(numeric - analytic) <= max(1e-4 * abs(analytic), 1e-10)

    def test_domain_guards(self):
        with pytest.raises(DomainError):
            rho31_weak_probe(weak_params(pump_R=1.0, omega_c=2.0, delta_c=0.5))
        with pytest.raises(DomainError):
            rho31_weak_probe(SystemParams(gamma1=2.0, gamma2=2.0, delta_c=0.0))
        with pytest.raises(ZeroDivisionError):
            rho31_weak_probe(weak_params(pump_R=0.0, omega_c=0.0))


class TestSlopeCoefficient:
    def test_equals_derivative_of_closed_form(self):
        for pump, coupling in ((1.5, 3.0), (0.8, 1.0), (2.5, 2.0), (1.2, 4.0)):
            params = weak_params(pump_R=pump, omega_c=coupling, omega_p=0.01)
            coefficient = slope_coefficient(params)
            derivative = slope_by_finite_difference(params)
            assert abs(coefficient - derivative) <= 1e-8 * abs(derivative)

    def test_weak_pump_always_positive(self):
        for coupling in (0.3, 1.0, 2.0, 5.0, 20.0):
            assert slope_coefficient(weak_params(pump_R=0.8, omega_c=coupling)) > 0.0

    def test_negative_above_threshold(self):
        assert slope_coefficient(weak_params(pump_R=1.5, omega_c=3.0, omega_p=0.01)) < 0.0

    def test_vanishes_at_threshold(self):
        scale = abs(slope_coefficient(weak_params(pump_R=1.5, omega_c=1.0)))
        threshold = omega_c_necessary(1.5)
        residual = slope_coefficient(weak_params(pump_R=1.5, omega_c=threshold))
        assert abs(residual) <= 1e-3 * scale


class TestCouplingThreshold:
    def test_reference_value(self):
        value = omega_c_necessary(1.5)
        assert value == pytest.approx(0.5 * math.sqrt(8.625 / 0.5), rel=1e-12)
        assert abs(value - 2.08) <= 0.01

    def test_absent_for_weak_pump(self):
        assert omega_c_necessary(0.8) is None
        assert omega_c_necessary(1.0) is None

    def test_value_near_minimising_pump_rate(self):
        assert omega_c_necessary(1.8393) == pytest.approx(1.990, abs=1e-3)

    def test_rejects_non_positive_pump(self):
        with pytest.raises(DomainError):
            omega_c_necessary(0.0)
        with pytest.raises(DomainError):
            omega_c_necessary(-1.0)

    def test_sign_change_across_threshold(self):
        for pump in (1.2, 1.5, 2.0, 3.0, 5.0):
            threshold = omega_c_necessary(pump)
            at_threshold = slope_coefficient(weak_params(pump_R=pump, omega_c=threshold))
            below = slope_coefficient(weak_params(pump_R=pump, omega_c=0.99 * threshold))
            above = slope_coefficient(weak_params(pump_R=pump, omega_c=1.01 * threshold))
            assert abs(at_threshold) <= 1e-8
            assert below > 0.0
            assert above < 0.0


class TestBoundaryMinimum:
    def test_values(self):
        r_star, coupling_min = omega_c_min()
        assert abs(coupling_min - 1.99) <= 0.01
        assert abs(r_star - 1.8393) <= 1e-4

    def test_minimiser_satisfies_cubic(self):
        r_star, _ = omega_c_min()
        assert abs(r_star**3 - r_star**2 - r_star - 1.0) <= 1e-10

    def test_minimality(self):
        r_star, coupling_min = omega_c_min()
        assert omega_c_necessary(r_star - 0.1) > coupling_min
        assert omega_c_necessary(r_star + 0.1) > coupling_min


class TestPumpRoots:
    def test_reference_roots(self):
        lower, upper = pump_roots(3.0)
        assert abs(lower - 1.14) <= 0.01
        assert upper == pytest.approx(4.6483, abs=1e-3)

    def test_no_window_below_minimum_coupling(self):
        assert pump_roots(1.5) == ()
        assert pump_roots(0.3) == ()

    def test_roots_bracket_minimiser(self):
        r_star, coupling_min = omega_c_min()
        for coupling in (coupling_min + 1e-6, 1.99, 2.08, 3.0, 10.0, 100.0):
            roots = pump_roots(coupling)
            assert len(roots) == 2
            assert roots[0] < r_star < roots[1]
            assert roots[0] > 1.0

    def test_roots_invert_the_threshold(self):
        for coupling in (1.99, 2.0, 2.08, 3.0, 5.0, 10.0, 100.0):
            for root in pump_roots(coupling):
                assert omega_c_necessary(root) == pytest.approx(coupling, abs=1e-6)

    def test_rejects_non_positive_coupling(self):
        with pytest.raises(DomainError):
            pump_roots(0.0)


class TestTransparencyResponse:
    def test_vanishes_at_line_centre(self):
        params = weak_params(pump_R=0.0, omega_c=3.0, delta_p=0.0)
        assert eit_susceptibility(params) == 0.0

    def test_absorption_maximum_at_dressed_splitting(self):
        for sign in (+1.0, -1.0):
            params = weak_params(pump_R=0.0, omega_c=3.0, delta_p=sign * 3.0)
            value = eit_susceptibility(params)
            assert value.real == pytest.approx(0.0, abs=1e-15)
            assert value.imag == pytest.approx(params.omega_p)

    def test_degenerate_point_rejected(self):
        with pytest.raises(ZeroDivisionError):
            eit_susceptibility(weak_params(pump_R=0.0, omega_c=0.0, delta_p=0.0))

    def test_pump_on_rejected(self):
        with pytest.raises(DomainError):
            eit_susceptibility(weak_params(pump_R=0.5, omega_c=3.0))

    def test_scales_with_prefactor(self):
        base = weak_params(pump_R=0.0, omega_c=2.0, delta_p=1.0)
        doubled = replace(base, chi_prefactor=2.0)
        assert eit_susceptibility(doubled) == pytest.approx(2.0 * eit_susceptibility(base))


class TestDressedStates:
    def test_energies_split_by_coupling(self):
        plus, minus = dressed_states(3.0)
        assert plus.energy == -3.0
        assert minus.energy == +3.0

    def test_orthonormal(self):
        plus, minus = dressed_states(1.7)
        for state in (plus, minus):
            norm = abs(state.amp_excited) ** 2 + abs(state.amp_ground) ** 2
            assert norm == pytest.approx(1.0, abs=1e-12)
        overlap = (plus.amp_excited.conjugate() * minus.amp_excited
                   + plus.amp_ground.conjugate() * minus.amp_ground)
        assert abs(overlap) <= 1e-12

    def test_absorption_peaks_at_dressed_energies(self):
        coupling = 3.0
        detunings = np.arange(-6.0, 6.0 + 1e-12, 0.01)
        absorption = np.array([
            eit_susceptibility(weak_params(pump_R=0.0, omega_c=coupling,
                                           delta_p=float(d))).imag
            for d in detunings
        ])
        positive = detunings > 0.5
        negative = detunings < -0.5
        peak_pos = detunings[positive][absorption[positive].argmax()]
        peak_neg = detunings[negative][absorption[negative].argmax()]
        assert abs(peak_pos - coupling) <= 0.01
        assert abs(peak_neg + coupling) <= 0.01

    def test_rejects_non_positive_coupling(self):
        with pytest.raises(DomainError):
            dressed_states(0.0)


class TestSolverAgreement:
    def test_error_shrinks_quadratically_with_probe(self):
        # the closed form is first order in the probe, so halving the probe
        # by 10 must shrink the relative mismatch by about 100
        def max_relative_error(omega_p):
            worst = 0.0
            for delta in np.linspace(-8.0, 8.0, 17):
                params = weak_params(pump_R=1.5, omega_c=3.0, omega_p=omega_p,
                                     delta_p=float(delta))
                analytic = rho31_weak_probe(params)
                numeric = steady_state(params)[2, 0]
                if abs(analytic) >= 1e-8:
                    worst = max(worst, abs(numeric - analytic) / abs(analytic))
            return worst

        coarse = max_relative_error(1e-3)
        fine = max_relative_error(1e-4)
        assert coarse <= 1e-4
        assert fine <= coarse / 50.0
