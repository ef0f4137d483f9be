"""Tests for the generator assembly, steady-state solver and RK4 oracle."""

import math
from dataclasses import replace

import numpy as np
import pytest

from lambdaprobe import (
    NonPhysicalState,
    SingularSystem,
    SystemParams,
    assemble_liouvillian,
    evolve,
    rho31_weak_probe,
    steady_state,
    unvectorize,
    validate_density_matrix,
    vectorize,
)

# closed-form weak-probe coherence at pump 1.5, coupling 3, probe 1e-3,
# detuning 0.5 (frozen from the analytic expression, which the solver must
# reproduce in the weak-probe regime)
EXPECTED_RHO31_WEAK = complex(-2.6424155772259134e-06, -2.7708146440066094e-05)

# index swap realising element-wise conjugation of the density matrix
_CONJ_PERM = (0, 1, 2, 4, 3, 6, 5, 8, 7)


def random_params(rng, weak_probe=False):
    return SystemParams(
        gamma1=rng.uniform(0.5, 2.0),
        gamma2=rng.uniform(0.5, 2.0),
        pump_R=rng.uniform(0.1, 3.0),
        omega_p=1e-3 if weak_probe else rng.uniform(0.0, 0.1),
        omega_c=rng.uniform(0.3, 4.0),
        delta_p=rng.uniform(-5.0, 5.0),
        delta_c=rng.uniform(-5.0, 5.0),
    )


def random_density_matrix(rng):
    m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    rho = m @ m.conj().T
    return rho / np.trace(rho).real


class TestSystemParams:
    def test_defaults_valid(self):
        params = SystemParams()
        assert params.chi_prefactor == 1.0
        assert params.nu_p_scale == 1.0e7

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"gamma1": 0.0},
            {"gamma2": -1.0},
            {"pump_R": -0.5},
            {"omega_p": -0.01},
            {"omega_c": -2.0},
            {"chi_prefactor": 0.0},
            {"nu_p_scale": -1.0},
            {"delta_p": math.inf},
        ],
    )
    def test_invalid_values_rejected(self, kwargs):
        with pytest.raises(ValueError):
            SystemParams(**kwargs)

    def test_complex_rabi_rejected(self):
        with pytest.raises(ValueError):
            SystemParams(omega_p=0.01 + 0.01j)
        with pytest.raises(ValueError):
            SystemParams(omega_c=1j)


class TestLiouvillian:
    def test_decay_only_structure(self):
        params = SystemParams(gamma1=1.0, gamma2=1.0, pump_R=0.0,
                              omega_p=0.0, omega_c=0.0)
        lio = assemble_liouvillian(params)
        assert lio[2, 2] == -2.0          # total decay off the excited level
        assert lio[0, 2] == 1.0           # feeding into |1>
        assert lio[1, 2] == 1.0           # feeding into |2>

    def test_ground_coherence_pump_dephasing(self):
        params = SystemParams(pump_R=1.0, omega_p=0.0, omega_c=0.0)
        lio = assemble_liouvillian(params)
        assert lio[3, 3] == pytest.approx(-0.5)

    def test_ground_coherence_detuning_dependence(self):
        params = SystemParams(pump_R=1.0, omega_p=0.0, omega_c=0.0,
                              delta_p=0.3, delta_c=1.1)
        lio = assemble_liouvillian(params)
        assert lio[3, 3] == pytest.approx(-(0.5 + 1j * (1.1 - 0.3)))

    def test_population_rows_sum_to_zero(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            lio = assemble_liouvillian(random_params(rng))
            assert np.abs(lio[0] + lio[1] + lio[2]).max() <= 1e-12

    def test_conjugation_compatibility(self):
        # the equation for rho_ij must be the conjugate of the one for rho_ji
        rng = np.random.default_rng(8)
        for _ in range(10):
            lio = assemble_liouvillian(random_params(rng))
            permuted = lio[np.ix_(_CONJ_PERM, _CONJ_PERM)]
            assert np.abs(permuted - lio.conj()).max() <= 1e-14

    def test_coupling_coherence_has_no_pump_dephasing(self):
        with_pump = assemble_liouvillian(SystemParams(pump_R=2.0, omega_p=0.0, omega_c=0.0))
        without = assemble_liouvillian(SystemParams(pump_R=0.0, omega_p=0.0, omega_c=0.0))
        assert with_pump[7, 7] == without[7, 7]
        # while the probe coherence does pick up pump_R / 2
        assert with_pump[5, 5] - without[5, 5] == pytest.approx(-1.0)


class TestVectorisation:
    def test_roundtrip(self):
        rng = np.random.default_rng(5)
        rho = random_density_matrix(rng)
        assert np.array_equal(unvectorize(vectorize(rho)), rho)

    def test_documented_ordering(self):
        rho = np.arange(9, dtype=float).reshape(3, 3) + 0j
        vec = vectorize(rho)
        assert vec[0] == rho[0, 0] and vec[1] == rho[1, 1] and vec[2] == rho[2, 2]
        assert vec[3] == rho[1, 0] and vec[5] == rho[2, 0] and vec[7] == rho[2, 1]


class TestSteadyState:
    def test_probe_off_pumps_into_uncoupled_ground_state(self):
        rho = steady_state(SystemParams(omega_p=0.0, omega_c=1.0, pump_R=0.0))
        expected = np.zeros((3, 3), dtype=complex)
        expected[0, 0] = 1.0
        assert np.abs(rho - expected).max() <= 1e-10

    def test_transparency_dark_point(self):
        params = SystemParams(omega_p=0.01, omega_c=3.0, pump_R=0.0,
                              delta_p=0.0, delta_c=0.0)
        rho = steady_state(params)
        assert abs(rho[2, 0]) <= 1e-6

    def test_matches_weak_probe_closed_form(self):
        params = SystemParams(omega_p=1e-3, omega_c=3.0, pump_R=1.5,
                              delta_p=0.5, delta_c=0.0)
        rho = steady_state(params)
        assert rho31_weak_probe(params) == pytest.approx(EXPECTED_RHO31_WEAK, rel=1e-12)
        assert abs(rho[2, 0] - EXPECTED_RHO31_WEAK) <= 1e-4 * abs(EXPECTED_RHO31_WEAK)

    def test_residual_and_invariants_on_random_parameters(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            params = random_params(rng)
            rho = steady_state(params)
            lio = assemble_liouvillian(params)
            norm = np.abs(lio).sum(axis=1).max()
            residual = np.abs(lio @ vectorize(rho)).max()
            assert residual <= 1e-10 * norm
            assert validate_density_matrix(rho).passed

    def test_validator_passes_on_strong_drive_point(self):
        rho = steady_state(SystemParams(omega_c=3.0, pump_R=1.5, omega_p=0.01))
        assert validate_density_matrix(rho).passed

    def test_degenerate_dark_manifold_raises(self):
        with pytest.raises(SingularSystem):
            steady_state(SystemParams(omega_p=0.0, omega_c=0.0, pump_R=0.0))

    def test_weak_probe_detuning_parity(self):
        # with a resonant coupling field, Re rho31 is odd and Im rho31 even
        # in the probe detuning
        base = SystemParams(omega_p=1e-3, omega_c=2.0, pump_R=1.2,
                            delta_c=0.0, gamma1=1.0, gamma2=1.0)
        for delta in (0.3, 1.0, 2.7):
            plus = steady_state(replace(base, delta_p=+delta))[2, 0]
            minus = steady_state(replace(base, delta_p=-delta))[2, 0]
            assert abs(minus.real + plus.real) <= 1e-6 * base.omega_p
            assert abs(minus.imag - plus.imag) <= 1e-6 * base.omega_p


class TestEvolve:
    def test_steady_state_is_fixed_point(self):
        params = SystemParams(omega_p=0.01, omega_c=2.0, pump_R=1.0)
        rho_ss = steady_state(params)
        rho_t = evolve(params, rho_ss, t_final=5.0)
        assert np.abs(rho_t - rho_ss).max() <= 1e-9

    def test_long_time_convergence_from_ground_state(self):
        params = SystemParams(omega_p=0.01, omega_c=1.25, pump_R=1.5,
                              delta_p=0.0, delta_c=0.0)
        rho0 = np.zeros((3, 3), dtype=complex)
        rho0[0, 0] = 1.0
        rho_t = evolve(params, rho0, t_final=200.0)
        assert np.abs(rho_t - steady_state(params)).max() <= 1e-8

    def test_pure_exponential_decay(self):
        params = SystemParams(omega_p=0.0, omega_c=0.0, pump_R=0.0)
        rho0 = np.zeros((3, 3), dtype=complex)
        rho0[2, 2] = 1.0
        for t in (0.5, 1.0, 2.0):
            rho_t = evolve(params, rho0, t_final=t)
            assert abs(rho_t[2, 2].real - math.exp(-2.0 * t)) <= 1e-6

    def test_random_states_converge_to_unique_steady_state(self):
        params = SystemParams(omega_p=0.01, omega_c=2.0, pump_R=1.2)
        rho_ss = steady_state(params)
        rng = np.random.default_rng(23)
        for _ in range(20):
            rho_t = evolve(params, random_density_matrix(rng), t_final=30.0, dt=2e-3)
            assert np.abs(rho_t - rho_ss).max() <= 1e-7

    def test_trace_and_hermiticity_along_trajectory(self):
        params = SystemParams(omega_p=0.01, omega_c=3.0, pump_R=1.5)
        rng = np.random.default_rng(29)
        rho = random_density_matrix(rng)
        for _ in range(6):
            rho = evolve(params, rho, t_final=0.5)
            assert abs(np.trace(rho) - 1.0) <= 1e-9
            assert np.abs(rho - rho.conj().T).max() <= 1e-9

    def test_step_halving_agreement(self):
        params = SystemParams(omega_p=0.01, omega_c=2.5, pump_R=0.8)
        rng = np.random.default_rng(31)
        rho0 = random_density_matrix(rng)
        coarse = evolve(params, rho0, t_final=3.0, dt=2e-3)
        fine = evolve(params, rho0, t_final=3.0, dt=1e-3)
        assert np.abs(coarse - fine).max() <= 1e-9

    def test_oversized_step_detected(self):
        params = SystemParams(omega_p=0.01, omega_c=3.0, pump_R=1.5)
        rho0 = np.zeros((3, 3), dtype=complex)
        rho0[0, 0] = 1.0
        with pytest.raises(NonPhysicalState):
            evolve(params, rho0, t_final=400.0, dt=1.0)

    def test_invalid_initial_state_rejected(self):
        params = SystemParams()
        bad = np.eye(3, dtype=complex)  # trace 3
        with pytest.raises(ValueError):
            evolve(params, bad, t_final=1.0)


class TestValidateDensityMatrix:
    def test_maximally_mixed_passes(self):
        report = validate_density_matrix(np.eye(3, dtype=complex) / 3.0)
        assert report.passed
        assert report.min_eigenvalue == pytest.approx(1.0 / 3.0)

    def test_trace_defect_reported(self):
        rho = np.eye(3, dtype=complex) / 3.0
        rho[0, 0] += 0.1
        report = validate_density_matrix(rho)
        assert not report.passed
        assert report.trace_defect == pytest.approx(0.1)
        assert not report.trace_ok

    def test_non_hermitian_flagged(self):
        rho = np.eye(3, dtype=complex) / 3.0
        rho[0, 1] = 0.1
        report = validate_density_matrix(rho)
        assert not report.hermitian_ok

    def test_negative_eigenvalue_flagged(self):
        rho = np.diag([1.2, -0.2, 0.0]).astype(complex)
        report = validate_density_matrix(rho)
        assert not report.positive_ok
        assert report.min_eigenvalue == pytest.approx(-0.2)
        assert "FAIL" in report.summary()
