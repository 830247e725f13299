"""Unit and property tests for the driven two-level-atom response."""

import cmath
import math

import numpy as np
import pytest
from scipy.constants import c, epsilon_0, hbar
from scipy.optimize import minimize_scalar

from atomphase import (
    FULL_DIPOLE_SOLID_ANGLE,
    AtomTransition,
    DomainError,
    Drive,
    coherent_fraction,
    excited_state_population,
    physical_to_normalized,
    saturation_at_detuning,
    scattered_phase,
    scattered_power_ratio,
    steady_state_coherence,
)

OMEGA0 = 2.0 * math.pi * 384.23e12  # rad/s, optical-frequency scale
MU = 3.58e-29                       # C*m, typical strong dipole line


@pytest.fixture
def atom():
    return AtomTransition.from_dipole(OMEGA0, MU)


class TestAtomTransition:
    def test_linewidth_from_dipole(self, atom):
        expected = OMEGA0**3 * MU**2 / (3.0 * math.pi * epsilon_0 * hbar * c**3)
        np.testing.assert_allclose(atom.gamma, expected, rtol=1e-15)

    def test_from_linewidth_round_trip(self, atom):
        rebuilt = AtomTransition.from_linewidth(OMEGA0, atom.gamma)
        np.testing.assert_allclose(rebuilt.mu, MU, rtol=1e-12)

    def test_doubling_mu_quadruples_gamma(self, atom):
        doubled = AtomTransition.from_dipole(OMEGA0, 2.0 * MU)
        np.testing.assert_allclose(doubled.gamma, 4.0 * atom.gamma, rtol=1e-12)

    def test_wavelength(self, atom):
        np.testing.assert_allclose(atom.wavelength, 2.0 * math.pi * c / OMEGA0,
                                   rtol=1e-15)

    @pytest.mark.parametrize("kwargs", [
        dict(omega0=-OMEGA0, gamma=1.0, mu=MU),
        dict(omega0=OMEGA0, gamma=0.0, mu=MU),
        dict(omega0=OMEGA0, gamma=1.0, mu=-MU),
        dict(omega0=OMEGA0, gamma=1.0, mu=complex(MU, 1e-31)),
    ])
    def test_rejects_bad_parameters(self, kwargs):
        with pytest.raises(DomainError):
            AtomTransition(**kwargs)

    def test_rejects_complex_dipole_in_constructor(self):
        with pytest.raises(DomainError):
            AtomTransition.from_dipole(OMEGA0, complex(MU, 0.0))


class TestPhysicalToNormalized:
    def test_unit_saturation_power(self, atom):
        # P = hbar omega0 Gamma / 8 at full coverage and perfect overlap
        power = hbar * atom.omega0 * atom.gamma / 8.0
        result = physical_to_normalized(power, atom, FULL_DIPOLE_SOLID_ANGLE, 1.0)
        np.testing.assert_allclose(result.s0, 1.0, rtol=1e-12)

    def test_chain_matches_closed_form(self, atom):
        # the E0 -> Rabi -> s0 chain must agree with 8 P omega_n eta^2 /
        # (hbar omega0 Gamma) whenever gamma is consistent with mu
        rng = np.random.default_rng(7)
        for _ in range(50):
            power = float(rng.uniform(1e-15, 1e-9))
            omega_n = float(rng.uniform(0.0, 1.0))
            eta = float(rng.uniform(0.0, 1.0))
            result = physical_to_normalized(
                power, atom, omega_n * FULL_DIPOLE_SOLID_ANGLE, eta)
            closed = 8.0 * power * omega_n * eta**2 / (hbar * atom.omega0 * atom.gamma)
            np.testing.assert_allclose(result.s0, closed, rtol=1e-12)

    def test_rabi_is_field_times_dipole(self, atom):
        result = physical_to_normalized(1e-12, atom, 4.0, 0.7)
        np.testing.assert_allclose(result.rabi, result.e_field * atom.mu / hbar,
                                   rtol=1e-15)

    def test_mu_scaling_law(self, atom):
        # at fixed power, quadrupling gamma via 2 mu divides s0 by four
        doubled = AtomTransition.from_dipole(OMEGA0, 2.0 * MU)
        power = 1e-12
        s0_ref = physical_to_normalized(power, atom, 2.0, 1.0).s0
        s0_doubled = physical_to_normalized(power, doubled, 2.0, 1.0).s0
        np.testing.assert_allclose(s0_doubled, s0_ref / 4.0, rtol=1e-12)

    @pytest.mark.parametrize("power,solid_angle,eta", [
        (-1e-12, 1.0, 1.0),
        (1e-12, -0.1, 1.0),
        (1e-12, FULL_DIPOLE_SOLID_ANGLE * 1.001, 1.0),
        (1e-12, 1.0, -0.1),
        (1e-12, 1.0, 1.1),
    ])
    def test_domain_errors(self, atom, power, solid_angle, eta):
        with pytest.raises(DomainError):
            physical_to_normalized(power, atom, solid_angle, eta)


class TestSaturation:
    def test_on_resonance(self):
        assert saturation_at_detuning(1.0, 0.0) == 1.0

    @pytest.mark.parametrize("delta", [0.5, -0.5])
    def test_half_linewidth(self, delta):
        assert saturation_at_detuning(1.0, delta) == 0.5

    def test_far_detuned(self):
        np.testing.assert_allclose(saturation_at_detuning(0.1, -10.0),
                                   0.1 / 401.0, rtol=1e-15)

    def test_never_exceeds_s0(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            s0 = float(rng.uniform(0.0, 100.0))
            delta = float(rng.uniform(-50.0, 50.0))
            assert saturation_at_detuning(s0, delta) <= s0

    def test_drive_type_consistency(self):
        drive = Drive(delta=-2.0, s0=3.0)
        np.testing.assert_allclose(drive.s, 3.0 / 17.0, rtol=1e-15)
        assert drive.s <= drive.s0
        with pytest.raises(DomainError):
            Drive(delta=0.0, s0=-0.1)

    def test_drive_from_power(self):
        atom = AtomTransition.from_dipole(OMEGA0, MU)
        power = hbar * atom.omega0 * atom.gamma / 8.0
        drive = Drive.from_power(power, atom, FULL_DIPOLE_SOLID_ANGLE, 1.0,
                                 delta=-1.0)
        np.testing.assert_allclose(drive.s0, 1.0, rtol=1e-12)
        np.testing.assert_allclose(drive.s, drive.s0 / 5.0, rtol=1e-12)


class TestExcitedStatePopulation:
    def test_dark_atom(self):
        assert excited_state_population(0.0) == 0.0

    def test_unit_saturation(self):
        assert excited_state_population(1.0) == 0.25

    def test_saturates_at_one_half(self):
        assert excited_state_population(1e12) > 0.4999
        assert excited_state_population(1e12) < 0.5

    def test_strictly_increasing_and_bounded(self):
        grid = np.logspace(-6, 6, 121)
        values = [excited_state_population(s) for s in grid]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert all(0.0 < v < 0.5 for v in values)


class TestSteadyStateCoherence:
    GAMMA = 2.0 * math.pi * 6.07e6

    def test_weak_drive_limit(self):
        rabi = 1e-6 * self.GAMMA
        rho = steady_state_coherence(rabi, 0.0, self.GAMMA)
        expected = 1j * rabi / self.GAMMA
        assert abs(rho - expected) / abs(expected) < 1e-6

    def test_strong_drive_vanishes(self):
        rho = steady_state_coherence(1e9 * self.GAMMA, 0.0, self.GAMMA)
        assert abs(rho) < 1e-8

    def test_maximum_magnitude_oracle(self):
        # independent search over the drive strength at zero detuning
        result = minimize_scalar(
            lambda rabi: -abs(steady_state_coherence(rabi, 0.0, self.GAMMA)),
            bounds=(1e-4 * self.GAMMA, 1e2 * self.GAMMA),
            method="bounded",
            options={"xatol": 1e-6 * self.GAMMA},
        )
        np.testing.assert_allclose(-result.fun, 0.5 / math.sqrt(2.0), rtol=1e-9)
        np.testing.assert_allclose(result.x, self.GAMMA / math.sqrt(2.0), rtol=1e-6)

    def test_phase_independent_of_drive_strength(self):
        for delta in (-3.0, -0.2, 0.0, 0.7, 5.0):
            phases = [
                cmath.phase(steady_state_coherence(rabi, delta * self.GAMMA, self.GAMMA))
                for rabi in (1e-3 * self.GAMMA, self.GAMMA, 1e3 * self.GAMMA)
            ]
            assert max(phases) - min(phases) < 1e-12


class TestScatteredPhase:
    def test_on_resonance(self):
        assert scattered_phase(0.0) == math.pi / 2.0

    def test_on_resonance_with_gouy(self):
        assert scattered_phase(0.0, include_gouy=True) == math.pi

    def test_half_linewidth(self):
        np.testing.assert_allclose(scattered_phase(0.5), 0.75 * math.pi,
                                   rtol=1e-15)

    def test_odd_about_pi_half(self):
        for delta in np.linspace(0.0, 20.0, 101):
            plus = scattered_phase(delta) - math.pi / 2.0
            minus = scattered_phase(-delta) - math.pi / 2.0
            assert abs(plus + minus) < 1e-12


class TestScatteredPowerRatio:
    def test_half_solid_angle_reaches_two(self):
        assert scattered_power_ratio(0.5, 1.0, 0.0, 0.0) == 2.0

    def test_full_coverage_reaches_four(self):
        assert scattered_power_ratio(1.0, 1.0, 0.0, 0.0) == 4.0

    def test_unit_saturation(self):
        np.testing.assert_allclose(scattered_power_ratio(1.0, 1.0, 0.0, 1.0),
                                   1.0, rtol=1e-15)

    def test_even_in_detuning(self):
        for delta in np.linspace(0.1, 10.0, 25):
            for s0 in (0.0, 0.3, 5.0):
                a = scattered_power_ratio(0.8, 0.9, delta, s0)
                b = scattered_power_ratio(0.8, 0.9, -delta, s0)
                assert a == b

    def test_non_increasing_in_s0(self):
        s0_grid = np.linspace(0.0, 20.0, 50)
        for delta in (0.0, -1.0, 3.0):
            values = [scattered_power_ratio(0.7, 0.95, delta, s0) for s0 in s0_grid]
            assert all(b <= a for a, b in zip(values, values[1:]))

    def test_composition_identity(self):
        # ratio == 4 omega_n eta^2 * coherent_fraction(s)^2 / (1 + 4 delta^2)
        for delta in np.linspace(-5.0, 5.0, 21):
            for s0 in (0.0, 0.1, 1.0, 10.0):
                s = saturation_at_detuning(s0, delta)
                direct = scattered_power_ratio(0.62, 0.87, delta, s0)
                composed = (4.0 * 0.62 * 0.87**2 * coherent_fraction(s) ** 2
                            / (1.0 + 4.0 * delta**2))
                np.testing.assert_allclose(direct, composed, rtol=1e-12)


class TestCoherentFraction:
    def test_values(self):
        assert coherent_fraction(0.0) == 1.0
        assert coherent_fraction(1.0) == 0.5
        np.testing.assert_allclose(coherent_fraction(9.0), 0.1, rtol=1e-15)
