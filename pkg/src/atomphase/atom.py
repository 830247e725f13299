"""Steady-state response of a coherently driven two-level atom.

All public operations work in normalized units: detunings are expressed in
linewidths (delta = Delta/Gamma) and drive strength as the on-resonance
saturation parameter s0 = 2 Omega_R^2 / Gamma^2.  ``physical_to_normalized``
is the single bridge from SI quantities (watts, C*m) into those units; it
approximates the drive frequency by the transition frequency, which is the
usual near-resonant assumption.

Every function is pure and safe to map over parameter grids in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from scipy.constants import c as _C, epsilon_0 as _EPS0, hbar as _HBAR

from .errors import DomainError

__all__ = [
    "FULL_DIPOLE_SOLID_ANGLE",
    "AtomTransition",
    "Drive",
    "NormalizedDrive",
    "physical_to_normalized",
    "saturation_at_detuning",
    "excited_state_population",
    "steady_state_coherence",
    "scattered_phase",
    "scattered_power_ratio",
    "coherent_fraction",
]

# Full-sphere integral of the dipole intensity pattern sin^2(Theta).
FULL_DIPOLE_SOLID_ANGLE = 8.0 * math.pi / 3.0


def _require_real_positive(name: str, value) -> None:
    if isinstance(value, complex):
        raise DomainError(f"{name} must be real, got {value!r}")
    if not value > 0:
        raise DomainError(f"{name} must be positive, got {value!r}")


@dataclass(frozen=True)
class AtomTransition:
    """A two-level transition in SI units.

    Attributes
    ----------
    omega0 : float
        Transition angular frequency (rad/s).
    gamma : float
        Spontaneous emission rate (rad/s).
    mu : float
        Dipole matrix element (C*m), real and positive by convention.
    """

    omega0: float
    gamma: float
    mu: float

    def __post_init__(self) -> None:
        _require_real_positive("omega0", self.omega0)
        _require_real_positive("gamma", self.gamma)
        _require_real_positive("mu", self.mu)

    @property
    def wavelength(self) -> float:
        """Transition wavelength 2 pi c / omega0 (m)."""
        return 2.0 * math.pi * _C / self.omega0

    @classmethod
    def from_dipole(cls, omega0: float, mu: float) -> "AtomTransition":
        """Build a transition whose linewidth follows from its dipole moment.

        gamma = omega0^3 mu^2 / (3 pi eps0 hbar c^3)
        """
        _require_real_positive("omega0", omega0)
        _require_real_positive("mu", mu)
        gamma = omega0**3 * mu**2 / (3.0 * math.pi * _EPS0 * _HBAR * _C**3)
        return cls(omega0=omega0, gamma=gamma, mu=mu)

    @classmethod
    def from_linewidth(cls, omega0: float, gamma: float) -> "AtomTransition":
        """Build a transition from its measured linewidth, inferring mu."""
        _require_real_positive("omega0", omega0)
        _require_real_positive("gamma", gamma)
        mu = math.sqrt(3.0 * math.pi * _EPS0 * _HBAR * _C**3 * gamma / omega0**3)
        return cls(omega0=omega0, gamma=gamma, mu=mu)


class NormalizedDrive(NamedTuple):
    """Physical drive translated into focal field, Rabi frequency and s0."""

    e_field: float  # V/m, amplitude parallel to the dipole at the focus
    rabi: float     # rad/s
    s0: float       # on-resonance saturation parameter


def physical_to_normalized(
    power: float,
    atom: AtomTransition,
    solid_angle: float,
    eta: float,
) -> NormalizedDrive:
    """Convert incident power into the focal field, Rabi frequency and s0.

    A beam of power P focused over the (unnormalized) dipole-weighted solid
    angle Omega with field overlap eta produces the focal amplitude

        E0 = sqrt(2 P) / (lambda sqrt(eps0 c)) * sqrt(Omega) * eta

    from which Omega_R = E0 mu / hbar and s0 = 2 Omega_R^2 / Gamma^2.  When
    gamma is consistent with mu, s0 equals 8 P (Omega/(8 pi/3)) eta^2 /
    (hbar omega0 Gamma).

    Parameters
    ----------
    power : float
        Incident beam power (W), non-negative.
    atom : AtomTransition
        Transition supplying wavelength, dipole moment and linewidth.
    solid_angle : float
        Dipole-weighted solid angle in [0, 8 pi / 3] (unnormalized).
    eta : float
        Field overlap with the dipole pattern, in [0, 1].
    """
    if power < 0:
        raise DomainError(f"power must be non-negative, got {power!r}")
    if not 0.0 <= solid_angle <= FULL_DIPOLE_SOLID_ANGLE:
        raise DomainError(
            f"solid_angle must lie in [0, 8 pi/3], got {solid_angle!r}")
    if not 0.0 <= eta <= 1.0:
        raise DomainError(f"eta must lie in [0, 1], got {eta!r}")
    e_field = (
        math.sqrt(2.0 * power)
        / (atom.wavelength * math.sqrt(_EPS0 * _C))
        * math.sqrt(solid_angle)
        * eta
    )
    rabi = e_field * atom.mu / _HBAR
    s0 = 2.0 * rabi**2 / atom.gamma**2
    return NormalizedDrive(e_field=e_field, rabi=rabi, s0=s0)


@dataclass(frozen=True)
class Drive:
    """Drive strength in normalized units: detuning Delta/Gamma plus s0."""

    delta: float
    s0: float

    def __post_init__(self) -> None:
        if self.s0 < 0:
            raise DomainError(f"s0 must be non-negative, got {self.s0!r}")

    @property
    def s(self) -> float:
        """Saturation parameter at this detuning, never exceeding s0."""
        return saturation_at_detuning(self.s0, self.delta)

    @classmethod
    def from_power(
        cls,
        power: float,
        atom: AtomTransition,
        solid_angle: float,
        eta: float,
        delta: float = 0.0,
    ) -> "Drive":
        """Derive s0 from physical power through ``physical_to_normalized``."""
        return cls(delta=delta, s0=physical_to_normalized(
            power, atom, solid_angle, eta).s0)


def saturation_at_detuning(s0: float, delta: float) -> float:
    """Saturation parameter off resonance: s0 / (1 + 4 delta^2)."""
    return s0 / (1.0 + 4.0 * delta * delta)


def excited_state_population(s: float) -> float:
    """Steady-state upper-level population (s/2) / (1 + s).

    Monotone in s and bounded by the fully saturated value 1/2.
    """
    return 0.5 * s / (1.0 + s)


def steady_state_coherence(rabi: float, delta_abs: float, gamma: float) -> complex:
    """Steady-state coherence of the driven transition.

    rho_ab = Omega_R (i Gamma - 2 Delta) / (4 Delta^2 + Gamma^2 + 2 Omega_R^2)

    with the absolute detuning delta_abs in rad/s.  The phase of the result
    does not depend on the drive strength; only its magnitude saturates.
    """
    denom = 4.0 * delta_abs**2 + gamma**2 + 2.0 * rabi**2
    return rabi * complex(-2.0 * delta_abs, gamma) / denom


def scattered_phase(delta: float, include_gouy: bool = False) -> float:
    """Phase of the coherently scattered field, arctan(2 delta) + pi/2.

    With ``include_gouy`` the pi/2 focal phase picked up by the re-diverging
    transmitted beam is folded in, shifting the total to arctan(2 delta) + pi.
    """
    offset = math.pi if include_gouy else 0.5 * math.pi
    return math.atan(2.0 * delta) + offset


def scattered_power_ratio(omega_n: float, eta: float, delta: float, s0: float) -> float:
    """Scattered power over incident power.

    4 omega_n eta^2 / ((1 + 4 delta^2) (1 + s)^2), with s the detuned
    saturation parameter.  Reaches 2 for half-solid-angle focusing and 4 for
    full dipole-weighted coverage, both at zero detuning and weak drive.
    """
    s = saturation_at_detuning(s0, delta)
    return 4.0 * omega_n * eta * eta / ((1.0 + 4.0 * delta * delta) * (1.0 + s) ** 2)


def coherent_fraction(s: float) -> float:
    """Fraction 1 / (1 + s) of the scattered power coherent with the drive."""
    return 1.0 / (1.0 + s)
