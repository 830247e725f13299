"""Measurable phase of the superposition of incident and scattered light.

The observable phase is the argument of a complex amplitude whose real and
imaginary parts are returned alongside the angle, so callers can classify
the on-resonance branch and unwrap across it.  For a symmetric setup
(identical focusing and collection optics)

    phi = arg[(1+s)^(3/2) (1+4 delta^2) - 2 omega_n eta^2
              - 4 i omega_n eta^2 delta],

with s = s0 / (1 + 4 delta^2) the detuned saturation parameter.  The general
asymmetric setup replaces the coupling weight by the geometric mean of the
focusing and collection sides and rescales the transmitted amplitude by the
surviving power fraction sqrt(p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .atom import saturation_at_detuning
from .errors import (
    DegenerateResultError,
    DomainError,
    PoleError,
    UndefinedRatioError,
)

__all__ = [
    "PhaseBranch",
    "SymmetricCoupling",
    "AsymmetricCoupling",
    "PhaseResult",
    "phase_symmetric",
    "phase_asymmetric",
    "resonance_branch",
    "critical_saturation",
    "dispersive_phase_arctan",
    "kerr_linear_phase",
    "kerr_phase",
    "kerr_relative_error",
    "repeater_margin",
]


class PhaseBranch(Enum):
    """Classification of a phase value by the sign structure of its parts."""

    PI = "pi"             # on resonance, scattered light dominates
    ZERO = "zero"         # on resonance, transmitted light dominates
    BOUNDARY = "boundary" # both parts vanish; the phase is undefined
    GENERIC = "generic"   # off resonance


def _check_unit_interval(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")


@dataclass(frozen=True)
class SymmetricCoupling:
    """Coupling of a symmetric setup: solid-angle fraction and overlap.

    omega_n is the dipole-weighted solid-angle fraction covered by the
    focusing optics (1 means full dipole-pattern coverage), eta the field
    overlap of the incident beam with the dipole pattern on that region.
    """

    omega_n: float
    eta: float

    def __post_init__(self) -> None:
        _check_unit_interval("omega_n", self.omega_n)
        _check_unit_interval("eta", self.eta)


@dataclass(frozen=True)
class AsymmetricCoupling:
    """Coupling for distinct focusing and collection optics.

    omega_n/eta describe the focusing side, omega_n_prime/eta_prime the
    collection side, and p the power fraction of the incident beam that
    survives re-collimation.  omega_n_prime = omega_n, eta_prime = eta,
    p = 1 collapses to the symmetric case.
    """

    omega_n: float
    eta: float
    omega_n_prime: float
    eta_prime: float
    p: float

    def __post_init__(self) -> None:
        _check_unit_interval("omega_n", self.omega_n)
        _check_unit_interval("eta", self.eta)
        _check_unit_interval("omega_n_prime", self.omega_n_prime)
        _check_unit_interval("eta_prime", self.eta_prime)
        _check_unit_interval("p", self.p)

    def symmetric(self) -> SymmetricCoupling:
        """Focusing-side coupling, used for scattered-power bookkeeping."""
        return SymmetricCoupling(omega_n=self.omega_n, eta=self.eta)


@dataclass(frozen=True)
class PhaseResult:
    """Phase in (-pi, pi] plus the complex parts that produced it.

    phi equals atan2(imag_part, real_part) exactly; on the resonant pi
    branch the sign convention reports +pi.
    """

    phi: float
    branch: PhaseBranch
    real_part: float
    imag_part: float


def _assemble(real: float, imag: float) -> PhaseResult:
    # -0.0 + 0.0 == +0.0, so atan2 lands on +pi for the resonant pi branch
    imag = imag + 0.0
    if real == 0.0 and imag == 0.0:
        raise DegenerateResultError(
            "transmitted and scattered amplitudes cancel exactly; "
            "the phase of a null field is undefined")
    if imag == 0.0:
        branch = PhaseBranch.PI if real < 0.0 else PhaseBranch.ZERO
    else:
        branch = PhaseBranch.GENERIC
    return PhaseResult(phi=math.atan2(imag, real), branch=branch,
                       real_part=real, imag_part=imag)


def _check_s0(s0: float) -> None:
    if s0 < 0:
        raise DomainError(f"s0 must be non-negative, got {s0!r}")


def phase_symmetric(coupling: SymmetricCoupling, delta: float, s0: float) -> PhaseResult:
    """Exact phase for a symmetric setup.

    On resonance the phase is pi when 2 omega_n eta^2 exceeds (1+s0)^(3/2)
    and zero otherwise; exactly on that boundary the complex amplitude
    vanishes and DegenerateResultError is raised instead of a silent zero.
    """
    _check_s0(s0)
    s = saturation_at_detuning(s0, delta)
    weight = 2.0 * coupling.omega_n * coupling.eta**2
    lorentz = 1.0 + 4.0 * delta * delta
    real = (1.0 + s) ** 1.5 * lorentz - weight
    imag = -2.0 * weight * delta
    return _assemble(real, imag)


def phase_asymmetric(coupling: AsymmetricCoupling, delta: float, s0: float) -> PhaseResult:
    """Exact phase for the general (asymmetric) setup.

    phi = arg[sqrt(p) (1+s)^(3/2) (1+4 delta^2)
              - 2 sqrt(omega_n omega_n') eta eta'
              - 4 i sqrt(omega_n omega_n') eta eta' delta]
    """
    if coupling.p == 0:
        raise DomainError("p must be positive for a defined phase")
    _check_s0(s0)
    s = saturation_at_detuning(s0, delta)
    cross = (2.0 * math.sqrt(coupling.omega_n * coupling.omega_n_prime)
             * coupling.eta * coupling.eta_prime)
    lorentz = 1.0 + 4.0 * delta * delta
    real = math.sqrt(coupling.p) * (1.0 + s) ** 1.5 * lorentz - cross
    imag = -2.0 * cross * delta
    return _assemble(real, imag)


def resonance_branch(coupling: SymmetricCoupling, s0: float) -> PhaseBranch:
    """On-resonance branch: PI iff 2 omega_n eta^2 > (1+s0)^(3/2), ZERO iff
    smaller, BOUNDARY at exact equality."""
    _check_s0(s0)
    weight = 2.0 * coupling.omega_n * coupling.eta**2
    reference = (1.0 + s0) ** 1.5
    if weight > reference:
        return PhaseBranch.PI
    if weight < reference:
        return PhaseBranch.ZERO
    return PhaseBranch.BOUNDARY


def critical_saturation(coupling: SymmetricCoupling) -> Optional[float]:
    """Largest s0 that keeps the resonant pi branch.

    (2 omega_n eta^2)^(2/3) - 1 when 2 omega_n eta^2 >= 1, else None: no
    non-negative drive strength reaches the pi branch at all.
    """
    weight = 2.0 * coupling.omega_n * coupling.eta**2
    if weight < 1.0:
        return None
    return weight ** (2.0 / 3.0) - 1.0


def dispersive_phase_arctan(coupling: SymmetricCoupling, delta: float, s0: float) -> float:
    """Arctan form of the symmetric phase, valid for |delta| >= 1/2.

    -arctan[4 omega_n eta^2 delta /
            ((1+s)^(3/2) (1+4 delta^2) - 2 omega_n eta^2)]

    On this domain the denominator is non-negative and the value matches
    ``phase_symmetric``; closer to resonance the arctan cannot resolve the
    branch, so smaller detunings raise DomainError.  A vanishing denominator
    yields the signed limit of +-pi/2.
    """
    if abs(delta) < 0.5:
        raise DomainError(
            f"the arctan form requires |delta| >= 0.5, got {delta!r}")
    _check_s0(s0)
    s = saturation_at_detuning(s0, delta)
    weight = 2.0 * coupling.omega_n * coupling.eta**2
    numer = 2.0 * weight * delta
    denom = (1.0 + s) ** 1.5 * (1.0 + 4.0 * delta * delta) - weight
    if denom == 0.0:
        return math.copysign(0.5 * math.pi, -numer)
    return -math.atan(numer / denom)


def kerr_linear_phase(coupling: SymmetricCoupling, delta: float) -> float:
    """Weak-drive dispersive phase.

    phi0 = -4 omega_n eta^2 delta / (1 + 4 delta^2 - 2 omega_n eta^2)

    Raises PoleError when the denominator vanishes.
    """
    weight = 2.0 * coupling.omega_n * coupling.eta**2
    denom = 1.0 + 4.0 * delta * delta - weight
    if denom == 0.0:
        raise PoleError(
            "1 + 4 delta^2 - 2 omega_n eta^2 vanished; the linear phase has "
            "a pole here")
    return -2.0 * weight * delta / denom


def kerr_phase(phi0: float, s: float) -> float:
    """Intensity-corrected phase phi0 (1 - 3 s / 2)."""
    return phi0 * (1.0 - 1.5 * s)


def kerr_relative_error(coupling: SymmetricCoupling, delta: float, s: float) -> float:
    """Relative truncation error of the linear-in-s Kerr form.

    Compares phi0 (1 - 3 s / 2) against the dispersive phase with its full
    saturation dependence,

        -4 omega_n eta^2 delta / ((1+s)^(3/2) (1+4 delta^2)
                                  - 2 omega_n eta^2),

    at the same detuned saturation parameter s.  The error vanishes as
    s -> 0 and grows monotonically with drive strength.  Raises
    UndefinedRatioError when the reference phase is zero and PoleError when
    either denominator vanishes.
    """
    if s < 0:
        raise DomainError(f"s must be non-negative, got {s!r}")
    weight = 2.0 * coupling.omega_n * coupling.eta**2
    numer = -2.0 * weight * delta
    denom = (1.0 + s) ** 1.5 * (1.0 + 4.0 * delta * delta) - weight
    if denom == 0.0:
        raise PoleError("the dispersive reference phase has a pole here")
    reference = numer / denom
    if reference == 0.0:
        raise UndefinedRatioError(
            "the reference phase vanishes; the relative error is undefined")
    approx = kerr_phase(kerr_linear_phase(coupling, delta), s)
    return abs(reference - approx) / abs(reference)


def repeater_margin(phi: float, coherent_amplitude: float) -> float:
    """How far a phase shift exceeds the probe state's phase uncertainty.

    |phi| sqrt(amplitude), against an uncertainty of amplitude^(-1/2) for a
    large-amplitude coherent state.  Values above 1 mean the imprinted shift
    is resolvable in a single shot.
    """
    if coherent_amplitude <= 0:
        raise DomainError(
            f"coherent_amplitude must be positive, got {coherent_amplitude!r}")
    return abs(phi) * math.sqrt(coherent_amplitude)
