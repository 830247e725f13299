"""Focusing-geometry parameters from physical aperture descriptions.

Bridges concrete optics (lens cones, deep parabolic mirrors, incident beam
profiles) to the dimensionless coupling numbers consumed by the phase
model: the dipole-weighted solid-angle fraction omega_n, the beam/dipole
field overlap eta, and the re-collimation triple (omega_n_prime,
eta_prime, p) of a finite parabolic mirror.

Conventions
-----------
The emitter sits at the focus.  The polar angle theta is measured from the
optical axis; for a parabolic mirror the vertex lies at theta = pi and the
rim toward theta = 0.  Dipole weighting uses the far-field intensity
sin^2(Theta) about the dipole axis, whose full-sphere integral is 8 pi / 3;
solid-angle fractions are normalized to that value.  Mirror computations
assume a dipole along the optical axis: a transverse dipole breaks the
rotational symmetry the radial quadratures rely on and is rejected.

Overlaps are scalar amplitude overlaps restricted to the illuminated
region, with pupil measure 2 pi d dd or angular measure 2 pi sin(theta)
dtheta used consistently on both sides of the ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple, Optional, Tuple, Union

from scipy.integrate import quad

from .errors import DegenerateResultError, DomainError

__all__ = [
    "DipoleOrientation",
    "ConeAperture",
    "ParabolicMirror",
    "DipolePattern",
    "BeamProfile",
    "RayMapping",
    "Recollimation",
    "WaistOptimum",
    "cone_weighted_solid_angle",
    "parabola_ray_map",
    "mirror_weighted_solid_angle",
    "pupil_dipole_profile",
    "overlap_eta",
    "recollimation_parameters",
    "optimize_waist",
]

_EPSABS = 1e-13
_EPSREL = 1e-12
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class DipoleOrientation(Enum):
    """Dipole axis relative to the optical axis."""

    AXIAL = "axial"
    TRANSVERSE = "transverse"


@dataclass(frozen=True)
class ConeAperture:
    """Focusing cone of half-angle alpha in (0, pi] about the optical axis."""

    half_angle: float
    orientation: DipoleOrientation

    def __post_init__(self) -> None:
        if not 0.0 < self.half_angle <= math.pi:
            raise DomainError(
                f"half_angle must lie in (0, pi], got {self.half_angle!r}")
        if not isinstance(self.orientation, DipoleOrientation):
            raise DomainError(
                f"orientation must be a DipoleOrientation, got {self.orientation!r}")


@dataclass(frozen=True)
class ParabolicMirror:
    """Deep parabolic mirror: focal length, aperture radius, on-axis hole."""

    focal_length: float
    aperture_radius: float
    hole_radius: float = 0.0

    def __post_init__(self) -> None:
        if self.focal_length <= 0:
            raise DomainError(
                f"focal_length must be positive, got {self.focal_length!r}")
        if self.aperture_radius <= 0:
            raise DomainError(
                f"aperture_radius must be positive, got {self.aperture_radius!r}")
        if not 0.0 <= self.hole_radius < self.aperture_radius:
            raise DomainError(
                "hole_radius must satisfy 0 <= hole < aperture_radius, got "
                f"{self.hole_radius!r}")


@dataclass(frozen=True)
class DipolePattern:
    """Far-field dipole radiation pattern sin^2(Theta) about the dipole axis.

    For an axial dipole Theta is the polar angle itself; for a transverse
    dipole (axis in the phi = 0 plane) cos(Theta) = sin(theta) cos(phi).
    The intensity integrates to 8 pi / 3 over the full sphere.
    """

    orientation: DipoleOrientation

    def intensity(self, theta: float, phi: float = 0.0) -> float:
        if self.orientation is DipoleOrientation.AXIAL:
            return math.sin(theta) ** 2
        projection = math.sin(theta) * math.cos(phi)
        return 1.0 - projection * projection

    def amplitude(self, theta: float, phi: float = 0.0) -> float:
        return math.sqrt(self.intensity(theta, phi))


def _axial_fraction(theta: float) -> float:
    # cumulative dipole-weighted fraction of the axial pattern over [0, theta]
    c = math.cos(theta)
    return 0.25 * (2.0 - 3.0 * c + c**3)


def cone_weighted_solid_angle(cone: ConeAperture) -> float:
    """Dipole-weighted solid-angle fraction covered by a focusing cone.

    Evaluates (3 / 8 pi) * integral of sin^2(Theta) over the cone of
    half-angle alpha, in closed form:

        axial       (2 - 3 cos a + cos^3 a) / 4
        transverse  3 (1 - cos a) / 4 - (2 - 3 cos a + cos^3 a) / 8

    Both reach 1/2 at a hemisphere and 1 on the full sphere.
    """
    axial = _axial_fraction(cone.half_angle)
    if cone.orientation is DipoleOrientation.AXIAL:
        return axial
    return 0.75 * (1.0 - math.cos(cone.half_angle)) - 0.5 * axial


class RayMapping(NamedTuple):
    """Focal-ray angle and re-collimated exit radius of one pupil radius."""

    theta: float
    d_prime: float


def parabola_ray_map(d: float, mirror: ParabolicMirror) -> RayMapping:
    """Map a pupil radius to its emission angle and re-collimation image.

    An axis-parallel ray entering the pupil at radius d strikes the parabola
    and reaches the focus from theta = pi - 2 arctan(d / 2f), with the
    vertex direction at theta = pi.  Retraced through the focus it leaves
    the mirror at d' = 4 f^2 / d, an involution exchanging the inner and
    outer pupil.
    """
    if d <= 0:
        raise DomainError(f"pupil radius must be positive, got {d!r}")
    f = mirror.focal_length
    theta = math.pi - 2.0 * math.atan(0.5 * d / f)
    return RayMapping(theta=theta, d_prime=4.0 * f * f / d)


def mirror_weighted_solid_angle(mirror: ParabolicMirror) -> float:
    """Axial-dipole-weighted solid-angle fraction covered by the mirror.

    The pupil annulus [hole, R] images onto theta in [theta(R),
    theta(hole)], with a hole-free mirror reaching the vertex at theta = pi.
    """
    if mirror.hole_radius == 0.0:
        theta_near_vertex = math.pi
    else:
        theta_near_vertex = parabola_ray_map(mirror.hole_radius, mirror).theta
    theta_rim = parabola_ray_map(mirror.aperture_radius, mirror).theta
    return _axial_fraction(theta_near_vertex) - _axial_fraction(theta_rim)


def _pupil_dipole(d: float, f: float) -> float:
    # sin(theta(d)) / (1 + (d/2f)^2), reduced to avoid the trig round trip
    u = 0.5 * d / f
    return 2.0 * u / (1.0 + u * u) ** 2


def pupil_dipole_profile(d: float, mirror: ParabolicMirror) -> float:
    """Pupil-plane amplitude of the axial dipole field behind the mirror.

    A(d) = sin(theta(d)) / (1 + (d / 2f)^2).  Ring by ring, A^2 2 pi d dd
    equals f^2 times sin^3(theta) 2 pi dtheta under the theta(d) map, so
    the pupil image carries the far-field energy distribution (up to the
    fixed f^2 scale).  Vanishes toward both the vertex and the rim.
    """
    if d <= 0:
        raise DomainError(f"pupil radius must be positive, got {d!r}")
    return _pupil_dipole(d, mirror.focal_length)


@dataclass(frozen=True)
class BeamProfile:
    """Real radial amplitude of the incident beam.

    Presets: ``flat_top`` (uniform), ``doughnut`` (ring mode
    (d/w) exp(-d^2/w^2) on a mirror pupil), ``dipole_matched``
    (proportional to the dipole pattern in whatever coordinates it is
    evaluated).  ``custom`` wraps any square-integrable radial amplitude,
    evaluated on the native coordinate of the region: pupil radius for
    mirrors, polar angle for cones.
    """

    kind: str
    waist: Optional[float] = None
    func: Optional[Callable[[float], float]] = None

    @classmethod
    def flat_top(cls) -> "BeamProfile":
        return cls(kind="flattop")

    @classmethod
    def doughnut(cls, waist: float) -> "BeamProfile":
        if waist <= 0:
            raise DomainError(f"doughnut waist must be positive, got {waist!r}")
        return cls(kind="doughnut", waist=waist)

    @classmethod
    def dipole_matched(cls) -> "BeamProfile":
        return cls(kind="matched")

    @classmethod
    def custom(cls, func: Callable[[float], float]) -> "BeamProfile":
        if not callable(func):
            raise DomainError("custom profile requires a callable amplitude")
        return cls(kind="custom", func=func)

    def pupil_amplitude(self, mirror: ParabolicMirror) -> Callable[[float], float]:
        """Amplitude as a function of pupil radius for the given mirror."""
        if self.kind == "flattop":
            return lambda d: 1.0
        if self.kind == "doughnut":
            w = self.waist
            return lambda d: (d / w) * math.exp(-((d / w) ** 2))
        if self.kind == "matched":
            f = mirror.focal_length
            return lambda d: _pupil_dipole(d, f)
        return self.func

    def angular_amplitude(self) -> Callable[[float], float]:
        """Amplitude as a function of polar angle (axial-dipole context)."""
        if self.kind == "flattop":
            return lambda theta: 1.0
        if self.kind == "matched":
            return math.sin
        if self.kind == "doughnut":
            raise DomainError(
                "a doughnut profile is defined on a mirror pupil, not on an "
                "angular region")
        return self.func


def _quad(fn: Callable[[float], float], lo: float, hi: float) -> float:
    value, _ = quad(fn, lo, hi, epsabs=_EPSABS, epsrel=_EPSREL, limit=200)
    return value


def _pupil_quad(fn: Callable[[float], float], lo: float, hi: float, f: float) -> float:
    # Geometric segmentation pinned to the mirror scale 2f keeps the
    # adaptive rule from missing the peak when the annulus spans many decades.
    if hi <= lo:
        return 0.0
    cuts = [lo]
    for k in range(-6, 9):
        x = 2.0 * f * 10.0**k
        if lo < x < hi:
            cuts.append(x)
    cuts.append(hi)
    return sum(_quad(fn, a, b) for a, b in zip(cuts, cuts[1:]))


def _overlap_from_integrals(cross: float, beam2: float, dip2: float) -> float:
    if beam2 <= 0.0 or dip2 <= 0.0:
        raise DegenerateResultError(
            "zero-norm profile on the requested region; the overlap is "
            "undefined")
    eta = cross / math.sqrt(beam2 * dip2)
    # Cauchy-Schwarz bound; quadrature noise may overshoot 1 by ~1e-16
    return min(eta, 1.0)


def overlap_eta(
    profile: BeamProfile,
    geometry: Union[ParabolicMirror, ConeAperture],
    region: Optional[Tuple[float, float]] = None,
) -> float:
    """Normalized amplitude overlap of a beam with the dipole pattern.

    For a ``ParabolicMirror`` the integrals run over the pupil annulus
    (default: hole to aperture radius) against the pupil dipole profile,
    with measure 2 pi d dd.  For a ``ConeAperture`` with an axial dipole
    they run over the polar angle (default: 0 to the half-angle) against
    sin(theta), with measure 2 pi sin(theta) dtheta.  Cauchy-Schwarz bounds
    the result by 1, with equality only for profiles proportional to the
    dipole's.

    Parameters
    ----------
    profile : BeamProfile
        Incident beam amplitude.
    geometry : ParabolicMirror or ConeAperture
        Sets the coordinate, the measure and the dipole reference.
    region : (float, float), optional
        Integration bounds overriding the geometry's illuminated region:
        pupil radii for mirrors, polar angles for cones.
    """
    if isinstance(geometry, ParabolicMirror):
        lo, hi = region if region is not None else (
            geometry.hole_radius, geometry.aperture_radius)
        if not 0.0 <= lo < hi:
            raise DomainError(
                f"pupil region must satisfy 0 <= lo < hi, got ({lo!r}, {hi!r})")
        f = geometry.focal_length
        beam = profile.pupil_amplitude(geometry)
        cross = _pupil_quad(lambda d: beam(d) * _pupil_dipole(d, f) * d, lo, hi, f)
        beam2 = _pupil_quad(lambda d: beam(d) ** 2 * d, lo, hi, f)
        dip2 = _pupil_quad(lambda d: _pupil_dipole(d, f) ** 2 * d, lo, hi, f)
        return _overlap_from_integrals(cross, beam2, dip2)

    if isinstance(geometry, ConeAperture):
        if geometry.orientation is not DipoleOrientation.AXIAL:
            raise DomainError(
                "angular overlaps are defined for axial dipoles only; a "
                "transverse dipole has no azimuthally symmetric amplitude")
        lo, hi = region if region is not None else (0.0, geometry.half_angle)
        if not (0.0 <= lo < hi <= math.pi):
            raise DomainError(
                f"angular region must satisfy 0 <= lo < hi <= pi, got "
                f"({lo!r}, {hi!r})")
        beam = profile.angular_amplitude()
        cross = _quad(lambda t: beam(t) * math.sin(t) * math.sin(t), lo, hi)
        beam2 = _quad(lambda t: beam(t) ** 2 * math.sin(t), lo, hi)
        dip2 = _quad(lambda t: math.sin(t) ** 3, lo, hi)
        return _overlap_from_integrals(cross, beam2, dip2)

    raise DomainError(
        f"geometry must be a ParabolicMirror or ConeAperture, got {geometry!r}")


def _kept_interval(mirror: ParabolicMirror) -> Tuple[float, float]:
    # Rays must hit the parabola twice (d' <= R) and clear the hole
    # (d' >= h); the resulting interval is its own image under d -> 4f^2/d.
    f = mirror.focal_length
    r = mirror.aperture_radius
    h = mirror.hole_radius
    lo = max(h, 4.0 * f * f / r)
    hi = r if h == 0.0 else min(r, 4.0 * f * f / h)
    return lo, hi


class Recollimation(NamedTuple):
    """Collection-side coupling of a finite parabolic mirror."""

    omega_n_prime: float
    eta_prime: float
    p: float


def recollimation_parameters(mirror: ParabolicMirror, profile: BeamProfile) -> Recollimation:
    """Collection-side coupling (omega_n_prime, eta_prime, p) of a mirror.

    A ray entering the pupil at radius d exits at d' = 4 f^2 / d, so only
    d in [max(h, 4 f^2 / R), min(R, 4 f^2 / h)] is re-collimated at all and
    misses the central hole on the way out; that interval maps onto itself
    under the involution.  p is the fraction of the beam power landing in
    the kept interval, omega_n_prime the dipole weight of its angular
    image, and eta_prime the overlap of the Jacobian-remapped exit beam
    with the pupil dipole profile on the same interval.

    Raises DegenerateResultError when no rays survive (p would be 0).
    """
    f = mirror.focal_length
    lo, hi = _kept_interval(mirror)
    if not lo < hi:
        raise DegenerateResultError(
            "no rays survive re-collimation for this mirror (p = 0)")

    beam = profile.pupil_amplitude(mirror)
    power_kept = _pupil_quad(lambda d: beam(d) ** 2 * d, lo, hi, f)
    power_in = _pupil_quad(
        lambda d: beam(d) ** 2 * d, mirror.hole_radius, mirror.aperture_radius, f)
    if power_in <= 0.0:
        raise DegenerateResultError(
            "zero-norm profile on the illuminated annulus")
    p = min(power_kept / power_in, 1.0)

    theta_outer = parabola_ray_map(lo, mirror).theta
    theta_inner = parabola_ray_map(hi, mirror).theta
    omega_n_prime = _axial_fraction(theta_outer) - _axial_fraction(theta_inner)

    # Exit amplitude at radius rho of the ray that entered at 4 f^2 / rho;
    # the d^2/(4 f^2) Jacobian factor keeps ring-by-ring power exact.
    def exit_beam(rho: float) -> float:
        entry = 4.0 * f * f / rho
        return beam(entry) * entry * entry / (4.0 * f * f)

    cross = _pupil_quad(lambda d: exit_beam(d) * _pupil_dipole(d, f) * d, lo, hi, f)
    beam2 = _pupil_quad(lambda d: exit_beam(d) ** 2 * d, lo, hi, f)
    dip2 = _pupil_quad(lambda d: _pupil_dipole(d, f) ** 2 * d, lo, hi, f)
    eta_prime = _overlap_from_integrals(cross, beam2, dip2)

    return Recollimation(omega_n_prime=omega_n_prime, eta_prime=eta_prime, p=p)


class WaistOptimum(NamedTuple):
    """Result of a waist optimization: best waist and its overlap."""

    waist: float
    eta: float


def _golden_max(
    fn: Callable[[float], float], lo: float, hi: float, rel_tol: float
) -> Tuple[float, float]:
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = fn(x1), fn(x2)
    while hi - lo > rel_tol * max(abs(lo), abs(hi)):
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = fn(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = fn(x1)
    x = 0.5 * (lo + hi)
    return x, fn(x)


def optimize_waist(
    mirror: ParabolicMirror,
    family: Optional[Callable[[float], BeamProfile]] = None,
    bracket: Optional[Tuple[float, float]] = None,
    rel_tol: float = 1e-6,
) -> WaistOptimum:
    """Maximize the pupil overlap over a one-parameter beam family.

    ``family`` maps a waist to a BeamProfile (default: the doughnut ring
    mode).  The search is a golden-section scan of [0.1 f, 20 f], assuming
    a unimodal overlap, to relative tolerance 1e-6 on the waist.
    """
    if family is None:
        family = BeamProfile.doughnut
    f = mirror.focal_length
    lo, hi = bracket if bracket is not None else (0.1 * f, 20.0 * f)
    if not 0.0 < lo < hi:
        raise DomainError(f"bracket must satisfy 0 < lo < hi, got ({lo!r}, {hi!r})")

    def score(w: float) -> float:
        return overlap_eta(family(w), mirror)

    waist, eta = _golden_max(score, lo, hi, rel_tol)
    return WaistOptimum(waist=waist, eta=eta)
