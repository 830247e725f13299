"""Parameter sweeps over the phase model, with figure-style presets.

Rows carry the phase in radians and degrees next to the scattering ratio
and coherent fraction, so one pass over a grid reproduces a whole curve.
Degenerate grid points (where the phase is undefined) become flagged rows
with empty phase fields instead of aborting a scan.  CSV output is fully
deterministic: fixed column order, 17 significant digits, '\\n' endings.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .atom import coherent_fraction, saturation_at_detuning, scattered_power_ratio
from .errors import DegenerateResultError, DomainError, PoleError
from .phase import (
    AsymmetricCoupling,
    PhaseBranch,
    SymmetricCoupling,
    kerr_linear_phase,
    kerr_phase,
    phase_asymmetric,
    phase_symmetric,
)

__all__ = [
    "MODELS",
    "SWEEP_VARIABLES",
    "CSV_COLUMNS",
    "FIGURE_PRESETS",
    "SweepRange",
    "SweepSpec",
    "ResultRow",
    "FigureSeries",
    "FigurePreset",
    "evaluate_point",
    "run_sweep",
    "figure_preset",
    "row_to_dict",
    "rows_to_csv",
    "rows_to_json",
]

MODELS = ("symmetric", "asymmetric", "kerr")
SWEEP_VARIABLES = ("delta", "s0", "s", "omega_n", "eta")
CSV_COLUMNS = (
    "swept_value",
    "delta",
    "s0",
    "s",
    "phi_rad",
    "phi_deg",
    "branch",
    "p_sc_over_p",
    "coherent_fraction",
    "model",
)

Coupling = Union[SymmetricCoupling, AsymmetricCoupling]


@dataclass(frozen=True)
class SweepRange:
    """Inclusive grid: count points from start to stop, linear or log."""

    start: float
    stop: float
    count: int
    spacing: str = "linear"

    def __post_init__(self) -> None:
        if self.count < 2:
            raise DomainError(f"count must be at least 2, got {self.count!r}")
        if self.start == self.stop:
            raise DomainError("start and stop must differ")
        if self.spacing not in ("linear", "log"):
            raise DomainError(
                f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        if self.spacing == "log" and not (self.start > 0 and self.stop > 0):
            raise DomainError("log spacing requires positive endpoints")

    def grid(self) -> List[float]:
        """Grid values in ascending order; log spacing is geometric."""
        lo, hi = sorted((self.start, self.stop))
        if self.spacing == "log":
            values = np.geomspace(lo, hi, self.count)
        else:
            values = np.linspace(lo, hi, self.count)
        return [float(x) for x in values]


@dataclass(frozen=True)
class SweepSpec:
    """One model, one coupling, one swept variable, fixed everything else.

    ``fixed`` supplies the non-swept drive parameters by name: ``delta``
    plus exactly one of ``s0`` or ``s`` (a fixed ``s`` is converted to s0
    per point via s0 = s (1 + 4 delta^2)).
    """

    model: str
    coupling: Coupling
    var: str
    range: SweepRange
    fixed: Dict[str, float]

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise DomainError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.var not in SWEEP_VARIABLES:
            raise DomainError(
                f"unknown sweep variable {self.var!r}; expected one of {SWEEP_VARIABLES}")
        _check_model_coupling(self.model, self.coupling)
        unknown = set(self.fixed) - {"delta", "s0", "s"}
        if unknown:
            raise DomainError(f"unknown fixed parameters: {sorted(unknown)}")
        if self.var != "delta" and "delta" not in self.fixed:
            raise DomainError("a fixed 'delta' is required unless delta is swept")
        if self.var in ("s0", "s"):
            if "s0" in self.fixed or "s" in self.fixed:
                raise DomainError(
                    "fixed 's0'/'s' conflict with sweeping the drive strength")
        else:
            given = [k for k in ("s0", "s") if k in self.fixed]
            if len(given) != 1:
                raise DomainError(
                    "exactly one of fixed 's0' or 's' is required, got "
                    f"{given or 'neither'}")


def _check_model_coupling(model: str, coupling: Coupling) -> None:
    if model == "asymmetric":
        if not isinstance(coupling, AsymmetricCoupling):
            raise DomainError("model 'asymmetric' requires an AsymmetricCoupling")
    elif not isinstance(coupling, SymmetricCoupling):
        raise DomainError(f"model {model!r} requires a SymmetricCoupling")


@dataclass(frozen=True)
class ResultRow:
    """One evaluated grid point.

    phi fields are None on degenerate points (branch 'boundary'), where the
    phase is undefined.  ``s`` is always s0 / (1 + 4 delta^2) and phi_deg is
    the exact degree conversion of phi_rad.
    """

    swept_value: Optional[float]
    delta: float
    s0: float
    s: float
    phi_rad: Optional[float]
    phi_deg: Optional[float]
    branch: str
    p_sc_over_p: float
    coherent_fraction: float
    model: str


def evaluate_point(
    model: str,
    coupling: Coupling,
    delta: float,
    s0: float,
    swept_value: Optional[float] = None,
    degenerate_ok: bool = True,
) -> ResultRow:
    """Evaluate one (delta, s0) point of the given model.

    Degenerate points (undefined phase, Kerr pole) become rows with branch
    'boundary' and empty phase fields; pass degenerate_ok=False to let the
    underlying error propagate instead.
    """
    _check_model_coupling(model, coupling)
    s = saturation_at_detuning(s0, delta)
    focusing = coupling if isinstance(coupling, SymmetricCoupling) else coupling.symmetric()
    ratio = scattered_power_ratio(focusing.omega_n, focusing.eta, delta, s0)
    fraction = coherent_fraction(s)
    try:
        if model == "symmetric":
            result = phase_symmetric(coupling, delta, s0)
            phi, branch = result.phi, result.branch
        elif model == "asymmetric":
            result = phase_asymmetric(coupling, delta, s0)
            phi, branch = result.phi, result.branch
        else:
            phi = kerr_phase(kerr_linear_phase(focusing, delta), s)
            branch = PhaseBranch.GENERIC
    except (DegenerateResultError, PoleError):
        if not degenerate_ok:
            raise
        phi, branch = None, PhaseBranch.BOUNDARY
    return ResultRow(
        swept_value=swept_value,
        delta=delta,
        s0=s0,
        s=s,
        phi_rad=phi,
        phi_deg=None if phi is None else math.degrees(phi),
        branch=branch.value,
        p_sc_over_p=ratio,
        coherent_fraction=fraction,
        model=model,
    )


def _resolve_point(spec: SweepSpec, value: float) -> Tuple[float, float, Coupling]:
    delta = value if spec.var == "delta" else spec.fixed["delta"]
    if spec.var == "s0":
        s0 = value
    elif spec.var == "s":
        s0 = value * (1.0 + 4.0 * delta * delta)
    elif "s0" in spec.fixed:
        s0 = spec.fixed["s0"]
    else:
        s0 = spec.fixed["s"] * (1.0 + 4.0 * delta * delta)
    coupling = spec.coupling
    if spec.var == "omega_n":
        coupling = replace(coupling, omega_n=value)
    elif spec.var == "eta":
        coupling = replace(coupling, eta=value)
    return delta, s0, coupling


def run_sweep(spec: SweepSpec) -> List[ResultRow]:
    """Evaluate the grid, one row per point, in ascending swept order."""
    rows = []
    for value in spec.range.grid():
        delta, s0, coupling = _resolve_point(spec, value)
        rows.append(evaluate_point(spec.model, coupling, delta, s0, swept_value=value))
    return rows


def _format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return format(value, ".17g")


def _row_values(row: ResultRow) -> tuple:
    return (
        row.swept_value,
        row.delta,
        row.s0,
        row.s,
        row.phi_rad,
        row.phi_deg,
        row.branch,
        row.p_sc_over_p,
        row.coherent_fraction,
        row.model,
    )


def row_to_dict(row: ResultRow) -> Dict[str, object]:
    return dict(zip(CSV_COLUMNS, _row_values(row)))


def rows_to_csv(rows: Sequence[ResultRow], comments: Sequence[str] = ()) -> str:
    """Render rows as deterministic CSV, one optional '#' comment per line."""
    lines = [f"# {comment}" for comment in comments]
    lines.append(",".join(CSV_COLUMNS))
    for row in rows:
        lines.append(",".join(_format_value(v) for v in _row_values(row)))
    return "\n".join(lines) + "\n"


def rows_to_json(rows: Sequence[ResultRow]) -> str:
    """Render rows as a JSON array of row objects."""
    return json.dumps([row_to_dict(row) for row in rows], indent=2) + "\n"


@dataclass(frozen=True)
class FigureSeries:
    """One curve of a preset: a name, the sweep behind it, comment notes."""

    name: str
    spec: SweepSpec
    notes: Tuple[str, ...]


@dataclass(frozen=True)
class FigurePreset:
    """Named bundle of curves, one CSV file per series."""

    name: str
    series: Tuple[FigureSeries, ...]


FIGURE_PRESETS = ("fig2", "fig3", "fig4", "fig5")

_THRESHOLD_S0 = 4.0 ** (1.0 / 3.0) - 1.0  # critical s0 for full coupling


def _coupling_note(coupling: Coupling) -> str:
    if isinstance(coupling, AsymmetricCoupling):
        return (
            f"omega_n={coupling.omega_n:g} eta={coupling.eta:g} "
            f"omega_n_prime={coupling.omega_n_prime:g} "
            f"eta_prime={coupling.eta_prime:g} p={coupling.p:g}")
    return f"omega_n={coupling.omega_n:g} eta={coupling.eta:g}"


def _series(preset: str, name: str, spec: SweepSpec, extra: Sequence[str] = ()) -> FigureSeries:
    fixed = " ".join(f"{k}={spec.fixed[k]:.17g}" for k in sorted(spec.fixed))
    notes = (
        f"preset {preset}-{name}",
        f"model={spec.model} {_coupling_note(spec.coupling)}"
        + (f" fixed {fixed}" if fixed else ""),
        f"sweep {spec.var} from {spec.range.start:g} to {spec.range.stop:g}, "
        f"{spec.range.count} points, {spec.range.spacing}",
    ) + tuple(extra)
    return FigureSeries(name=name, spec=spec, notes=notes)


def _fig2() -> FigurePreset:
    rng = SweepRange(start=-5.0, stop=0.0, count=501)
    asym = AsymmetricCoupling(omega_n=0.94, eta=0.98, omega_n_prime=0.88,
                              eta_prime=0.99, p=0.97)
    series = (
        _series("fig2", "solid", SweepSpec(
            model="symmetric", coupling=SymmetricCoupling(1.0, 1.0),
            var="delta", range=rng, fixed={"s0": 0.0})),
        _series("fig2", "dashed", SweepSpec(
            model="symmetric", coupling=SymmetricCoupling(0.38, 1.0),
            var="delta", range=rng, fixed={"s0": 0.0})),
        _series("fig2", "dotted", SweepSpec(
            model="asymmetric", coupling=asym,
            var="delta", range=rng, fixed={"s0": 0.1})),
        _series("fig2", "dashdot", SweepSpec(
            model="asymmetric", coupling=asym,
            var="delta", range=rng, fixed={"s0": 10.0})),
    )
    return FigurePreset(name="fig2", series=series)


def _fig3() -> FigurePreset:
    # 2-D grid over (omega_n * eta^2, s0) realized as one omega_n sweep per
    # s0 value; eta is pinned to 1 so the swept value is the coupling weight.
    rng = SweepRange(start=0.0, stop=1.0, count=101)
    extra = ("rows at delta=0 classify the resonance branch",
             "eta=1 so the swept omega_n equals omega_n*eta^2")
    series = tuple(
        _series("fig3", f"s0-{s0:g}", SweepSpec(
            model="symmetric", coupling=SymmetricCoupling(1.0, 1.0),
            var="omega_n", range=rng, fixed={"delta": 0.0, "s0": s0}), extra)
        for s0 in (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)
    )
    return FigurePreset(name="fig3", series=series)


def _fig4() -> FigurePreset:
    # The detuning window covers the pi-to-zero swing of every series;
    # the transitions sit at |delta| of a few 1e-3.
    rng = SweepRange(start=-0.02, stop=0.0, count=501)
    extra = ("detuning window [-0.02, 0] chosen to cover the branch transitions",)
    series = (
        _series("fig4", "solid", SweepSpec(
            model="symmetric", coupling=SymmetricCoupling(0.5 + 1e-4, 1.0),
            var="delta", range=rng, fixed={"s0": 0.0}), extra),
        _series("fig4", "dashed", SweepSpec(
            model="symmetric", coupling=SymmetricCoupling(0.5 - 1e-4, 1.0),
            var="delta", range=rng, fixed={"s0": 0.0}), extra),
        _series("fig4", "dotted", SweepSpec(
            model="symmetric", coupling=SymmetricCoupling(1.0, 1.0),
            var="delta", range=rng, fixed={"s0": _THRESHOLD_S0 - 1e-5}), extra),
        _series("fig4", "dashdot", SweepSpec(
            model="symmetric", coupling=SymmetricCoupling(1.0, 1.0),
            var="delta", range=rng, fixed={"s0": _THRESHOLD_S0 + 1e-5}), extra),
    )
    return FigurePreset(name="fig4", series=series)


def _fig5() -> FigurePreset:
    rng = SweepRange(start=0.0, stop=0.5, count=201)
    coupling = SymmetricCoupling(omega_n=0.94, eta=0.98)
    extra = ("abscissa is the detuned saturation parameter s",
             "range [0, 0.5] with 201 points")
    series = tuple(
        _series("fig5", f"{side}-{label}", SweepSpec(
            model=model, coupling=coupling,
            var="s", range=rng, fixed={"delta": delta}), extra)
        for side, delta in (("left", -10.0), ("right", -50.0))
        for label, model in (("full", "symmetric"), ("kerr", "kerr"))
    )
    return FigurePreset(name="fig5", series=series)


def figure_preset(name: str) -> FigurePreset:
    """Build the named preset bundle; unknown names raise ValueError."""
    builders = {"fig2": _fig2, "fig3": _fig3, "fig4": _fig4, "fig5": _fig5}
    if name not in builders:
        raise ValueError(
            f"unknown preset {name!r}; expected one of {FIGURE_PRESETS}")
    return builders[name]()
