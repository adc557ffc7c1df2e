"""Energy sweeps and derived diagnostics of the reflection amplitude.

Produces the R(E) observables: |R| and Arg R tables with per-zone unwrapped
phase, the one-sided limits of the phase discontinuity at e = v0, the locator
of the Klein-zone |R| peak (at e = v0/2), and a numerical phase derivative
dArg R / dE.
"""

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .amplitudes import scatter, scatter_in_zone
from .errors import EmptyZoneError, StencilError
from .kinematics import StepConfig, Zone, classify_zone


@dataclass(frozen=True)
class SweepRow:
    """One energy sample of the reflection observables.

    r_arg is the principal value in (-pi, pi]; r_arg_unwrapped removes 2*pi
    jumps within each zone only, so the genuine discontinuity at e = v0 is
    preserved.  d_arg_de is a finite-difference dArg R/dE taken inside the
    row's own zone (0 when R has no phase, i.e. v0 == 0 or grazing rows).
    """

    e: float
    zone: Zone
    r_mod: float
    r_arg: float
    r_arg_unwrapped: float
    t_mod: float
    alpha: float
    d_arg_de: float


class PhaseJump(NamedTuple):
    arg_below: float
    arg_above: float
    jump: float


class KleinPeak(NamedTuple):
    e_star: float
    r_mod_star: float
    boundary_hit: bool


class PhaseDerivative(NamedTuple):
    value: float
    defined: bool


def _zone_edges(cfg: StepConfig, zone: Zone) -> tuple[float, float]:
    """Interval on which the zone's amplitude formula has real kinematics."""
    v0 = cfg.v0
    if zone is Zone.DIFFUSION:
        return (max(1.0, v0 + 1.0), math.inf)
    if zone.evanescent:
        return (max(1.0, v0 - 1.0), v0 + 1.0)
    return (1.0, v0 - 1.0)


def _branch_arg(e: float, cfg: StepConfig, zone: Zone) -> float:
    return cmath.phase(scatter_in_zone(e, cfg, zone).r_amp)


def _d_arg_de_in_zone(e: float, cfg: StepConfig, zone: Zone, de: float) -> float:
    """Central (or one-sided, at formula edges) difference of Arg R within one zone."""
    if cfg.v0 == 0.0 or e == 1.0:
        return 0.0
    if zone.evanescent and abs(e - cfg.v0) == 1.0:
        # qt == 0 convention point: Arg R jumps to 0 there and its slope
        # diverges on the zone side, so no finite difference is meaningful
        return 0.0
    lo, hi = _zone_edges(cfg, zone)
    lo = max(lo, 1.0 + de)  # keep the stencil off the grazing point
    if e - de >= lo and e + de <= hi:
        hi_arg = _branch_arg(e + de, cfg, zone)
        lo_arg = _branch_arg(e - de, cfg, zone)
        diff = hi_arg - lo_arg
    elif e + 2 * de <= hi:
        f0 = _branch_arg(e, cfg, zone)
        diff = (-3 * f0 + 4 * _branch_arg(e + de, cfg, zone) - _branch_arg(e + 2 * de, cfg, zone)) / 2
        return math.atan2(math.sin(diff), math.cos(diff)) / de
    elif e - 2 * de >= lo:
        f0 = _branch_arg(e, cfg, zone)
        diff = (3 * f0 - 4 * _branch_arg(e - de, cfg, zone) + _branch_arg(e - 2 * de, cfg, zone)) / 2
        return math.atan2(math.sin(diff), math.cos(diff)) / de
    else:
        return 0.0
    # re-center the difference onto (-pi, pi] so a wrap of the principal value
    # does not masquerade as a huge derivative
    return math.atan2(math.sin(diff), math.cos(diff)) / (2.0 * de)


def sweep(e_min: float, e_max: float, n_points: int, cfg: StepConfig) -> list[SweepRow]:
    """Uniform energy sweep with the zone boundaries inserted as explicit samples.

    The boundaries v0-1, v0, v0+1 (those that fall inside [e_min, e_max] and
    the physical range e >= 1) are always present.  e = v0 appears twice:
    first the below-side limit evaluated with the Klein-tunneling formula,
    then the regular Dirac-tunneling sample, so both one-sided limits of the
    phase discontinuity are in the table.
    """
    if not (1.0 <= e_min < e_max) or n_points < 2:
        raise ValueError(f"need 1 <= e_min < e_max and n_points >= 2, got ({e_min}, {e_max}, {n_points})")
    grid = list(np.linspace(e_min, e_max, n_points))
    v0 = cfg.v0
    for boundary in (v0 - 1.0, v0, v0 + 1.0):
        if boundary >= 1.0 and e_min <= boundary <= e_max and boundary not in grid:
            grid.append(boundary)
    grid.sort()

    # (e, forced zone or None) samples; the v0 below-limit precedes the v0 row
    samples: list[tuple[float, Zone | None]] = []
    for e in grid:
        if e == v0 and v0 > 1.0:
            samples.append((e, Zone.KLEIN_TUNNELING))
        samples.append((e, None))

    de_stencil = 1e-6
    rows: list[SweepRow] = []
    for e, forced in samples:
        zone = forced if forced is not None else classify_zone(e, cfg)
        amps = scatter_in_zone(e, cfg, zone) if forced is not None else scatter(e, cfg)
        arg = cmath.phase(amps.r_amp)
        d_arg = 0.0 if amps.grazing else _d_arg_de_in_zone(e, cfg, zone, de_stencil)
        rows.append(
            SweepRow(
                e=e,
                zone=zone,
                r_mod=abs(amps.r_amp),
                r_arg=arg,
                r_arg_unwrapped=arg,  # fixed up per zone segment below
                t_mod=abs(amps.t_amp),
                alpha=amps.alpha,
                d_arg_de=d_arg,
            )
        )

    # per-zone unwrap: contiguous runs of equal zone labels are unwrapped
    # independently so the e = v0 jump survives verbatim
    out: list[SweepRow] = []
    start = 0
    while start < len(rows):
        stop = start
        while stop < len(rows) and rows[stop].zone is rows[start].zone:
            stop += 1
        args = np.unwrap([r.r_arg for r in rows[start:stop]])
        for row, unwrapped in zip(rows[start:stop], args):
            out.append(
                SweepRow(
                    e=row.e,
                    zone=row.zone,
                    r_mod=row.r_mod,
                    r_arg=row.r_arg,
                    r_arg_unwrapped=float(unwrapped),
                    t_mod=row.t_mod,
                    alpha=row.alpha,
                    d_arg_de=row.d_arg_de,
                )
            )
        start = stop
    return out


def phase_jump(cfg: StepConfig) -> PhaseJump:
    """One-sided limits of Arg R at e = v0 and their difference.

    The below side uses the Klein-tunneling amplitude, the above side the
    Dirac-tunneling one; they are complex conjugates, so the limits are
    +/- 2*atan(alpha_tilde(v0)) and sum to zero exactly.  Requires v0 > 1 so
    that e = v0 is a physical energy with both tunneling zones around it.
    """
    if cfg.v0 <= 1.0:
        raise EmptyZoneError(f"no tunneling interface at e = v0 for v0 = {cfg.v0} <= 1")
    below = _branch_arg(cfg.v0, cfg, Zone.KLEIN_TUNNELING)
    above = _branch_arg(cfg.v0, cfg, Zone.DIRAC_TUNNELING)
    return PhaseJump(arg_below=below, arg_above=above, jump=above - below)


def klein_peak(cfg: StepConfig, grid_step: float = 1e-4) -> KleinPeak:
    """Argmax of |R| over a uniform grid of the Klein zone [1, v0-1).

    The peak sits at e = v0/2 with |R| = v0/2.  boundary_hit reports an
    argmax on the first or last grid point (the peak rule presumes an
    interior maximum).
    """
    if cfg.v0 <= 2.0:
        raise EmptyZoneError(f"the Klein zone is empty for v0 = {cfg.v0} <= 2")
    if not (0.0 < grid_step <= 1e-3):
        raise ValueError(f"grid_step must be in (0, 1e-3], got {grid_step}")
    v0 = cfg.v0
    n = int(math.floor((v0 - 1.0 - 1.0) / grid_step))
    es = 1.0 + grid_step * np.arange(n + 1)
    es = es[es < v0 - 1.0]
    mods = np.empty(es.shape)
    for i, e in enumerate(es):
        mods[i] = abs(scatter(float(e), cfg).r_amp)
    idx = int(np.argmax(mods))
    return KleinPeak(
        e_star=float(es[idx]),
        r_mod_star=float(mods[idx]),
        boundary_hit=idx == 0 or idx == len(es) - 1,
    )


def phase_derivative(e: float, cfg: StepConfig, de: float = 1e-4) -> PhaseDerivative:
    """Central difference of the unwrapped Arg R at e, stencil width 2*de.

    The whole stencil must sit inside one zone; crossing a boundary (e.g. a
    stencil straddling e = v0) raises StencilError.  For v0 == 0 the
    reflection vanishes identically, so the phase derivative is flagged
    undefined and reported as 0.
    """
    if de <= 0.0:
        raise ValueError(f"de must be positive, got {de}")
    zone = classify_zone(e, cfg)
    if classify_zone(e - de, cfg) is not zone or classify_zone(e + de, cfg) is not zone:
        raise StencilError(f"stencil [{e - de}, {e + de}] crosses a zone boundary for v0 = {cfg.v0}")
    if cfg.v0 == 0.0:
        return PhaseDerivative(0.0, False)
    diff = cmath.phase(scatter(e + de, cfg).r_amp) - cmath.phase(scatter(e - de, cfg).r_amp)
    diff = math.atan2(math.sin(diff), math.cos(diff))
    return PhaseDerivative(diff / (2.0 * de), True)
