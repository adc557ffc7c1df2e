"""Zone-dependent reflection/transmission amplitudes for the Dirac step.

Spinor continuity at z = 0,

    u(p, e) + R u(-p, e) = T u2(zone),

is solved exactly in every zone.  With the real matching parameter
alpha = q (e+1) / [p (e - v0 + 1)] in the oscillatory zones and
alpha_t = qt (e+1) / [p (e - v0 + 1)] in the tunneling zones:

    diffusion / Klein :  R = (1 - a) / (1 + a),    T = 2 / (1 + a)
    Dirac tunneling   :  R = (1 - i*at) / (1 + i*at),  T = 2 / (1 + i*at)
    Klein tunneling   :  R = (1 + i*at) / (1 - i*at),  T = 2 / (1 - i*at)

alpha is positive in diffusion and negative in the Klein zone (|R| > 1, pair
production); alpha_t is positive in both tunneling zones, where |R| = 1.  The
Klein-tunneling amplitude is the complex conjugate of the Dirac-tunneling one,
which makes Arg R jump at e = v0.
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import ContractViolationError, DegenerateIncidenceError, InvalidEnergyError
from .kinematics import Kinematics, StepConfig, Zone, classify_zone, momentum


class ParticleNature(Enum):
    ELECTRON = "electron"
    POSITRON = "positron"


@dataclass(frozen=True)
class ScatterAmplitudes:
    """Complex R and T, the real matching parameter that generated them, and the zone.

    grazing marks the degenerate incidence e == 1 (p = 0), where the limit
    R = 1, T = 0 is returned by convention so that energy sweeps are total;
    alpha is NaN there.
    """

    r_amp: complex
    t_amp: complex
    alpha: float
    zone: Zone
    grazing: bool = False


@dataclass(frozen=True)
class PositronFrame:
    """Charge-conjugate description of the Klein-zone region II.

    The positron has energy e_a = -e, sits above its potential -v0, carries
    the same momentum q_a = q, and moves right with group velocity
    v_a = q / (v0 - e) > 0.
    """

    e_a: float
    q_a: float
    v_a: float


def _oscillatory_zone(e: float, cfg: StepConfig) -> Zone:
    zone = classify_zone(e, cfg)
    if zone.evanescent:
        raise ContractViolationError(f"alpha is defined in the oscillatory zones, not {zone.value}")
    return zone


def alpha_oscillatory(e: float, cfg: StepConfig) -> float:
    """Matching parameter q(e+1)/[p(e-v0+1)] in the diffusion and Klein zones.

    Positive in diffusion, negative in the Klein zone.  q == 0 at the
    diffusion edge e = v0+1 gives 0 with no special casing.
    """
    _oscillatory_zone(e, cfg)
    p = momentum(e)
    if p == 0.0:
        raise DegenerateIncidenceError("alpha is undefined at grazing incidence e == 1")
    de = e - cfg.v0
    q = math.sqrt((de - 1.0) * (de + 1.0))
    return q * (e + 1.0) / (p * (de + 1.0))


def alpha_tilde(e: float, cfg: StepConfig) -> float:
    """Matching parameter qt(e+1)/[p(e-v0+1)] > 0 in both tunneling zones.

    Returns 0 when qt == 0, i.e. at the zone edges e = v0 -/+ 1 (at the lower
    edge the denominator vanishes too; the 0 there is the documented
    convention, making R = 1 at that single point).
    """
    zone = classify_zone(e, cfg)
    if not zone.evanescent:
        de = e - cfg.v0
        if abs(de) != 1.0:
            raise ContractViolationError(
                f"alpha_tilde is defined in the tunneling zones, not {zone.value}"
            )
    p = momentum(e)
    if p == 0.0:
        raise DegenerateIncidenceError("alpha_tilde is undefined at grazing incidence e == 1")
    de = e - cfg.v0
    qt = math.sqrt(max(0.0, (1.0 - de) * (1.0 + de)))
    if qt == 0.0:
        return 0.0
    return qt * (e + 1.0) / (p * (de + 1.0))


def scatter_in_zone(e: float, cfg: StepConfig, zone: Zone) -> ScatterAmplitudes:
    """Amplitudes from the given zone's formula, regardless of classify_zone(e).

    Needed for the one-sided limits at zone boundaries (the Klein-tunneling
    formula evaluated at e = v0 gives the below-side limit of the phase
    discontinuity).  The zone's kinematics must exist at e.
    """
    if not math.isfinite(e):
        raise InvalidEnergyError(f"energy must be finite, got {e}")
    if e == 1.0:
        return ScatterAmplitudes(1.0 + 0.0j, 0.0j, math.nan, classify_zone(e, cfg), grazing=True)
    de = e - cfg.v0
    if zone.evanescent:
        if abs(de) > 1.0:
            raise ContractViolationError(f"no evanescent kinematics at e={e} for v0={cfg.v0}")
        at = alpha_tilde(e, cfg)
        if zone is Zone.DIRAC_TUNNELING:
            return ScatterAmplitudes((1 - 1j * at) / (1 + 1j * at), 2 / (1 + 1j * at), at, zone)
        return ScatterAmplitudes((1 + 1j * at) / (1 - 1j * at), 2 / (1 - 1j * at), at, zone)
    if abs(de) < 1.0:
        raise ContractViolationError(f"no oscillatory kinematics at e={e} for v0={cfg.v0}")
    p = momentum(e)
    q = math.sqrt((de - 1.0) * (de + 1.0))
    a = q * (e + 1.0) / (p * (de + 1.0))
    return ScatterAmplitudes(complex((1 - a) / (1 + a)), complex(2 / (1 + a)), a, zone)


def scatter(e: float, cfg: StepConfig) -> ScatterAmplitudes:
    """Reflection and transmission amplitudes at energy e for the step cfg.

    At e == 1 exactly the grazing limit R = 1, T = 0 is returned (flagged)
    rather than raising, so sweeps over e in [1, ...) are total.
    """
    return scatter_in_zone(e, cfg, classify_zone(e, cfg))


def flux_residual(amps: ScatterAmplitudes) -> float:
    """|R|^2 + alpha |T|^2 - 1, which vanishes identically in zones with flux.

    The tunneling zones carry no region-II flux (evanescent spatial
    dependence), so the identity does not apply there.
    """
    if amps.zone.evanescent:
        raise ContractViolationError("no region-II flux in the tunneling zones")
    return abs(amps.r_amp) ** 2 + amps.alpha * abs(amps.t_amp) ** 2 - 1.0


def positron_frame(e: float, cfg: StepConfig) -> PositronFrame:
    """Charge-conjugate region-II data; defined only in the Klein zone."""
    zone = classify_zone(e, cfg)
    if zone is not Zone.KLEIN:
        raise ContractViolationError(f"the positron frame applies to the Klein zone, not {zone.value}")
    kin = Kinematics.for_energy(e, cfg)
    assert kin.q is not None
    return PositronFrame(e_a=-e, q_a=kin.q, v_a=kin.q / (cfg.v0 - e))


def region2_nature(zone: Zone) -> ParticleNature:
    """Nature of the fermions occupying region II, per zone.

    Above the step (diffusion and Dirac tunneling) they are electrons; below
    it (Klein tunneling and Klein) they are positrons.
    """
    if zone in (Zone.DIFFUSION, Zone.DIRAC_TUNNELING):
        return ParticleNature.ELECTRON
    return ParticleNature.POSITRON


def arg_r(e: float, cfg: StepConfig) -> float:
    """Principal-value phase of R in (-pi, pi]."""
    return cmath.phase(scatter(e, cfg).r_amp)
