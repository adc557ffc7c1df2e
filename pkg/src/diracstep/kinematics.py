"""Unit conventions, energy-momentum relations, and Dirac spinors for a step potential.

The potential is V(z) = 0 for z < 0 (region I) and V(z) = v0 for z > 0
(region II).  Natural units are used throughout: hbar = c = 1 and the fermion
mass m = 1, so energies are quoted as E/m, momenta as p/m, times as m*t and
lengths as m*z.  Only spin-up incidence is treated; there is no spin flip at
the step, so every spinor produced here has c2 == c4 == 0 exactly.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import ContractViolationError, InvalidEnergyError

MASS = 1.0


class Zone(Enum):
    """Energy zone of an incident electron relative to the step height.

    For fixed v0 the physical range e >= 1 splits, in decreasing energy, into

        DIFFUSION        e >= v0 + 1    oscillatory transmission, |R| < 1
        DIRAC_TUNNELING  v0 <= e < v0+1 evanescent region II, |R| = 1
        KLEIN_TUNNELING  v0-1 <= e < v0 evanescent region II, |R| = 1
        KLEIN            e < v0 - 1     oscillatory region II, |R| > 1

    Boundary conventions: e == v0+1 is DIFFUSION, e == v0 is DIRAC_TUNNELING,
    e == v0-1 is KLEIN_TUNNELING.  Zones that would require e < 1 are simply
    empty for small v0.
    """

    DIFFUSION = "diffusion"
    DIRAC_TUNNELING = "dirac_tunneling"
    KLEIN_TUNNELING = "klein_tunneling"
    KLEIN = "klein"

    @property
    def evanescent(self) -> bool:
        """True for the two tunneling zones (no flux in region II)."""
        return self in (Zone.DIRAC_TUNNELING, Zone.KLEIN_TUNNELING)

    @classmethod
    def parse(cls, token: str) -> "Zone":
        """Accept CLI spellings: full names plus diffusion|dt|kt|klein, 1|2a|2b|3."""
        aliases = {
            "diffusion": cls.DIFFUSION,
            "1": cls.DIFFUSION,
            "dirac_tunneling": cls.DIRAC_TUNNELING,
            "dt": cls.DIRAC_TUNNELING,
            "2a": cls.DIRAC_TUNNELING,
            "klein_tunneling": cls.KLEIN_TUNNELING,
            "kt": cls.KLEIN_TUNNELING,
            "2b": cls.KLEIN_TUNNELING,
            "klein": cls.KLEIN,
            "3": cls.KLEIN,
        }
        try:
            return aliases[token.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown zone {token!r}") from None


@dataclass(frozen=True)
class StepConfig:
    """Step height v0 (in units of m) and the fixed mass convention m = 1.

    v0 = 0 is accepted as the degenerate no-step configuration (every energy
    is then in the diffusion zone and R = 0 identically).
    """

    v0: float
    m: float = MASS

    def __post_init__(self):
        if not math.isfinite(self.v0) or self.v0 < 0.0:
            raise ValueError(f"v0 must be finite and >= 0, got {self.v0}")
        if self.m != MASS:
            raise ValueError("the mass is a unit convention, m == 1 exactly")


@dataclass(frozen=True)
class Spinor4:
    """Four complex amplitudes; the spin-up sector keeps c2 == c4 == 0."""

    c1: complex
    c2: complex
    c3: complex
    c4: complex

    def components(self) -> tuple[complex, complex, complex, complex]:
        return (self.c1, self.c2, self.c3, self.c4)


def _check_energy(e: float) -> None:
    if not math.isfinite(e):
        raise InvalidEnergyError(f"energy must be finite, got {e}")
    if e < 1.0:
        raise InvalidEnergyError(f"energy must satisfy e >= 1 (units of m), got {e}")


def classify_zone(e: float, cfg: StepConfig) -> Zone:
    """Zone of an on-shell electron of total energy e against the step cfg.v0."""
    _check_energy(e)
    v0 = cfg.v0
    if e >= v0 + 1.0:
        return Zone.DIFFUSION
    if e >= v0:
        return Zone.DIRAC_TUNNELING
    if e >= v0 - 1.0:
        return Zone.KLEIN_TUNNELING
    return Zone.KLEIN


def momentum(e: float) -> float:
    """Region-I momentum p = sqrt(e^2 - 1) of an incident electron."""
    _check_energy(e)
    return math.sqrt((e - 1.0) * (e + 1.0))


@dataclass(frozen=True)
class Kinematics:
    """On-shell data for one energy: p always, and exactly one of q / qt.

    q  = sqrt((e - v0)^2 - 1) is the oscillatory region-II momentum
         (diffusion and Klein zones);
    qt = sqrt(1 - (e - v0)^2) is the evanescent decay rate (tunneling zones).
    """

    e: float
    p: float
    q: float | None
    qt: float | None

    @classmethod
    def for_energy(cls, e: float, cfg: StepConfig) -> "Kinematics":
        zone = classify_zone(e, cfg)
        p = momentum(e)
        de = e - cfg.v0
        if zone.evanescent:
            return cls(e=e, p=p, q=None, qt=math.sqrt(max(0.0, (1.0 - de) * (1.0 + de))))
        return cls(e=e, p=p, q=math.sqrt(max(0.0, (de - 1.0) * (de + 1.0))), qt=None)


def free_spinor(p_signed: float, e: float) -> Spinor4:
    """Free spin-up spinor u(p, e) = [1, 0, p/(e+1), 0]; reflected waves use -p."""
    _check_energy(e)
    if not math.isfinite(p_signed):
        raise ValueError(f"momentum must be finite, got {p_signed}")
    return Spinor4(1.0 + 0.0j, 0.0j, complex(p_signed / (e + 1.0)), 0.0j)


def region2_spinor(zone: Zone, kin: Kinematics, cfg: StepConfig) -> Spinor4:
    """Region-II spinor for the given zone, including evanescent continuations.

    Oscillatory zones use u(q, e - v0) = [1, 0, q/(e - v0 + 1), 0].  The
    tunneling zones continue the momentum into the complex plane, q -> +i*qt
    (Dirac tunneling) or q -> -i*qt (Klein tunneling), inside the spinor as
    well as in the spatial factor.  At the zone edges where qt == 0 the third
    component is 0 by convention (both continuity sides vanish there).
    """
    denom = kin.e - cfg.v0 + 1.0
    if zone.evanescent:
        if kin.qt is None:
            raise ContractViolationError(f"{zone.value} spinor needs evanescent kinematics (qt)")
        c3 = 0.0j if kin.qt == 0.0 else 1j * kin.qt / denom
        if zone is Zone.KLEIN_TUNNELING:
            c3 = -c3
        return Spinor4(1.0 + 0.0j, 0.0j, c3, 0.0j)
    if kin.q is None:
        raise ContractViolationError(f"{zone.value} spinor needs oscillatory kinematics (q)")
    return Spinor4(1.0 + 0.0j, 0.0j, complex(kin.q / denom), 0.0j)
