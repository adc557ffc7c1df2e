"""Gaussian wave packets by momentum quadrature and the r(t) observable.

A packet of spin-up electrons incident from the left is synthesized as

    Psi_I(z, t)  = int dp g(p) [u(p,E) e^{ipz} + R(E) u(-p,E) e^{-ipz}] e^{-iEt}
    Psi_II(z, t) = int dp g(p) T(E) u2(E) x (e^{iqz} or e^{-qt z}) e^{-iEt}

with g(p) = exp[-(p - p0)^2 d^2 / 4] restricted to one zone's momentum window
and E = sqrt(p^2 + 1).  The main observable is the region-I particle number
normalized to the incident packet,

    r(t) = int_{z_min}^0 |Psi_I|^2 dz / N_inc,

where N_inc is the incident norm in closed form from the momentum-space
identity N_inc = 2*pi int dp |g|^2 (1 + p^2/(E+1)^2) (the full-line spatial
integral of the incident term); the same 2*pi bookkeeping is used in both
paths so r(t -> -inf) -> 1.

Momentum integrals use Gauss-Legendre nodes on the window; spatial integrals
use the trapezoid rule.  All evaluation is vectorized over the (z, t) grid
and every function here is pure, so calls may run in parallel freely.
"""

import math
from dataclasses import dataclass

import numpy as np

from .amplitudes import scatter
from .errors import EmptyZoneError, MixedZoneError
from .kinematics import Spinor4, StepConfig, Zone, classify_zone

TAIL_TOLERANCE = 1e-8  # neglected evanescent mass per mode at the region-II cutoff


def _zone_momentum_interval(zone: Zone, cfg: StepConfig) -> tuple[float, float]:
    """Physical momentum interval of a zone, infinite upper edge for diffusion."""
    v0 = cfg.v0
    def p_of(e: float) -> float:
        return math.sqrt(max(0.0, e * e - 1.0))

    if zone is Zone.DIFFUSION:
        return (p_of(v0 + 1.0), math.inf)
    if zone is Zone.DIRAC_TUNNELING:
        return (p_of(v0), p_of(v0 + 1.0))
    if zone is Zone.KLEIN_TUNNELING:
        if v0 <= 1.0:
            raise EmptyZoneError(f"the Klein-tunneling zone is empty for v0 = {v0} <= 1")
        return (p_of(v0 - 1.0), p_of(v0))
    if v0 <= 2.0:
        raise EmptyZoneError(f"the Klein zone is empty for v0 = {v0} <= 2")
    return (0.0, p_of(v0 - 1.0))


def packet_window(
    zone: Zone, cfg: StepConfig, p0: float | None = None, d: float | None = None
) -> tuple[float, float]:
    """Momentum window compatible with one zone.

    The tunneling upper edge is w = sqrt(v0 (v0 + 2)), the momentum at
    e = v0 + 1.  The diffusion zone is open above, so its practical upper
    cutoff is p0 + 8/d and the packet peak and width must be supplied.
    """
    lo, hi = _zone_momentum_interval(zone, cfg)
    if zone is Zone.DIFFUSION:
        if p0 is None or d is None:
            raise ValueError("the diffusion window needs p0 and d for its practical cutoff p0 + 8/d")
        hi = p0 + 8.0 / d
        if hi <= lo:
            raise EmptyZoneError(f"diffusion cutoff {hi} below the zone edge {lo}")
    return (lo, hi)


def mid_zone_energy(zone: Zone, cfg: StepConfig) -> float:
    """Midpoint of the zone's energy interval (diffusion: midpoint of [v0+1, v0+2])."""
    v0 = cfg.v0
    if zone is Zone.DIFFUSION:
        return max(1.0, v0 + 1.0) + 0.5
    if zone is Zone.DIRAC_TUNNELING:
        return (max(1.0, v0) + v0 + 1.0) / 2.0
    if zone is Zone.KLEIN_TUNNELING:
        if v0 <= 1.0:
            raise EmptyZoneError(f"the Klein-tunneling zone is empty for v0 = {v0} <= 1")
        return (max(1.0, v0 - 1.0) + v0) / 2.0
    if v0 <= 2.0:
        raise EmptyZoneError(f"the Klein zone is empty for v0 = {v0} <= 2")
    return v0 / 2.0


@dataclass(frozen=True)
class GaussianPacket:
    """Momentum distribution g(p) = exp[-(p-p0)^2 d^2/4] on a hard window.

    d is the localization length (units of 1/m; d = 10 means m*d = 10).  The
    window must lie inside a single zone; the mass cut by the hard truncation
    is available as a diagnostic.
    """

    p0: float
    d: float
    window: tuple[float, float]

    def __post_init__(self):
        lo, hi = self.window
        if not (0.0 <= lo < self.p0 < hi):
            raise ValueError(f"need 0 <= p_lo < p0 < p_hi, got p0={self.p0}, window={self.window}")
        if self.d <= 0.0:
            raise ValueError(f"d must be positive, got {self.d}")

    def e0(self) -> float:
        return math.sqrt(self.p0 * self.p0 + 1.0)

    def g(self, p):
        return np.exp(-((p - self.p0) ** 2) * self.d * self.d / 4.0)

    def tail_fraction(self) -> float:
        """Fraction of the full-line |g|^2 mass cut away by the window."""
        s = self.d / math.sqrt(2.0)
        lo, hi = self.window
        kept = 0.5 * (math.erf(s * (hi - self.p0)) - math.erf(s * (lo - self.p0)))
        return 1.0 - kept


def packet_for_zone(
    zone: Zone,
    cfg: StepConfig,
    d: float,
    e0: float | None = None,
    p0: float | None = None,
) -> GaussianPacket:
    """Packet peaked mid-zone by default, or at the given peak energy/momentum."""
    if e0 is not None and p0 is not None:
        raise ValueError("give at most one of e0 / p0")
    if e0 is None and p0 is None:
        e0 = mid_zone_energy(zone, cfg)
    if p0 is None:
        assert e0 is not None
        if e0 < 1.0:
            raise ValueError(f"peak energy must be >= 1, got {e0}")
        p0 = math.sqrt(e0 * e0 - 1.0)
    window = packet_window(zone, cfg, p0=p0, d=d)
    return GaussianPacket(p0=p0, d=d, window=window)


@dataclass(frozen=True)
class QuadratureSpec:
    """Numerical knobs: Gauss-Legendre node count and the spatial grid.

    z_min is the (negative) region-I cutoff and dz the grid spacing; both
    must resolve the packet: z_min < -5 d and dz <= d / 20.
    """

    n_p: int
    z_min: float
    dz: float

    def __post_init__(self):
        if self.n_p < 64:
            raise ValueError(f"n_p must be >= 64, got {self.n_p}")
        if self.z_min >= 0.0 or self.dz <= 0.0:
            raise ValueError(f"need z_min < 0 and dz > 0, got z_min={self.z_min}, dz={self.dz}")

    @classmethod
    def for_packet(
        cls, pk: GaussianPacket, t_abs_max: float, n_p: int = 256
    ) -> "QuadratureSpec":
        """Defaults: z_min = -(15 d + |t|_max v_group), dz = d/50."""
        v = pk.p0 / pk.e0()
        return cls(n_p=n_p, z_min=-(15.0 * pk.d + abs(t_abs_max) * v), dz=pk.d / 50.0)

    def validate_for(self, pk: GaussianPacket) -> None:
        if self.z_min >= -5.0 * pk.d:
            raise ValueError(f"z_min = {self.z_min} must be below -5 d = {-5.0 * pk.d}")
        if self.dz > pk.d / 20.0:
            raise ValueError(f"dz = {self.dz} must be <= d/20 = {pk.d / 20.0}")


def default_times(pk: GaussianPacket, n_t: int = 401, span: float = 12.0) -> np.ndarray:
    """Symmetric time grid [-T, T] with T = span * d * E0 / p0 (401 samples)."""
    t_max = span * pk.d * pk.e0() / pk.p0
    return np.linspace(-t_max, t_max, n_t)


@dataclass(frozen=True)
class DensitySeries:
    """Time series of the region populations: r = n1 / n_inc."""

    times: np.ndarray
    n1: np.ndarray
    n2: np.ndarray
    r: np.ndarray
    n_inc: float


class _NodeTables:
    """Per-node quantities shared by every field evaluation of one packet."""

    def __init__(self, pk: GaussianPacket, cfg: StepConfig, quad: QuadratureSpec):
        quad.validate_for(pk)
        zone = classify_zone(pk.e0(), cfg)
        lo, hi = _zone_momentum_interval(zone, cfg)
        tol = 1e-12 * max(1.0, pk.p0)
        if pk.window[0] < lo - tol or pk.window[1] > hi + tol:
            raise MixedZoneError(
                f"window {pk.window} spans outside the {zone.value} momentum interval ({lo}, {hi})"
            )
        self.zone = zone
        self.cfg = cfg
        self.pk = pk
        self.quad = quad

        x, wts = np.polynomial.legendre.leggauss(quad.n_p)
        half = 0.5 * (pk.window[1] - pk.window[0])
        mid = 0.5 * (pk.window[1] + pk.window[0])
        self.p = mid + half * x
        self.w = half * wts
        self.energy = np.sqrt(self.p * self.p + 1.0)
        self.g = pk.g(self.p)
        self.u3 = self.p / (self.energy + 1.0)

        r_amp = np.empty(quad.n_p, dtype=complex)
        t_amp = np.empty(quad.n_p, dtype=complex)
        for i, e in enumerate(self.energy):
            amps = scatter(float(e), cfg)
            r_amp[i] = amps.r_amp
            t_amp[i] = amps.t_amp
        self.r_amp = r_amp
        self.t_amp = t_amp

        de = self.energy - cfg.v0
        denom = de + 1.0
        if zone.evanescent:
            self.qt = np.sqrt(1.0 - de * de)
            self.u23 = 1j * self.qt / denom
            if zone is Zone.KLEIN_TUNNELING:
                self.u23 = -self.u23
            self.q = None
        else:
            self.q = np.sqrt(de * de - 1.0)
            self.u23 = (self.q / denom).astype(complex)
            self.qt = None

        self.n_inc = 2.0 * math.pi * float(np.sum(self.w * self.g * self.g * (1.0 + self.u3 * self.u3)))

    def region1_grid(self) -> np.ndarray:
        n = int(math.ceil(-self.quad.z_min / self.quad.dz))
        return (np.arange(n + 1) - n) * self.quad.dz

    def region2_grid(self) -> np.ndarray:
        if self.zone.evanescent:
            z_max = math.log(1.0 / TAIL_TOLERANCE) / (2.0 * float(np.min(self.qt)))
        else:
            z_max = -self.quad.z_min
        n = int(math.ceil(z_max / self.quad.dz))
        return np.arange(n + 1) * self.quad.dz


def _trapezoid_weights(z: np.ndarray, dz: float) -> np.ndarray:
    wz = np.full(z.shape, dz)
    wz[0] = 0.5 * dz
    wz[-1] = 0.5 * dz
    return wz


def incident_norm(pk: GaussianPacket, cfg: StepConfig, quad: QuadratureSpec) -> float:
    """Closed-form incident norm N_inc = 2 pi int dp |g|^2 (1 + p^2/(E+1)^2)."""
    return _NodeTables(pk, cfg, quad).n_inc


def density(s: Spinor4) -> float:
    """Plain spinor modulus square |c1|^2 + |c2|^2 + |c3|^2 + |c4|^2."""
    return abs(s.c1) ** 2 + abs(s.c2) ** 2 + abs(s.c3) ** 2 + abs(s.c4) ** 2


def psi_region1(
    z: float, t: float, pk: GaussianPacket, cfg: StepConfig, quad: QuadratureSpec
) -> Spinor4:
    """Region-I field (z <= 0): incident plus reflected quadrature sum."""
    if z > 0.0:
        raise ValueError(f"psi_region1 needs z <= 0, got {z}")
    tab = _NodeTables(pk, cfg, quad)
    a = tab.w * tab.g * np.exp(-1j * tab.energy * t)
    inc = np.exp(1j * tab.p * z)
    ref = tab.r_amp * np.exp(-1j * tab.p * z)
    c1 = np.sum(a * (inc + ref))
    c3 = np.sum(a * tab.u3 * (inc - ref))
    return Spinor4(complex(c1), 0.0j, complex(c3), 0.0j)


def psi_region2(
    z: float, t: float, pk: GaussianPacket, cfg: StepConfig, quad: QuadratureSpec
) -> Spinor4:
    """Region-II field (z >= 0): transmitted oscillatory or evanescent sum."""
    if z < 0.0:
        raise ValueError(f"psi_region2 needs z >= 0, got {z}")
    tab = _NodeTables(pk, cfg, quad)
    a = tab.w * tab.g * tab.t_amp * np.exp(-1j * tab.energy * t)
    if tab.zone.evanescent:
        spatial = np.exp(-tab.qt * z)
    else:
        spatial = np.exp(1j * tab.q * z)
    c1 = np.sum(a * spatial)
    c3 = np.sum(a * tab.u23 * spatial)
    return Spinor4(complex(c1), 0.0j, complex(c3), 0.0j)


def _region1_number(tab: _NodeTables, times: np.ndarray, chunk: int) -> np.ndarray:
    z1 = tab.region1_grid()
    wz1 = _trapezoid_weights(z1, tab.quad.dz)
    phase1 = np.exp(1j * np.outer(tab.p, z1))
    phase1c = np.conj(phase1)
    base = tab.w * tab.g
    n1 = np.empty(times.shape)
    for start in range(0, len(times), chunk):
        ts = times[start : start + chunk]
        a = base * np.exp(-1j * np.outer(ts, tab.energy))  # (nt, np)
        c1 = a @ phase1 + (a * tab.r_amp) @ phase1c
        c3 = (a * tab.u3) @ phase1 - (a * tab.r_amp * tab.u3) @ phase1c
        dens = np.abs(c1) ** 2 + np.abs(c3) ** 2
        n1[start : start + chunk] = dens @ wz1
    return n1


def _region2_number(tab: _NodeTables, times: np.ndarray, chunk: int) -> np.ndarray:
    z2 = tab.region2_grid()
    wz2 = _trapezoid_weights(z2, tab.quad.dz)
    if tab.zone.evanescent:
        spatial2 = np.exp(-np.outer(tab.qt, z2))
    else:
        spatial2 = np.exp(1j * np.outer(tab.q, z2))
    base = tab.w * tab.g
    n2 = np.empty(times.shape)
    for start in range(0, len(times), chunk):
        ts = times[start : start + chunk]
        at = base * tab.t_amp * np.exp(-1j * np.outer(ts, tab.energy))
        c1 = at @ spatial2
        c3 = (at * tab.u23) @ spatial2
        dens = np.abs(c1) ** 2 + np.abs(c3) ** 2
        n2[start : start + chunk] = dens @ wz2
    return n2


def density_series(
    pk: GaussianPacket,
    cfg: StepConfig,
    quad: QuadratureSpec,
    times: np.ndarray,
    chunk: int = 32,
) -> DensitySeries:
    """N1, N2 and r over the time grid, vectorized over (z, t) in chunks."""
    tab = _NodeTables(pk, cfg, quad)
    times = np.asarray(times, dtype=float)
    n1 = _region1_number(tab, times, chunk)
    n2 = _region2_number(tab, times, chunk)
    return DensitySeries(times=times, n1=n1, n2=n2, r=n1 / tab.n_inc, n_inc=tab.n_inc)


def r_series(
    pk: GaussianPacket,
    cfg: StepConfig,
    quad: QuadratureSpec,
    times: np.ndarray,
    chunk: int = 32,
) -> np.ndarray:
    """r(t) alone (region I only), for convergence checks and quick looks."""
    tab = _NodeTables(pk, cfg, quad)
    times = np.asarray(times, dtype=float)
    return _region1_number(tab, times, chunk) / tab.n_inc


def r_of_t(t: float, pk: GaussianPacket, cfg: StepConfig, quad: QuadratureSpec) -> float:
    """Region-I particle number at time t over the incident norm."""
    return float(density_series(pk, cfg, quad, np.array([t])).r[0])


def n2_of_t(t: float, pk: GaussianPacket, cfg: StepConfig, quad: QuadratureSpec) -> float:
    """Region-II particle number at time t (cutoff per the evanescent tail rule)."""
    return float(density_series(pk, cfg, quad, np.array([t])).n2[0])
