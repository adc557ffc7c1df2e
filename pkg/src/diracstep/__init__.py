"""Dirac-equation scattering off an electrostatic step potential.

Exact per-zone reflection/transmission amplitudes (diffusion, Dirac
tunneling, Klein tunneling, Klein pair production), gaussian wave-packet
propagation by momentum quadrature, r(t) transition series, and R(E) sweeps
with the phase discontinuity at e = v0.
"""

from .amplitudes import (
    ParticleNature,
    PositronFrame,
    ScatterAmplitudes,
    alpha_oscillatory,
    alpha_tilde,
    flux_residual,
    positron_frame,
    region2_nature,
    scatter,
    scatter_in_zone,
)
from .analysis import KleinPeak, PhaseDerivative, PhaseJump, SweepRow, klein_peak, phase_derivative, phase_jump, sweep
from .errors import (
    ContractViolationError,
    ConvergenceError,
    DegenerateIncidenceError,
    DiracStepError,
    EmptyZoneError,
    InvalidEnergyError,
    MixedZoneError,
    StencilError,
)
from .kinematics import (
    Kinematics,
    Spinor4,
    StepConfig,
    Zone,
    classify_zone,
    free_spinor,
    momentum,
    region2_spinor,
)
from .wavepacket import (
    DensitySeries,
    GaussianPacket,
    QuadratureSpec,
    default_times,
    density,
    density_series,
    incident_norm,
    mid_zone_energy,
    n2_of_t,
    packet_for_zone,
    packet_window,
    psi_region1,
    psi_region2,
    r_of_t,
    r_series,
)

__version__ = "0.1.0"
