import cmath
import math

import numpy as np
import pytest

from diracstep import (
    ContractViolationError,
    DegenerateIncidenceError,
    Kinematics,
    ParticleNature,
    StepConfig,
    Zone,
    alpha_oscillatory,
    alpha_tilde,
    classify_zone,
    flux_residual,
    free_spinor,
    positron_frame,
    region2_nature,
    region2_spinor,
    scatter,
    scatter_in_zone,
)

CFG = StepConfig(3.5)


def continuity_residual(e, cfg):
    """Componentwise residual of u(p,e) + R u(-p,e) - T u2 at one energy."""
    amps = scatter(e, cfg)
    kin = Kinematics.for_energy(e, cfg)
    u_in = free_spinor(kin.p, e)
    u_ref = free_spinor(-kin.p, e)
    u2 = region2_spinor(amps.zone, kin, cfg)
    return [
        abs(a + amps.r_amp * b - amps.t_amp * c)
        for a, b, c in zip(u_in.components(), u_ref.components(), u2.components())
    ]


def sample_energies(rng, v0, n):
    """Energies spread over every nonempty zone of v0, away from the edges."""
    out = []
    spans = [(v0 + 1.0, v0 + 11.0)]
    spans.append((max(1.0, v0), v0 + 1.0))
    if v0 > 1.0:
        spans.append((max(1.0, v0 - 1.0), v0))
    if v0 > 2.0:
        spans.append((1.0, v0 - 1.0))
    for _ in range(n):
        lo, hi = spans[rng.integers(len(spans))]
        u = rng.uniform(0.02, 0.98)
        out.append(lo + u * (hi - lo))
    return out


def test_alpha_oscillatory_examples():
    assert alpha_oscillatory(1.75, CFG) == pytest.approx(-11.0 / 3.0, abs=1e-12)
    assert alpha_oscillatory(2.0, StepConfig(0.0)) == pytest.approx(1.0, abs=1e-15)
    assert alpha_oscillatory(4.5, CFG) == 0.0  # q = 0 at the diffusion edge


def test_alpha_oscillatory_errors():
    with pytest.raises(DegenerateIncidenceError):
        alpha_oscillatory(1.0, CFG)  # e = 1 lies in the Klein zone of v0 = 3.5
    with pytest.raises(ContractViolationError):
        alpha_oscillatory(3.6, CFG)


def test_alpha_tilde_examples():
    assert alpha_tilde(3.5, CFG) == pytest.approx(1.3416407864998738, abs=1e-12)
    assert alpha_tilde(2.5, CFG) == 0.0  # Klein-edge convention (0/0 resolved to 0)
    assert alpha_tilde(4.5, CFG) == 0.0  # qt = 0 at the diffusion edge
    assert alpha_tilde(3.0, CFG) > 0.0
    assert alpha_tilde(4.0, CFG) > 0.0


def test_alpha_tilde_errors():
    with pytest.raises(ContractViolationError):
        alpha_tilde(5.0, CFG)
    with pytest.raises(DegenerateIncidenceError):
        alpha_tilde(1.0, StepConfig(1.5))


def test_scatter_klein_point():
    amps = scatter(1.75, CFG)
    assert amps.zone is Zone.KLEIN
    assert amps.r_amp == pytest.approx(-1.75, abs=1e-12)
    assert amps.t_amp == pytest.approx(-0.75, abs=1e-12)
    assert abs(amps.r_amp) > 1.0  # more electrons reflected than incident


def test_scatter_diffusion_edge_limit():
    amps = scatter(4.5, CFG)
    assert amps.r_amp == pytest.approx(1.0, abs=1e-15)
    assert amps.t_amp == pytest.approx(2.0, abs=1e-15)
    amps = scatter(4.5 - 1e-9, CFG)
    assert amps.r_amp.real == pytest.approx(1.0, abs=1e-3)
    assert abs(amps.t_amp) ** 2 == pytest.approx(4.0, abs=1e-2)


def test_scatter_no_step():
    amps = scatter(2.0, StepConfig(0.0))
    assert amps.r_amp == 0.0
    assert amps.t_amp == 1.0


def test_scatter_dirac_tunneling_phase():
    amps = scatter(3.5, CFG)
    assert amps.zone is Zone.DIRAC_TUNNELING
    assert abs(amps.r_amp) == pytest.approx(1.0, abs=1e-12)
    # Arg R = -2 atan(alpha_tilde(v0)); the frozen value comes from that formula
    assert cmath.phase(amps.r_amp) == pytest.approx(-1.8605480282309441, abs=1e-12)
    assert cmath.phase(amps.r_amp) == pytest.approx(-2.0 * math.atan(1.3416407864998738), abs=1e-15)


def test_scatter_grazing():
    amps = scatter(1.0, CFG)
    assert amps.grazing
    assert amps.r_amp == 1.0
    assert amps.t_amp == 0.0
    assert math.isnan(amps.alpha)


def test_scatter_rejects_nonfinite():
    with pytest.raises(ValueError):
        scatter(float("nan"), CFG)


def test_continuity_identity_property():
    rng = np.random.default_rng(3)
    for _ in range(300):
        v0 = float(rng.uniform(0.2, 8.0))
        for e in sample_energies(rng, v0, 4):
            res = continuity_residual(float(e), StepConfig(v0))
            assert max(res) < 1e-12


def test_total_reflection_in_tunneling_zones():
    for e in np.linspace(2.5, 4.5, 2001, endpoint=False):
        amps = scatter(float(e), CFG)
        assert abs(abs(amps.r_amp) - 1.0) < 1e-12


def test_klein_tunneling_conjugate_of_dirac_tunneling():
    # same alpha_tilde value flips the formula branch to its conjugate
    for e in np.linspace(2.6, 3.49, 40):
        at = alpha_tilde(float(e), CFG)
        r_kt = scatter(float(e), CFG).r_amp
        r_dt_form = (1 - 1j * at) / (1 + 1j * at)
        assert r_kt == pytest.approx(r_dt_form.conjugate(), abs=1e-14)
    # and exactly at e = v0 the two one-sided amplitudes are conjugates
    below = scatter_in_zone(3.5, CFG, Zone.KLEIN_TUNNELING).r_amp
    above = scatter_in_zone(3.5, CFG, Zone.DIRAC_TUNNELING).r_amp
    assert below == pytest.approx(above.conjugate(), abs=1e-15)


def test_flux_identity():
    assert flux_residual(scatter(5.0, CFG)) == pytest.approx(0.0, abs=1e-12)
    assert flux_residual(scatter(1.75, CFG)) == pytest.approx(0.0, abs=1e-12)
    assert flux_residual(scatter(2.0, StepConfig(0.0))) == 0.0
    with pytest.raises(ContractViolationError):
        flux_residual(scatter(4.0, CFG))


def test_flux_identity_property():
    rng = np.random.default_rng(5)
    for _ in range(500):
        v0 = float(rng.uniform(0.2, 8.0))
        cfg = StepConfig(v0)
        e = float(rng.uniform(v0 + 1.02, v0 + 12.0))
        assert abs(flux_residual(scatter(e, cfg))) < 1e-12
        if v0 > 2.2:
            e = float(1.0 + rng.uniform(0.02, 0.98) * (v0 - 2.0))
            assert abs(flux_residual(scatter(e, cfg))) < 1e-12


def test_klein_amplifies_diffusion_attenuates():
    for e in np.linspace(1.05, 2.45, 50):
        assert abs(scatter(float(e), CFG).r_amp) > 1.0
    for e in np.linspace(4.55, 20.0, 50):
        assert abs(scatter(float(e), CFG).r_amp) < 1.0


def test_reflection_decays_at_high_energy():
    es = np.linspace(13.5, 300.0, 200)  # beyond v0 + 10
    mods = [abs(scatter(float(e), CFG).r_amp) for e in es]
    assert all(a > b for a, b in zip(mods, mods[1:]))
    assert mods[-1] < 5e-3


def test_arg_r_continuous_inside_each_zone():
    segments = [
        np.linspace(1.001, 2.499, 800),  # Klein
        np.linspace(2.501, 3.499, 800),  # Klein tunneling
        np.linspace(3.501, 4.499, 800),  # Dirac tunneling
        np.linspace(4.501, 8.0, 800),  # diffusion
    ]
    for seg in segments:
        args = np.array([cmath.phase(scatter(float(e), CFG).r_amp) for e in seg])
        assert np.max(np.abs(np.diff(args))) < 0.05


def test_positron_frame():
    pf = positron_frame(1.75, CFG)
    assert pf.e_a == -1.75
    assert pf.q_a == pytest.approx(1.4361406616345072, abs=1e-12)
    assert pf.v_a == pytest.approx(0.8206518066482898, abs=1e-12)
    assert pf.v_a > 0.0

    pf = positron_frame(1.0, CFG)
    assert pf.q_a == pytest.approx(2.29128784747792, abs=1e-12)
    assert pf.v_a == pytest.approx(2.29128784747792 / 2.5, abs=1e-12)

    # v_a -> 0+ toward the Klein edge
    assert positron_frame(2.5 - 1e-9, CFG).v_a < 1e-4

    with pytest.raises(ContractViolationError):
        positron_frame(3.0, CFG)


def test_region2_nature():
    assert region2_nature(Zone.DIFFUSION) is ParticleNature.ELECTRON
    assert region2_nature(Zone.DIRAC_TUNNELING) is ParticleNature.ELECTRON
    assert region2_nature(Zone.KLEIN_TUNNELING) is ParticleNature.POSITRON
    assert region2_nature(Zone.KLEIN) is ParticleNature.POSITRON


def test_stationary_positron_density_at_klein_edge():
    # approaching e = v0 - 1 from inside zone 2b, the transmitted density
    # |T|^2 (1 + |u23|^2) stays finite -> 4 p^2/(e+1)^2 even though T -> 0
    e = 2.5 + 1e-10
    amps = scatter(e, CFG)
    kin = Kinematics.for_energy(e, CFG)
    u2 = region2_spinor(Zone.KLEIN_TUNNELING, kin, CFG)
    dens = abs(amps.t_amp) ** 2 * (1.0 + abs(u2.c3) ** 2)
    p = kin.p
    assert dens == pytest.approx(4.0 * p * p / (e + 1.0) ** 2, rel=1e-4)
