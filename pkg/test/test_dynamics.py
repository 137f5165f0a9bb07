import math

import numpy as np
import pytest
import torch

from gmft.errors import DomainError, IntegrationError
from gmft.model import LatticeGeometry
from gmft.gutzwiller import GutzwillerState, ground_state, compute_order_parameter
from gmft.dynamics import Segment, RampSchedule, EvolutionOptions, ObservableSeries, evolve, derivative, \
                          ProtocolSetup, phase_transition_schedule, oscillation_schedule, \
                          protocol_phase_transition, protocol_oscillation, equilibrium_sweep
from gmft.data import SnapshotArchive
from gmft import scaling

def test_segment_validation():
    with pytest.raises(DomainError):
        Segment(-1., 5., 6.)
    with pytest.raises(DomainError):
        Segment(1., 5., 6., "hold")
    with pytest.raises(DomainError):
        Segment(1., 0., 6.)
    with pytest.raises(DomainError):
        Segment(1., 5., 6., "cubic")
    assert Segment(2., 5., 9.).rate == 2.
    assert Segment(0., 5., 9.).rate == 0.

def test_schedule_interpolation():
    schedule = RampSchedule([Segment(1., 5., 5., "hold"), Segment(2., 5., 9.), Segment(1., 9., 9., "hold")])
    assert schedule.total_duration == 4.
    assert schedule.ramp_start == 1.
    assert schedule.V(0.5) == 5.
    assert schedule.V(2.) == pytest.approx(7.)
    assert schedule.V(3.5) == 9.
    assert schedule.V(10.) == 9.
    assert schedule.V([0., 2., 3.]).tolist() == pytest.approx([5., 7., 9.])
    with pytest.raises(DomainError):
        RampSchedule([Segment(1., 5., 6.), Segment(1., 7., 8.)])
    with pytest.raises(DomainError):
        RampSchedule([])

def test_schedule_reversed_and_serialised():
    schedule = RampSchedule.linear_ramp(5., 25., 4., hold_before=2., hold_after=1., hold_sample_interval=0.02)
    reverse = schedule.reversed()
    for t in (0., 0.7, 3.3, 6.1, 8.):
        assert reverse.V(t) == pytest.approx(schedule.V(schedule.total_duration - t))
    again = RampSchedule.from_list(schedule.to_list())
    assert again.to_list() == schedule.to_list()
    assert schedule.sample_interval(7.5, 0.05) == 0.02
    assert schedule.sample_interval(3., 0.05) == 0.05

def test_protocol_schedules():
    schedule = phase_transition_schedule(2., 30.)
    assert schedule.total_duration == pytest.approx(32.5)
    assert schedule.ramp_start == 20.
    assert schedule.V(20.) == 5.
    assert schedule.V(32.5) == 30.
    schedule = oscillation_schedule(10., 1.5)
    assert schedule.total_duration == pytest.approx(3.5)
    assert schedule.V(2.) == 25.
    assert schedule.sample_interval(3., 0.05) == 0.02
    with pytest.raises(DomainError):
        phase_transition_schedule(0., 30.)
    with pytest.raises(DomainError):
        phase_transition_schedule(1., 3.)

def test_options_validation():
    with pytest.raises(DomainError):
        EvolutionOptions(dt=0.)
    with pytest.raises(DomainError):
        EvolutionOptions(dt=0.1, sample_interval=0.05)
    with pytest.raises(DomainError):
        EvolutionOptions(integrator="euler")
    with pytest.raises(DomainError):
        EvolutionOptions(gamma_normalization="bogus")

def test_series_validation():
    with pytest.raises(DomainError):
        ObservableSeries([0., 0.], [5., 5.], [1., 1.], [0., 0.], [1., 1.], [0., 0.])
    with pytest.raises(DomainError):
        ObservableSeries([0., 1.], [5.], [1., 1.], [0., 0.], [1., 1.], [0., 0.])
    series = ObservableSeries([0., 1., 2., 3.], [5., 6., 7., 8.], [.1, .2, .3, .4], [.9, .8, .7, .6], [4.] * 4, [0.] * 4)
    window = series.window(1., 2.)
    assert window.times.tolist() == [1., 2.]
    assert series.shifted(1.).times.tolist() == [-1., 0., 1., 2.]

def test_fock_state_is_stationary(chain, calibration):
    state = GutzwillerState.fock(chain, 1, n_max=4)
    schedule = RampSchedule([Segment(0.05, 10., 10., "hold")])
    series = evolve(state, schedule, calibration, EvolutionOptions(dt=5e-4, sample_interval=0.05), mu=0.2)
    assert series.times[0] == 0.
    assert series.times[-1] == pytest.approx(0.05)
    assert np.all(series.gamma_MI == 1.)
    assert np.allclose(series.total_N, 5.)
    assert np.allclose(series.V, 10.)

def test_ground_state_is_stationary_in_time(ring, untrapped):
    params = untrapped.params(5., mu=0.1)
    state = ground_state(params, ring, n_max=7)
    schedule = RampSchedule([Segment(0.05, 5., 5., "hold")])
    series = evolve(state, schedule, untrapped, EvolutionOptions(dt=5e-4, sample_interval=0.01), mu=0.1)
    assert series.gamma_MI[0] < 0.5
    assert np.ptp(series.gamma_MI) < 1e-6
    assert np.ptp(series.total_N) < 1e-8
    assert np.ptp(series.energy) < 1e-7

def test_time_reversal(chain, calibration):
    state = GutzwillerState.coherent(chain, 0.5, n_max=5)
    schedule = RampSchedule([Segment(0.05, 5., 6.)])
    options = EvolutionOptions(dt=5e-4, sample_interval=0.05)
    forward = evolve(state, schedule, calibration, options, mu=0.1).final_state
    assert not torch.allclose(forward.amplitudes, state.amplitudes, atol=1e-3)
    back = evolve(forward.conj(), schedule.reversed(), calibration, options, mu=0.1).final_state
    assert torch.allclose(back.amplitudes, state.amplitudes.conj(), atol=1e-6)

def test_energy_conserved_at_fixed_depth(chain, calibration):
    state = GutzwillerState.coherent(chain, 0.6, n_max=6)
    schedule = RampSchedule([Segment(0.1, 8., 8., "hold")])
    series = evolve(state, schedule, calibration, EvolutionOptions(dt=5e-4, sample_interval=0.02), mu=0.1)
    assert np.ptp(series.energy) < 1e-6 * max(1., abs(series.energy[0]))
    assert np.ptp(series.total_N) < 1e-8

def test_derivative_is_norm_preserving(chain, calibration):
    state = GutzwillerState.coherent(chain, 0.5 + 0.3j, n_max=5)
    df = derivative(state, calibration.params(7., 0.2))
    rate = 2. * (state.amplitudes.conj() * df).sum(-1).real
    assert torch.allclose(rate, torch.zeros_like(rate), atol=1e-12)

def test_unstable_step_raises(chain, calibration):
    state = GutzwillerState.coherent(chain, 2., n_max=7)
    schedule = RampSchedule([Segment(0.5, 30., 30., "hold")])
    with pytest.raises(IntegrationError) as info:
        evolve(state, schedule, calibration, EvolutionOptions(dt=0.05, sample_interval=0.05))
    assert info.value.drift > 1e-4

def test_unnormalised_initial_state(chain, calibration):
    f = GutzwillerState.fock(chain, 1, n_max=4).amplitudes * 1.1
    state = GutzwillerState(f, chain, check=False)
    with pytest.raises(DomainError):
        evolve(state, RampSchedule([Segment(0.01, 5., 5., "hold")]), calibration)

def test_segment_sample_interval(calibration):
    geometry = LatticeGeometry(3, dim=1)
    state = GutzwillerState.coherent(geometry, 0.5, n_max=4)
    schedule = RampSchedule([Segment(0.05, 5., 6.), Segment(0.06, 6., 6., "hold", 0.02)])
    series = evolve(state, schedule, calibration, EvolutionOptions(dt=1e-3, sample_interval=0.05))
    assert series.times.tolist() == pytest.approx([0., 0.05, 0.07, 0.09, 0.11])

def test_snapshots(tmp_path, calibration):
    geometry = LatticeGeometry(3, dim=1)
    state = GutzwillerState.coherent(geometry, 0.5, n_max=4)
    schedule = RampSchedule([Segment(0.04, 5., 5., "hold")])
    options = EvolutionOptions(dt=1e-3, sample_interval=0.01, snapshot_times=(0.02,))
    with SnapshotArchive(tmp_path / "snapshots.h5", "w", attrs={"k" : 1.}) as archive:
        series = evolve(state, schedule, calibration, options, snapshot_archive=archive)
    assert len(series.snapshots) == 1
    (t, psi), = series.snapshots.items()
    assert t == pytest.approx(0.02)
    assert psi.shape == geometry.shape
    with SnapshotArchive(tmp_path / "snapshots.h5") as archive:
        assert len(archive) == 1
        t_read, psi_read = archive.read(0)
        assert t_read == pytest.approx(0.02)
        assert np.allclose(psi_read, psi)
        assert archive.file["snapshot_0"].attrs["V_Er"] == 5.

def test_setup_requires_atom_number_or_mu():
    with pytest.raises(DomainError):
        ProtocolSetup()

def test_phase_transition_protocol(small_setup):
    series = protocol_phase_transition(100., 8., small_setup)
    assert series.times[0] == 0.
    assert series.times[-1] == pytest.approx(0.05)
    assert series.V[0] == 5.
    assert series.V[-1] == pytest.approx(8.)
    assert np.all(np.diff(series.V) >= 0)
    assert np.all((series.gamma_MI >= 0) & (series.gamma_MI <= 1))

def test_oscillation_protocol(small_setup):
    series = protocol_oscillation(400., 0.04, small_setup, V_hold=9.)
    hold = series.times >= 0.01 - 1e-9
    assert series.V[-1] == pytest.approx(9.)
    assert np.all(np.diff(series.times[hold]) <= 0.01 + 1e-9)

def test_initial_state_is_cached(small_setup):
    mu, state = small_setup.initial_state()
    assert mu == 0.1
    assert small_setup.initial_state()[1] is state
    with pytest.raises(DomainError):
        small_setup.set_initial(mu, GutzwillerState.fock(LatticeGeometry(5, dim=1), 1, n_max=4))

def test_equilibrium_sweep(small_setup):
    sweep = equilibrium_sweep(small_setup, [5., 8., 20.])
    assert sweep.V.tolist() == [5., 8., 20.]
    assert np.all(np.diff(sweep.gamma_MI) >= -1e-9)
    assert np.all(sweep.mu == 0.1)

def test_rk4_is_fourth_order(chain, calibration):
    state = GutzwillerState.coherent(chain, 0.5, n_max=4)
    schedule = RampSchedule([Segment(0.1, 6., 8.)])
    finals = []
    for dt in (5e-3, 2.5e-3, 1.25e-3):
        options = EvolutionOptions(dt=dt, sample_interval=0.1, norm_renormalize=False)
        finals.append(evolve(state, schedule, calibration, options, mu=0.1).final_state.amplitudes)
    ratio = torch.linalg.norm(finals[0] - finals[1]) / torch.linalg.norm(finals[1] - finals[2])
    assert 14. < ratio.item() < 18.

def test_derivative_needs_a_state(chain, calibration):
    state = GutzwillerState.coherent(chain, 0.5, n_max=5)
    with pytest.raises(DomainError):
        derivative(state.amplitudes, calibration.params(7., 0.2))

def test_atom_number_conserved_during_ramp(chain, calibration):
    state = GutzwillerState.coherent(chain, 0.5 + 0.2j, n_max=5)
    schedule = RampSchedule([Segment(0.05, 5., 5., "hold"), Segment(0.2, 5., 12.)])
    series = evolve(state, schedule, calibration, EvolutionOptions(dt=5e-4, sample_interval=0.01), mu=0.1)
    assert series.V[-1] == pytest.approx(12.)
    assert np.ptp(series.total_N) < 1e-8

def _midpoint_chain(f, t_ms, dt_ms, V, calibration, mu_eff):
    """ Explicit midpoint integration of i df_i/dt = h_i f_i on an open chain, plain numpy. """
    D = f.shape[-1]
    a = np.diag(np.sqrt(np.arange(1., D)), 1)
    n = np.arange(D, dtype=np.float64)
    rate = calibration.constants.recoil_rate
    h = dt_ms * rate

    def rhs(f, t):
        J, U = calibration.tunneling(V(t / rate)), calibration.interaction(V(t / rate))
        psi = np.einsum("im,mn,in->i", f.conj(), a, f)
        Phi = np.zeros_like(psi)
        Phi[1:] += psi[:-1]
        Phi[:-1] += psi[1:]
        H = np.zeros((len(f), D, D), dtype=np.complex128)
        H[:, np.arange(D), np.arange(D)] = 0.5 * U * n * (n - 1.) - mu_eff[:, None] * n
        H -= J * (Phi[:, None, None] * a.T + Phi.conj()[:, None, None] * a)
        return -1j * np.einsum("imn,in->im", H, f)

    t = 0.
    for _ in range(int(round(t_ms / dt_ms))):
        f = f + h * rhs(f + 0.5 * h * rhs(f, t), t + 0.5 * h)
        t += h
    return f

def test_rk4_agrees_with_an_independent_integrator(calibration):
    geometry = LatticeGeometry(3, dim=1)
    state = GutzwillerState.coherent(geometry, 0.5 + 0.2j, n_max=3)
    schedule = RampSchedule([Segment(1., 5., 7.)])
    final = evolve(state, schedule, calibration, EvolutionOptions(dt=2e-3, sample_interval=0.1), mu=0.1).final_state
    mu_eff = 0.1 - calibration.trap_curvature * geometry.radius2
    f = _midpoint_chain(state.numpy(), 1., 5e-5, schedule.V, calibration, mu_eff)
    a = np.diag(np.sqrt(np.arange(1., 4.)), 1)
    psi = np.einsum("im,mn,in->i", f.conj(), a, f)
    density = (np.abs(f) ** 2 * np.arange(4.)).sum(-1)
    field = compute_order_parameter(final)
    assert np.allclose(field.psi.numpy(), psi, atol=1e-6)
    assert np.allclose(field.density.numpy(), density, atol=1e-6)

@pytest.fixture
def quench_setup(untrapped):
    return ProtocolSetup(calibration=untrapped, geometry=LatticeGeometry(3, dim=1, boundary="periodic"),
                         n_max=6, mu=0.1, initial_hold=0., options=EvolutionOptions(dt=2e-3, sample_interval=0.02))

def test_quench_oscillates_at_interaction_frequency(quench_setup):
    k, V_hold = 400., 25.
    series = protocol_oscillation(k, 3., quench_setup, V_hold=V_hold)
    calibration = quench_setup.calibration
    fit = scaling.oscillation_amplitude(series, hold_start=(V_hold - 5.) / k, window=3., U_hold=calibration.interaction(V_hold),
                                        recoil_rate=calibration.constants.recoil_rate)
    assert fit.B == pytest.approx(calibration.interaction(V_hold) * calibration.constants.recoil_rate, rel=0.05)
    assert fit.A > 0.01

def test_faster_ramps_oscillate_more(quench_setup):
    amplitude = {}
    for k in (2., 400.):
        series = protocol_oscillation(k, 3., quench_setup)
        amplitude[k] = scaling.oscillation_amplitude(series, hold_start=20. / k, window=3., mode="peak_to_peak").A
    assert amplitude[400.] > 2. * amplitude[2.]
