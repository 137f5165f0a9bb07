import math

import numpy as np
import pytest

from gmft.errors import DomainError, ProfileFormatError
from gmft.gutzwiller import GutzwillerState, ground_state, compute_order_parameter
from gmft.model import LatticeGeometry, HubbardParams
from gmft.observables import synthesize_profile, gamma_mi, q_axis, QuasiMomentumProfile
from gmft.bandmap import LineProfile, integrate_profile, remove_background, centralize_symmetrize, estimate_gamma, \
                         analyze, analyze_line, average_profiles, grouped_statistics

def _gaussian_line(center=0., width=0.15, height=1., plateau=0.2, background=0.):
    q = q_axis(64)
    n = height * np.exp(-0.5 * ((q - center) / width) ** 2) + background
    n[np.abs(q) < math.pi] += plateau
    return LineProfile(q, n)

def test_mott_profile_gives_one(cube):
    estimate = analyze(synthesize_profile(GutzwillerState.fock(cube, 1, n_max=4)))
    assert estimate.gamma_MI == pytest.approx(1.)
    assert estimate.A_SF == pytest.approx(0., abs=1e-9)
    assert estimate.A_tot == pytest.approx(cube.n_sites)

def test_condensate_profile_gives_zero(cube):
    estimate = analyze(synthesize_profile(GutzwillerState.coherent(cube, 0.5, n_max=7)))
    assert estimate.gamma_MI == pytest.approx(0., abs=1e-6)

def test_pipeline_recovers_state_gamma(cube):
    state = GutzwillerState.uniform(cube, [1., 1., 1., 0.])
    estimate = analyze(synthesize_profile(state))
    assert estimate.gamma_MI == pytest.approx(gamma_mi(state), abs=1e-9)
    assert estimate.diagnostics["center_shift"] == pytest.approx(0., abs=1e-12)

def test_background_is_removed():
    line = _gaussian_line(background=0.05)
    clean = remove_background(line)
    assert np.allclose(clean.n[np.abs(clean.q) > math.pi], 0.)
    assert analyze_line(line).gamma_MI == pytest.approx(analyze_line(_gaussian_line()).gamma_MI, abs=1e-12)

def test_background_needs_outer_samples():
    q = q_axis(8, math.pi)
    with pytest.raises(DomainError):
        remove_background(LineProfile(q, np.ones_like(q)))

def test_centre_of_mass_shift():
    line = centralize_symmetrize(_gaussian_line(center=0.2, plateau=0.))
    assert line.center_shift == pytest.approx(0.2, abs=1e-6)
    assert np.allclose(line.n, line.n[::-1])
    assert line.q[np.argmax(line.n)] == pytest.approx(0., abs=line.q[1] - line.q[0])

def test_estimate_gamma_of_gaussian_plus_plateau():
    estimate = estimate_gamma(centralize_symmetrize(remove_background(_gaussian_line())))
    peak_area = math.sqrt(2 * math.pi) * 0.15
    assert estimate.A_tot == pytest.approx(peak_area + 0.2 * 2 * math.pi, rel=1e-6)
    assert estimate.gamma_MI == pytest.approx(1. - peak_area / estimate.A_tot, rel=1e-4)
    with pytest.raises(DomainError):
        estimate_gamma(_gaussian_line(), plateau_window=1.)

def test_line_profile_validation():
    with pytest.raises(DomainError):
        LineProfile([0., 0., 1.], [1., 1., 1.])
    with pytest.raises(DomainError):
        LineProfile([0., 1.], [1.])

def test_integrate_rejects_non_finite():
    grid = np.ones((96, 96))
    grid[3, 4] = np.nan
    with pytest.raises(ProfileFormatError):
        integrate_profile(QuasiMomentumProfile(grid, 64, 1.))
    with pytest.raises(ProfileFormatError):
        integrate_profile(np.ones((96, 96)))

def test_grouped_statistics(cube):
    profile = synthesize_profile(GutzwillerState.uniform(cube, [1., 1., 1., 0.]))
    grouped = grouped_statistics([profile] * 18)
    assert grouped.std == pytest.approx(0., abs=1e-12)
    assert grouped.mean == pytest.approx(analyze(profile).gamma_MI)
    assert len(grouped.values) == 6
    single = grouped_statistics([profile] * 3, group_size=3, n_groups=1)
    assert single.std == 0.
    with pytest.raises(DomainError):
        grouped_statistics([profile] * 17)

def test_grouped_statistics_uses_sample_std(cube):
    a = synthesize_profile(GutzwillerState.uniform(cube, [1., 1., 1., 0.]))
    b = synthesize_profile(GutzwillerState.fock(cube, 1, n_max=3))
    grouped = grouped_statistics([a, b], group_size=1, n_groups=2)
    values = [analyze(a).gamma_MI, analyze(b).gamma_MI]
    assert grouped.std == pytest.approx(np.std(values, ddof=1))

def test_average_profiles_requires_common_grid(cube):
    a = synthesize_profile(GutzwillerState.fock(cube, 1, n_max=3), grid_size=32)
    b = synthesize_profile(GutzwillerState.fock(cube, 1, n_max=3), grid_size=64)
    with pytest.raises(DomainError):
        average_profiles([a, b])

def test_gamma_is_offset_and_scale_invariant(cube):
    profile = synthesize_profile(GutzwillerState.uniform(cube, [1., 1., 1., 0.]))
    reference = analyze(profile).gamma_MI
    shifted = QuasiMomentumProfile(profile.grid + 0.3, profile.grid_size, profile.normalization, profile.q_range)
    assert analyze(shifted).gamma_MI == pytest.approx(reference, abs=1e-6)
    assert analyze(profile.scaled(7.)).gamma_MI == pytest.approx(reference, abs=1e-6)

@pytest.mark.parametrize("geometry", [LatticeGeometry(7, dim=2), LatticeGeometry(7)])
def test_pipeline_recovers_trapped_ground_state(geometry):
    state = ground_state(HubbardParams(0.05, 1., 0.6, 0.05), geometry, n_max=4)
    density = compute_order_parameter(state).density.numpy()
    assert density[geometry.center] > 2. * density.flat[0]
    expected = gamma_mi(state)
    assert 0.01 < expected < 0.99
    estimate = analyze(synthesize_profile(state))
    assert estimate.gamma_MI == pytest.approx(expected, abs=0.02)
    assert estimate.A_tot == pytest.approx(compute_order_parameter(state).total_density, rel=0.02)
