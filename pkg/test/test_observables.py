import math

import numpy as np
import pytest

from gmft.errors import DomainError
from gmft.model import LatticeGeometry
from gmft.gutzwiller import GutzwillerState, compute_order_parameter
from gmft.observables import gamma_mi, condensate_fraction, coherent_weight, q_axis, synthesize_profile, QuasiMomentumProfile

def test_gamma_of_fock_state(cube):
    state = GutzwillerState.fock(cube, 1, n_max=4)
    assert gamma_mi(state) == 1.
    assert gamma_mi(state, "zero_momentum") == 1.
    assert condensate_fraction(state) == 0.

def test_gamma_of_coherent_state(cube):
    state = GutzwillerState.coherent(cube, 0.5, n_max=7)
    assert gamma_mi(state) == pytest.approx(0., abs=1e-6)
    assert gamma_mi(state, "zero_momentum") == pytest.approx(0., abs=1e-6)

def test_normalizations_agree_for_uniform_states(cube):
    state = GutzwillerState.uniform(cube, [1., 1., 1., 0.])
    expected = 1. - ((1. + math.sqrt(2.)) / 3.) ** 2
    assert gamma_mi(state) == pytest.approx(expected)
    assert gamma_mi(state, "zero_momentum") == pytest.approx(expected)
    assert coherent_weight(state) == pytest.approx(cube.n_sites * (1. - expected))

def test_normalizations_differ_for_staggered_phase():
    geometry = LatticeGeometry(3, dim=1, boundary="periodic")
    f = np.array([[1., 1., 0., 0.], [1., -1., 0., 0.], [1., 1., 0., 0.]]) / math.sqrt(2.)
    state = GutzwillerState(f, geometry)
    assert gamma_mi(state) == pytest.approx(0.5)
    assert gamma_mi(state, "zero_momentum") == pytest.approx(1. - 1. / 18.)

def test_gamma_errors(cube):
    with pytest.raises(DomainError):
        gamma_mi(GutzwillerState.fock(cube, 1, n_max=4), "bogus")
    with pytest.raises(DomainError):
        gamma_mi(GutzwillerState.fock(cube, 0, n_max=4))

def test_q_axis():
    q = q_axis(64)
    assert len(q) == 96
    assert np.allclose(q, -q[::-1])
    assert np.allclose(np.diff(q), 2 * math.pi / 64)
    assert np.count_nonzero(np.abs(q) < math.pi) == 64
    assert len(q_axis(8, math.pi)) == 8
    with pytest.raises(DomainError):
        q_axis(4)
    with pytest.raises(DomainError):
        q_axis(64, 0.5 * math.pi)

def test_profile_shape_is_checked():
    with pytest.raises(DomainError):
        QuasiMomentumProfile(np.zeros((64, 64)), 64, 1.)

@pytest.mark.parametrize("blur", [0., 0.2])
def test_profile_conserves_atom_number(cube, blur):
    state = GutzwillerState.uniform(cube, [1., 1., 1., 0.])
    profile = synthesize_profile(state, grid_size=32, blur_sigma=blur)
    N = compute_order_parameter(state).total_density
    assert profile.normalization == pytest.approx(N)
    assert profile.total() == pytest.approx(N, rel=1e-10)

def test_mott_profile_is_flat(cube):
    profile = synthesize_profile(GutzwillerState.fock(cube, 1, n_max=4), grid_size=32)
    inside = np.abs(profile.q) < math.pi
    block = profile.grid[np.ix_(inside, inside)]
    assert np.allclose(block, cube.n_sites / (2 * math.pi) ** 2)
    assert np.all(profile.grid[~inside, :] == 0.)

def test_condensate_peaks_at_zero_momentum(cube):
    profile = synthesize_profile(GutzwillerState.coherent(cube, 0.5, n_max=7), grid_size=32)
    centre = np.abs(profile.q) < profile.dq
    peak = profile.grid[np.ix_(centre, centre)].sum() * profile.cell_area
    assert peak == pytest.approx(profile.total(), rel=1e-5)

def test_negative_blur(cube):
    with pytest.raises(DomainError):
        synthesize_profile(GutzwillerState.fock(cube, 1, n_max=4), blur_sigma=-1.)
