import math

import numpy as np
import pytest

from gmft.errors import DomainError, ConfigError
from gmft.model import PhysicalConstants, LatticeGeometry, HubbardParams, Calibration, CalibrationTable, \
                       tunneling_analytic, tunneling_asymptotic, tunneling_bandstructure, tunneling_from_depth, \
                       interaction_analytic, interaction_from_depth, trap_curvature, \
                       time_unit_conversion, natural_to_ms, LOBE_TIP, lobe_boundary

def test_default_recoil_rate_is_four_pi_per_ms():
    constants = PhysicalConstants()
    assert constants.recoil_rate == pytest.approx(4 * math.pi)
    assert time_unit_conversion(1.) == pytest.approx(4 * math.pi)
    assert natural_to_ms(time_unit_conversion(2.5)) == pytest.approx(2.5)

def test_inconsistent_recoil_energy_is_rejected():
    with pytest.raises(DomainError):
        PhysicalConstants(recoil_frequency=3000.)

def test_tunneling_closed_form():
    V = 10.
    expected = 4. / math.sqrt(math.pi) * V ** 0.75 * math.exp(-2. * math.sqrt(V))
    assert tunneling_analytic(V) == pytest.approx(expected, rel=1e-12)
    J = tunneling_analytic(np.array([5., 10., 20., 30.]))
    assert np.all(np.diff(J) < 0)

def test_interaction_scales_as_three_quarter_power():
    assert interaction_analytic(16.) / interaction_analytic(1.) == pytest.approx(8.)
    assert interaction_from_depth(13.) == interaction_analytic(13.)

@pytest.mark.parametrize("V", [0., -1.])
def test_non_positive_depth(V):
    with pytest.raises(DomainError):
        tunneling_analytic(V)
    with pytest.raises(DomainError):
        interaction_analytic(V)

def test_bandstructure_tunneling():
    J = [tunneling_bandstructure(V) for V in (8., 15., 25.)]
    assert all(j > 0 for j in J)
    assert J[0] > J[1] > J[2]
    assert 0.5 < J[1] / tunneling_analytic(15.) < 2.
    with pytest.raises(DomainError):
        tunneling_bandstructure(10., n_plane_waves=11)

def test_unknown_backend():
    with pytest.raises(DomainError):
        tunneling_from_depth(10., "wannier")
    with pytest.raises(ConfigError):
        Calibration(backend="wannier")

def test_geometry():
    g = LatticeGeometry(5)
    assert g.shape == (5, 5, 5)
    assert g.n_sites == 125
    assert g.coordination == 6
    assert g.center == (2, 2, 2)
    assert g.radius2[g.center] == 0
    assert g.radius2[0, 0, 0] == 12
    for i in (0, 17, 124):
        assert g.index(g.coordinate(i)) == i
    with pytest.raises(IndexError):
        g.coordinate(125)

@pytest.mark.parametrize("kwargs", [{"side_length" : 4}, {"side_length" : 0}, {"side_length" : 3, "dim" : 4},
                                    {"side_length" : 3, "boundary" : "twisted"}])
def test_invalid_geometry(kwargs):
    with pytest.raises(DomainError):
        LatticeGeometry(**kwargs)

def test_hubbard_params():
    p = HubbardParams(0.1, 1., 0.5, 0.01)
    assert p.with_mu(0.7).mu == 0.7
    assert p.with_mu(0.7).J == p.J
    with pytest.raises(DomainError):
        HubbardParams(0.1, 0.)
    with pytest.raises(DomainError):
        HubbardParams(-0.1, 1.)

def test_lobe_tip_lies_near_thirteen_recoil():
    calibration = Calibration()
    V = calibration.lobe_tip_depth()
    assert 12. < V < 15.
    assert calibration.lobe_tip_ratio(V) == pytest.approx(1., rel=1e-6)
    assert calibration.lobe_tip_ratio(5.) > 1.
    assert calibration.lobe_tip_ratio(25.) < 1.

def test_trap_curvature_grows_with_trap_frequency():
    slow = Calibration(PhysicalConstants(trap_frequency_omega0=2 * math.pi * 20.))
    fast = Calibration(PhysicalConstants(trap_frequency_omega0=2 * math.pi * 80.))
    assert fast.trap_curvature == pytest.approx(16. * slow.trap_curvature)
    assert Calibration(PhysicalConstants(trap_frequency_omega0=0.)).trap_curvature == 0.

def test_params_from_depth():
    calibration = Calibration()
    p = calibration.params(10., mu=0.3)
    assert p.J == pytest.approx(tunneling_analytic(10.))
    assert p.U == pytest.approx(interaction_analytic(10.))
    assert p.mu == 0.3
    assert calibration.natural(1.) == pytest.approx(4 * math.pi)

def _write_table(path, rows, header="V_Er,J_Er,U_Er"):
    with open(path, "w") as f:
        f.write(header + "\n")
        for r in rows:
            f.write(",".join(str(x) for x in r) + "\n")
    return path

def test_calibration_table(tmp_path):
    path = _write_table(tmp_path / "table.csv", [(5., 0.06, 0.2), (15., 0.01, 0.4), (25., 0.002, 0.6)])
    calibration = Calibration(backend="table", table=CalibrationTable.load(path))
    assert calibration.tunneling(10.) == pytest.approx(0.035)
    assert calibration.interaction(20.) == pytest.approx(0.5)
    with pytest.raises(DomainError):
        calibration.tunneling(30.)

def test_calibration_table_errors(tmp_path):
    with pytest.raises(ConfigError):
        CalibrationTable.load(_write_table(tmp_path / "a.csv", [(5., 0.06, 0.2), (15., 0.01, 0.4)], header="V,J,U"))
    with pytest.raises(ConfigError):
        CalibrationTable.load(_write_table(tmp_path / "b.csv", [(5., 0.06, 0.2)]))
    with pytest.raises(ConfigError):
        CalibrationTable.load(_write_table(tmp_path / "c.csv", [(5., 0.06, 0.2), (15., 0.01, -0.4)]))
    with pytest.raises(ConfigError):
        Calibration(backend="table")

def test_lobe_boundary_formula():
    assert lobe_boundary(0.5) == pytest.approx(1. / 6.)
    assert lobe_boundary(math.sqrt(2.) - 1.) == pytest.approx(LOBE_TIP)
    assert lobe_boundary(1.5, n=2) == pytest.approx(0.25 / 2.5)
    for x, n in ((1.2, 1), (0.5, 2), (0.5, 0)):
        with pytest.raises(DomainError):
            lobe_boundary(x, n)

def test_asymptotic_tunneling_matches_band_structure():
    V = np.linspace(8., 40., 9)
    ratio = tunneling_asymptotic(V) / tunneling_bandstructure(V)
    assert np.all(np.abs(ratio - 1.) < 0.1)

def test_depth_monotonicity():
    V = np.linspace(2., 40., 20)
    for J in (tunneling_analytic(V), tunneling_asymptotic(V), tunneling_bandstructure(V)):
        assert np.all(J > 0)
        assert np.all(np.diff(J) < 0)
    U = interaction_from_depth(V)
    assert np.all(np.diff(U) > 0)
    assert np.all(np.diff(U / tunneling_analytic(V)) > 0)
    assert interaction_from_depth(35.) / interaction_from_depth(5.) == pytest.approx(7. ** 0.75, rel=1e-12)

def test_default_trap_curvature():
    assert trap_curvature() == pytest.approx(2.43e-4, rel=1e-2)
    assert Calibration().trap_curvature == pytest.approx(trap_curvature())
