import math

import numpy as np
import pytest

from gmft.errors import ConfigError, DomainError, ProfileFormatError
from gmft.dynamics import ObservableSeries
from gmft.gutzwiller import GutzwillerState
from gmft.observables import synthesize_profile
from gmft.data import atomic_write, write_series_csv, read_series_csv, write_profile_csv, read_profile_csv, write_columns, \
                      SnapshotArchive, Gaussian, Poisson, noise_model
from gmft.config import load_config, parse_list, parse_range, parse_linspace, RunConfig
from gmft.manifest import RunManifest, sha256

def _series():
    t = np.linspace(0., 1., 7)
    return ObservableSeries(t, 5. + 3. * t, t / 3., 1. - t / 3., np.full_like(t, 10. / 3.), -np.pi * t)

# ---------------------------------------------------------------------------------- csv

def test_series_roundtrip(tmp_path):
    series = _series()
    loaded = read_series_csv(write_series_csv(tmp_path / "series.csv", series))
    for name in ObservableSeries.COLUMNS:
        assert np.array_equal(getattr(loaded, name), getattr(series, name))
    assert (tmp_path / "series.csv").read_text().splitlines()[0] == "t_ms,V_Er,gamma_MI,cond_frac,N,energy_Er"

def test_series_format_errors(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("t,V,gamma\n0,5,1\n")
    with pytest.raises(ProfileFormatError):
        read_series_csv(bad)
    bad.write_text("t_ms,V_Er,gamma_MI,cond_frac,N,energy_Er\n1,5,1,0,1,0\n0,5,1,0,1,0\n")
    with pytest.raises(ProfileFormatError):
        read_series_csv(bad)
    with pytest.raises(ProfileFormatError):
        read_series_csv(tmp_path / "missing.csv")

def test_profile_roundtrip(tmp_path, cube):
    profile = synthesize_profile(GutzwillerState.uniform(cube, [1., 1., 1., 0.]), grid_size=32)
    path = write_profile_csv(tmp_path / "profile.csv", profile)
    assert path.read_text().startswith("# grid_size=32 q_range=-1.5pi..1.5pi")
    loaded = read_profile_csv(path)
    assert loaded.grid_size == 32
    assert loaded.q_range == pytest.approx(1.5 * math.pi)
    assert loaded.normalization == profile.normalization
    assert np.array_equal(loaded.grid, profile.grid)

def test_profile_reads_single_zone_header(tmp_path):
    path = tmp_path / "legacy.csv"
    rows = "\n".join(",".join(["0.5"] * 8) for _ in range(8))
    path.write_text("# grid_size=8 q_range=-pi..pi\n# normalization=2\n" + rows + "\n")
    profile = read_profile_csv(path)
    assert profile.q_range == pytest.approx(math.pi)
    assert profile.total() == pytest.approx(0.5 * 4 * math.pi ** 2)

@pytest.mark.parametrize("text", ["# grid_size=8\n# normalization=2\n1,2\n",
                                  "# grid_size=8 q_range=-pi..pi\n# normalization=2\n1,2\n3,4\n",
                                  "# grid_size=8 q_range=-pi..2pi\n# normalization=2\n1\n",
                                  "# grid_size=8 q_range=-pi..pi\n# norm=2\n1\n",
                                  "# grid_size=8 q_range=-pi..pi\n"])
def test_malformed_profiles(tmp_path, text):
    path = tmp_path / "profile.csv"
    path.write_text(text)
    with pytest.raises(ProfileFormatError) as info:
        read_profile_csv(path)
    assert "profile.csv" in str(info.value)

def test_profile_rejects_non_finite(tmp_path):
    path = tmp_path / "nan.csv"
    rows = [",".join(["1"] * 8)] * 8
    rows[2] = ",".join(["nan"] + ["1"] * 7)
    path.write_text("# grid_size=8 q_range=-pi..pi\n# normalization=2\n" + "\n".join(rows) + "\n")
    with pytest.raises(ProfileFormatError):
        read_profile_csv(path)

def test_write_columns(tmp_path):
    path = write_columns(tmp_path / "plot" / "cols.csv", {"k" : [1, 2], "value" : [0.5, 0.25]})
    data = np.genfromtxt(path, delimiter=",", names=True)
    assert data.dtype.names == ("k", "value")
    assert data["value"].tolist() == [0.5, 0.25]

def test_atomic_write_cleans_up(tmp_path):
    path = tmp_path / "out.txt"
    path.write_text("old")
    with pytest.raises(RuntimeError):
        with atomic_write(path) as f:
            f.write("new")
            raise RuntimeError("interrupted")
    assert path.read_text() == "old"
    assert list(tmp_path.iterdir()) == [path]

# ---------------------------------------------------------------------------------- noise

def test_noise_is_reproducible(cube):
    profile = synthesize_profile(GutzwillerState.fock(cube, 1, n_max=3), grid_size=16)
    a = Gaussian(0.05, seed=3)(profile)
    b = noise_model("gaussian", 0.05, seed=3)(profile)
    assert np.array_equal(a.grid, b.grid)
    assert not np.array_equal(a.grid, profile.grid)
    assert a.normalization == profile.normalization

def test_poisson_noise(cube):
    profile = synthesize_profile(GutzwillerState.fock(cube, 1, n_max=3), grid_size=16)
    shot = Poisson(1e6, seed=0)(profile)
    assert np.all(shot.grid >= 0)
    assert shot.total() == pytest.approx(profile.total(), rel=1e-2)

def test_noise_errors():
    with pytest.raises(DomainError):
        noise_model("speckle", 0.1)
    with pytest.raises(DomainError):
        Gaussian(-0.1)
    with pytest.raises(DomainError):
        Poisson(0.)

# ---------------------------------------------------------------------------------- snapshots

def test_snapshot_archive(tmp_path):
    path = tmp_path / "snapshots.h5"
    with SnapshotArchive(path, "w", attrs={"k" : 2.}) as archive:
        archive.write(0.1, np.ones(3, dtype=np.complex128), V=5.)
        archive.write(0.2, np.full(3, 1j), density=np.ones(3))
    with SnapshotArchive(path) as archive:
        assert archive.file.attrs["k"] == 2.
        assert archive.times().tolist() == [0.1, 0.2]
        (t0, psi0), (t1, psi1) = list(archive)
        assert t1 == 0.2
        assert np.allclose(psi1, 1j)
        assert "density" in archive.file["snapshot_1"]
    with pytest.raises(FileNotFoundError):
        SnapshotArchive(tmp_path / "none.h5")

# ---------------------------------------------------------------------------------- manifest

def test_manifest_tracks_files(tmp_path):
    manifest = RunManifest(tmp_path, {"protocol" : {"type" : "phase_transition"}}, command="sweep")
    path = write_columns(tmp_path / "series_k1.csv", {"t" : [0., 1.]})
    manifest.add_file("k1", path, "series")
    assert not manifest.completed("k1")
    manifest.mark("k1", "completed", k=1.)
    assert manifest.completed("k1")
    manifest.save()

    loaded = RunManifest.load(tmp_path)
    assert loaded.config["protocol"]["type"] == "phase_transition"
    assert loaded.runs["k1"]["files"]["series_k1.csv"]["sha256"] == sha256(path)
    assert loaded.files("series") == [("k1", tmp_path / "series_k1.csv")]
    assert loaded.verify() == []

    path.write_text("edited\n")
    assert not loaded.completed("k1")
    assert loaded.verify() == ["k1: series_k1.csv hash mismatch"]
    path.unlink()
    assert loaded.verify() == ["k1: series_k1.csv missing"]

def test_manifest_errors(tmp_path):
    run = tmp_path / "run"
    run.mkdir()
    with pytest.raises(ConfigError):
        RunManifest(run).add_file("k1", tmp_path / "elsewhere.csv", "series")
    with pytest.raises(ConfigError):
        RunManifest.load(run)
    assert RunManifest.load_or_create(run, command="ground").runs == {}

# ---------------------------------------------------------------------------------- config

def test_config_defaults():
    config = load_config(environ={})
    assert config.protocol == "phase_transition"
    assert config.k_values == [0.5, 1., 2., 4.]
    assert config.geometry().side_length == 21
    assert config.workers >= 1
    assert config.evolution_options().dt == 5e-4
    assert config.calibration().constants.recoil_rate == pytest.approx(4 * math.pi)
    assert config.calibration().trap_curvature == pytest.approx(2.43e-4, rel=1e-2)
    assert RunConfig.from_dict(config.to_dict()).to_dict() == config.to_dict()

def test_config_file_environment_and_overrides(tmp_path):
    path = tmp_path / "run.ini"
    path.write_text("[model]\nside_length = 7\nmu = 0.3\natom_number =\n\n[protocol]\nk = 1, 2\n")
    config = load_config(path, environ={"GMFT_MODEL__SIDE_LENGTH" : "9", "HOME" : "/root"},
                         overrides={"output" : {"directory" : str(tmp_path / "out")}, "run" : {"seed" : None}})
    assert config.geometry().side_length == 9
    assert config.k_values == [1., 2.]
    assert config.output_directory == tmp_path / "out"
    assert config.seed == 0
    setup = config.setup()
    assert setup.mu == 0.3
    assert setup.atom_number is None

@pytest.mark.parametrize("text", ["[bogus]\nx = 1\n", "[model]\ncolour = blue\n", "[protocol]\nk = 1, 1\n",
                                  "[protocol]\nk = 0, 1\n", "[protocol]\ntype = quench\n", "[run]\nschema_version = 2\n",
                                  "[model]\natom_number =\n", "[integrator]\ndt = 0\n", "[model]\nside_length = 4\n",
                                  "[model]\ncalibration = table\n", "[model]\ncalibration_table = /no/such/table.csv\n",
                                  "[run]\nseed = x\n", "not an ini file"])
def test_invalid_configs(tmp_path, text):
    path = tmp_path / "run.ini"
    path.write_text(text)
    with pytest.raises(ConfigError):
        config = load_config(path, environ={})
        config.seed
        config.calibration()

def test_config_environment_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_config(environ={"GMFT_NOPE__X" : "1"})
    with pytest.raises(ConfigError):
        load_config(environ={"GMFT_MODEL__COLOUR" : "blue"})
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.ini", environ={})

def test_list_parsing():
    assert parse_list("1, 2,3,") == [1., 2., 3.]
    assert parse_list("") == []
    assert parse_range("12,13,0.5").tolist() == [12., 12.5, 13.]
    assert parse_linspace("0.7,0.9,3").tolist() == pytest.approx([0.7, 0.8, 0.9])
    with pytest.raises(ConfigError):
        parse_list("a,b")
