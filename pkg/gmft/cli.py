#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 18-10-2026 14:45:30

 Command line interface.

    gmft [--config FILE] [--out DIR] [--seed N] [--workers N] [--resume] [--log-level L] [--quiet] <command>

    ground         ground states over a V sweep at fixed N (checkpoints, density lines, gamma_MI(V))
    sweep          one protocol run per ramp rate k, parallel over k
    analyze        scaling analysis of a sweep directory (JSON report + plot data)
    bandmap        gamma_MI of band-mapping profile CSVs, per file or grouped (--group 3x6)
    synth-profile  band-mapping profile(s) of a checkpointed state, optionally with noise

 Exit codes: 0 success, 1 usage / configuration / file format error, 2 numerical failure.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.cli")

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path

import numpy as np
import torch
from tqdm import tqdm

from .errors import GMFTError, ConfigError, ProfileFormatError, DomainError
from .config import load_config, parse_list, parse_range, parse_linspace, RunConfig
from .manifest import RunManifest
from .gutzwiller import GutzwillerState, compute_order_parameter, total_energy, save_state, load_state
from .dynamics import protocol_phase_transition, protocol_oscillation, equilibrium_sweep, \
                      phase_transition_schedule, oscillation_schedule
from .observables import gamma_mi, synthesize_profile
from .bandmap import analyze, grouped_statistics
from .data import write_json, write_series_csv, read_series_csv, write_profile_csv, read_profile_csv, write_columns, \
                  SnapshotArchive, noise_model
from . import scaling

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
SERIES_PATTERN = re.compile(r"^series_k(.+)\.csv$")

def _tag(x):
    return "{0:g}".format(x)

# ---------------------------------------------------------------------------------- ground

def cmd_ground(args, config):
    out = config.output_directory
    out.mkdir(parents=True, exist_ok=True)
    setup = config.setup()
    V_values = parse_list(args.V) if getattr(args, "V", None) else parse_list(config["protocol"]["V_values"])
    if not V_values:
        raise ConfigError("no lattice depths to solve")
    manifest = RunManifest.load_or_create(out, config.to_dict(), "ground")
    rows = []
    for V in tqdm(V_values, disable=args.quiet, desc="ground states"):
        key = "ground_V" + _tag(V)
        if args.resume and manifest.completed(key):
            d = manifest.runs[key]["diagnostics"]
            rows.append((V, d["gamma_MI"], d["mu"], d["N"], d["energy"]))
            logger.info("V=%s already solved, skipping", _tag(V))
            continue
        try:
            mu, state = setup.equilibrium(V)
        except GMFTError as e:
            manifest.mark(key, "failed", V=V, error=str(e))
            manifest.save()
            raise
        field = compute_order_parameter(state)
        params = setup.calibration.params(V, mu)
        g = gamma_mi(state, setup.options.gamma_normalization, field=field)
        energy = total_energy(state, params, field=field)
        path = save_state(out / "state_V{0}.bin".format(_tag(V)), state, params, {"V_Er" : V})
        density = field.density.cpu().numpy()
        centre = setup.geometry.center
        line = density[(slice(None),) + tuple(centre[1:])]
        x = np.arange(setup.geometry.side_length) - setup.geometry.side_length // 2
        dpath = write_columns(out / "density_V{0}.csv".format(_tag(V)), {"x" : x, "density" : line})
        manifest.add_file(key, path, "checkpoint")
        manifest.add_file(key, str(path) + ".json", "checkpoint_sidecar")
        manifest.add_file(key, dpath, "density")
        manifest.mark(key, "completed", V=float(V), mu=float(mu), gamma_MI=float(g), N=float(field.total_density), energy=float(energy),
                      coherent_weight=float(field.coherent_weight))
        manifest.save()
        rows.append((V, g, mu, field.total_density, energy))
        logger.info("V=%s E_r: gamma_MI=%.5f, mu=%.6g, N=%.6g", _tag(V), g, mu, field.total_density)

    rows.sort()
    V, gamma, mu, N, energy = (np.array(c) for c in zip(*rows))
    curve = write_columns(out / "ground_curve.csv", {"V_Er" : V, "gamma_MI" : gamma, "mu_Er" : mu, "N" : N, "energy_Er" : energy})
    report = {"V_Er" : V.tolist(), "gamma_MI" : gamma.tolist(), "monotone" : bool(np.all(np.diff(gamma) >= -1e-9))}
    if len(V) >= 3:
        slope = np.gradient(gamma, V)
        report["steepest_slope_V"] = float(V[np.argmax(slope)])
        logger.info("steepest gamma_MI(V) slope at V=%.4g E_r (V_c=%.4g E_r)", report["steepest_slope_V"], float(config["analysis"]["V_c"]))
    rpath = write_json(out / "ground_report.json", report)
    manifest.add_file("ground_curve", curve, "ground_curve")
    manifest.add_file("ground_curve", rpath, "report")
    manifest.mark("ground_curve", "completed")
    manifest.save()
    return 0

# ---------------------------------------------------------------------------------- sweep

def _run_series(sections, k, out, mu, amplitudes, threads):
    """ One protocol run in a worker process. Returns the files written and diagnostics. """
    torch.set_num_threads(threads)
    config = RunConfig.from_dict(sections)
    setup = config.setup()
    setup.set_initial(mu, GutzwillerState(amplitudes, setup.geometry))
    p = config["protocol"]
    archive = None
    files = []
    if config.get("output", "snapshots", bool) and setup.options.snapshot_times:
        path = Path(out) / "snapshots_k{0}.h5".format(_tag(k))
        archive = SnapshotArchive(path, "w", attrs={"k" : k})
        files.append((str(path), "snapshots"))
    try:
        if config.protocol == "phase_transition":
            V_stop = float(p["V_stop"])
            schedule = phase_transition_schedule(k, V_stop, setup.V0, setup.initial_hold)
            series = protocol_phase_transition(k, V_stop, setup, snapshot_archive=archive)
            diagnostics = {"ramp_start" : schedule.ramp_start, "ramp_end" : schedule.total_duration}
        else:
            V_hold, hold_time = float(p["V_hold"]), float(p["hold_time"])
            schedule = oscillation_schedule(k, hold_time, setup.V0, V_hold)
            series = protocol_oscillation(k, hold_time, setup, V_hold, snapshot_archive=archive)
            diagnostics = {"hold_start" : float(schedule.starts[-1]) if hold_time > 0 else schedule.total_duration, "V_hold" : V_hold}
    finally:
        if archive is not None:
            archive.close()
    path = write_series_csv(Path(out) / "series_k{0}.csv".format(_tag(k)), series)
    files.insert(0, (str(path), "series"))
    N0 = series.total_N[0]
    diagnostics.update(k=k, n_samples=len(series), gamma_final=float(series.gamma_MI[-1]),
                       N_drift=float(np.max(np.abs(series.total_N - N0)) / N0))
    return {"k" : k, "files" : files, "diagnostics" : diagnostics}

def cmd_sweep(args, config):
    if config.protocol == "ground_sweep":
        return cmd_ground(args, config)
    ks = config.k_values
    if not ks:
        raise ConfigError("[protocol] k list is empty")
    out = config.output_directory
    out.mkdir(parents=True, exist_ok=True)
    manifest = RunManifest.load_or_create(out, config.to_dict(), "sweep")
    setup = config.setup()

    path = out / "initial_state.bin"
    if args.resume and manifest.completed("initial"):
        state, _ = load_state(path)
        mu = manifest.runs["initial"]["diagnostics"]["mu"]
        setup.set_initial(mu, state)
        logger.info("resuming from the saved initial state (mu=%.8g)", mu)
    else:
        mu, state = setup.initial_state()
        field = compute_order_parameter(state)
        save_state(path, state, setup.calibration.params(setup.V0, mu), {"V_Er" : setup.V0})
        manifest.add_file("initial", path, "checkpoint")
        manifest.add_file("initial", str(path) + ".json", "checkpoint_sidecar")
        manifest.mark("initial", "completed", mu=float(mu), N=float(field.total_density),
                      gamma_MI=float(gamma_mi(state, setup.options.gamma_normalization)))
        manifest.save()

    if config.protocol == "phase_transition" and config["analysis"]["nex_reference"].strip() == "ground_state" \
            and not (args.resume and manifest.completed("reference")):
        sweep = equilibrium_sweep(setup, parse_range(config["analysis"]["reference_V"]), progress=not args.quiet)
        rpath = write_columns(out / "reference.csv", {"V_Er" : sweep.V, "gamma_MI" : sweep.gamma_MI, "mu_Er" : sweep.mu,
                                                      "N" : sweep.total_N, "energy_Er" : sweep.energy})
        manifest.add_file("reference", rpath, "reference")
        manifest.mark("reference", "completed")
        manifest.save()

    todo = [k for k in ks if not (args.resume and manifest.completed("k" + _tag(k)))]
    if len(todo) < len(ks):
        logger.info("resuming: %d of %d runs already completed", len(ks) - len(todo), len(ks))
    workers = min(config.workers, max(len(todo), 1))
    threads = max(1, (os.cpu_count() or 1) // workers)
    amplitudes = state.numpy()
    failures = 0

    def record(k, result=None, error=None):
        key = "k" + _tag(k)
        if error is not None:
            logger.error("run k=%s failed: %s", _tag(k), error)
            manifest.mark(key, "failed", k=k, error=str(error), error_type=type(error).__name__)
        else:
            for f, kind in result["files"]:
                manifest.add_file(key, f, kind)
            manifest.mark(key, "completed", **result["diagnostics"])
        manifest.save()

    bar = tqdm(total=len(todo), disable=args.quiet, desc="k sweep")
    if workers == 1:
        for k in todo:
            try:
                record(k, _run_series(config.to_dict(), k, str(out), mu, amplitudes, threads))
            except GMFTError as e:
                failures += 1
                record(k, error=e)
            bar.update(1)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(_run_series, config.to_dict(), k, str(out), mu, amplitudes, threads) : k for k in todo}
            for future in as_completed(futures):
                k = futures[future]
                try:
                    record(k, future.result())
                except GMFTError as e:
                    failures += 1
                    record(k, error=e)
                bar.update(1)
    bar.close()
    logger.info("sweep finished: %d runs, %d failed, manifest %s", len(todo), failures, manifest.path)
    return 2 if failures else 0

# ---------------------------------------------------------------------------------- analyze

def _load_family(directory):
    """ k -> (series, diagnostics) from a manifest, or from series_k*.csv files. """
    family = {}
    protocol = None
    if (directory / "manifest.json").exists():
        manifest = RunManifest.load(directory)
        protocol = manifest.config.get("protocol", {}).get("type")
        for key, path in manifest.files("series"):
            d = manifest.runs[key]["diagnostics"]
            family[float(d["k"])] = (read_series_csv(path), d)
    else:
        for path in sorted(directory.glob("series_k*.csv")):
            m = SERIES_PATTERN.match(path.name)
            try:
                k = float(m.group(1))
            except ValueError:
                continue
            family[k] = (read_series_csv(path), {})
    return family, protocol

def _quantity(report, name, fun):
    try:
        report[name] = fun()
    except GMFTError as e:
        logger.error("%s: %s", name, e)
        report[name] = {"error" : str(e), "type" : type(e).__name__}

def _fit_report(points, fit, critical=None):
    d = {"points" : {_tag(k) : v for k, v in sorted(points.items())}, "fit" : fit.to_dict()}
    if critical is not None:
        d["critical"] = critical.to_dict()
    return d

def _write_fit_points(path, points, fit):
    ks = np.array(sorted(points))
    write_columns(path, {"k" : ks, "value" : [points[k] for k in ks], "fit" : fit(ks)})

def _analyze_phase_transition(family, config, directory, out):
    a = config["analysis"]
    smoother = a["smoother"].strip()
    poly_threshold = float(a["poly_threshold"])
    V_c = float(a["V_c"])
    start_ref = a["mi_start_ref"].strip()
    start = float(a["mi_start"])
    cuts = scaling.MI_CUT_BAND if a["mi_cuts"].strip() == "band" else parse_list(a["mi_cuts"])
    k_max = float(a["mi_k_max"])
    initial_hold = float(config["protocol"]["initial_hold"])
    report = {}

    traces_t, traces_V = {}, {}
    for k, (series, d) in sorted(family.items()):
        t0, t1 = d.get("ramp_start", initial_hold), d.get("ramp_end")
        try:
            traces_t[k] = scaling.smooth_trace(series, k, "t", t0, t1, smoother, poly_threshold)
            traces_V[k] = scaling.smooth_trace(series, k, "V", t0, t1, smoother, poly_threshold)
        except GMFTError as e:
            logger.error("k=%s: cannot smooth trace (%s)", _tag(k), e)
    report["smoothers"] = {_tag(k) : {"smoother" : t.smoother, "residual_rms" : t.residual_rms} for k, t in traces_t.items()}
    slow_t = {k : t for k, t in traces_t.items() if k <= k_max}
    slow_V = {k : t for k, t in traces_V.items() if k <= k_max}

    def sf():
        points = {k : scaling.tau_sf(t, float(a["sf_threshold"])) for k, t in traces_t.items()}
        fit = scaling.fit_power_law(list(points), list(points.values()))
        _write_fit_points(out / "tau_sf.csv", points, fit)
        return _fit_report(points, fit, scaling.nu_z_from_tau(fit.exponent, fit.uncertainty))
    _quantity(report, "tau_sf", sf)

    def mi():
        fit, points = scaling.tau_mi_scaling(slow_t, cuts, start_ref, a["mi_average"].strip(), start, V_c)
        _write_fit_points(out / "tau_mi.csv", points, fit)
        d = _fit_report(points, fit, scaling.nu_z_from_tau(fit.exponent, fit.uncertainty))
        c, e, de = scaling.tau_mi_cut_scan(slow_t, parse_linspace(a["cut_scan"]), start_ref, start, V_c)
        write_columns(out / "tau_mi_cut_scan.csv", {"cut" : c, "exponent" : e, "uncertainty" : de})
        d["cut_scan_spread"] = float(np.nanmax(e) - np.nanmin(e)) if np.any(np.isfinite(e)) else None
        return d
    _quantity(report, "tau_mi", mi)

    def reference():
        path = directory / "reference.csv"
        if a["nex_reference"].strip() == "slowest" or not path.exists():
            if a["nex_reference"].strip() == "ground_state":
                logger.warning("no reference.csv in %s, using the slowest ramp as the adiabatic reference", directory)
            return "slowest"
        data = np.genfromtxt(path, delimiter=",", names=True)
        return scaling.reference_trace(data["V_Er"], data["gamma_MI"])

    def nex():
        ref = reference()
        window = tuple(parse_list(a["nex_window"]))
        values = scaling.excitation_fraction(traces_V, ref, window)
        points = {k : v for k, v in values.items() if v > 0}
        if len(points) < len(values):
            logger.warning("n_ex <= 0 for k=%s, excluded from the fit", [_tag(k) for k in values if k not in points])
        fit = scaling.fit_power_law(list(points), list(points.values()))
        _write_fit_points(out / "nex.csv", points, fit)
        d = _fit_report(points, fit, scaling.nu_z_from_nex(fit.exponent, 3, 0.5, fit.uncertainty))
        c, e, de = scaling.nex_window_scan(traces_V, ref, parse_linspace(a["window_scan"]), window[1] - window[0])
        write_columns(out / "nex_window_scan.csv", {"V_center" : c, "exponent" : e, "uncertainty" : de})
        d["window_scan_spread"] = float(np.nanmax(e) - np.nanmin(e)) if np.any(np.isfinite(e)) else None
        return d
    _quantity(report, "n_ex", nex)

    def collapse():
        if a["collapse_b"].strip() == "fit":
            if "fit" not in report.get("tau_mi", {}):
                raise DomainError("collapse_b = fit needs a successful tau_MI fit")
            b = abs(report["tau_mi"]["fit"]["exponent"])
        else:
            b = float(a["collapse_b"])
        result = scaling.universal_rescale(slow_V, V_c, b)
        write_columns(out / "collapse.csv", {"V_eff" : result.V_eff, **{"k" + _tag(k) : g for k, g in result.curves.items()}})
        return result.to_dict()
    _quantity(report, "collapse", collapse)
    return report

def _analyze_oscillation(family, config, out):
    a = config["analysis"]
    p = config["protocol"]
    calibration = config.calibration()
    V_hold = float(p["V_hold"])
    U_hold = calibration.interaction(V_hold)
    rate = calibration.constants.recoil_rate
    report = {"U_hold_rad_per_ms" : U_hold * rate}
    fits = {}
    for k, (series, d) in sorted(family.items()):
        hold_start = d.get("hold_start", (V_hold - float(p["V0"])) / k)
        mode = a["oscillation_mode"].strip()
        if mode == "auto":
            mode = "peak_to_peak" if k > float(a["peak_to_peak_above"]) else "cosine"
        try:
            fits[k] = scaling.oscillation_amplitude(series, hold_start, float(a["oscillation_window"]), U_hold=U_hold, recoil_rate=rate, mode=mode)
        except GMFTError as e:
            logger.error("k=%s: oscillation fit failed (%s)", _tag(k), e)
            report.setdefault("failed", {})[_tag(k)] = str(e)
    report["fits"] = {_tag(k) : f.to_dict() for k, f in fits.items()}
    report["B_over_U"] = {_tag(k) : f.B / (U_hold * rate) for k, f in fits.items() if f.mode == "cosine"}

    def amplitude():
        points = {k : f.A for k, f in fits.items() if f.A > 0}
        fit = scaling.fit_power_law(list(points), list(points.values()))
        _write_fit_points(out / "amplitude.csv", points, fit)
        return _fit_report(points, fit)
    _quantity(report, "amplitude", amplitude)
    return report

def cmd_analyze(args, config):
    directory = Path(args.input) if args.input else config.output_directory
    if not directory.is_dir():
        raise ConfigError("{0} is not a directory".format(directory))
    family, protocol = _load_family(directory)
    if not family:
        raise ConfigError("no series found in {0}".format(directory))
    protocol = protocol or config.protocol
    out = directory / "analysis"
    out.mkdir(exist_ok=True)
    logger.info("analysing %d %s runs in %s", len(family), protocol, directory)
    if protocol == "oscillation":
        quantities = _analyze_oscillation(family, config, out)
    else:
        quantities = _analyze_phase_transition(family, config, directory, out)
    report = {"protocol" : protocol, "directory" : str(directory), "k" : sorted(family), "quantities" : quantities}
    write_json(out / "report.json", report)
    if not args.quiet:
        print(json.dumps(report, indent=2))
    return 0

# ---------------------------------------------------------------------------------- bandmap

def _natural_key(path):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", path.name)]

def _expand(inputs):
    files = []
    for name in inputs:
        p = Path(name)
        files.extend(sorted(p.glob("*.csv"), key=_natural_key) if p.is_dir() else [p])
    return files

def parse_group(text):
    m = re.match(r"^(\d+)x(\d+)$", text.strip())
    if m is None:
        raise ConfigError("--group expects <group_size>x<n_groups>, e.g. 3x6, got '{0}'".format(text))
    return int(m.group(1)), int(m.group(2))

def cmd_bandmap(args, config):
    window = args.plateau_window if args.plateau_window is not None else float(config["analysis"]["plateau_window"])
    files = _expand(args.inputs)
    if not files:
        raise ConfigError("no profile files given")
    failures = 0
    if args.group:
        g, n = parse_group(args.group)
        profiles = [read_profile_csv(f) for f in files]
        try:
            result = grouped_statistics(profiles, g, n, window).to_dict()
        except DomainError as e:
            raise ConfigError(str(e))
    else:
        result = {}
        for f in files:
            try:
                result[str(f)] = analyze(read_profile_csv(f), window).to_dict()
            except (ProfileFormatError, DomainError) as e:
                failures += 1
                logger.error("%s: %s", f, e)
                result[str(f)] = {"error" : str(e), "type" : type(e).__name__}
    if args.report:
        write_json(args.report, result)
    print(json.dumps(result, indent=2))
    return 1 if failures else 0

# ---------------------------------------------------------------------------------- synth-profile

def cmd_synth_profile(args, config):
    state, sidecar = load_state(args.state)
    a = config["analysis"]
    grid_size = args.grid_size or int(a["grid_size"])
    blur = float(a["blur_sigma"]) if args.blur is None else args.blur
    profile = synthesize_profile(state, grid_size, blur)
    logger.info("state gamma_MI=%.5f, profile total=%.6g", gamma_mi(state, a["gamma_normalization"].strip()), profile.total())
    if not args.noise:
        write_profile_csv(args.output, profile)
        return 0
    try:
        name, level = args.noise.split(":")
        model = noise_model(name, float(level), seed=config.seed)
    except ValueError:
        raise ConfigError("--noise expects <model>:<level>, e.g. gaussian:0.01, got '{0}'".format(args.noise))
    if args.shots == 1:
        write_profile_csv(args.output, model(profile))
        return 0
    directory = Path(args.output)
    directory.mkdir(parents=True, exist_ok=True)
    for i in range(args.shots):
        write_profile_csv(directory / "profile_{0:03d}.csv".format(i), model(profile))
    return 0

# ---------------------------------------------------------------------------------- main

def build_parser():
    parser = argparse.ArgumentParser(prog="gmft", description="Gutzwiller mean-field dynamics of trapped bosons "
                                     "in a 3D optical lattice and Kibble-Zurek scaling analysis.")
    parser.add_argument("--config", type=str, default=None, help="run configuration (INI)")
    parser.add_argument("--out", type=str, default=None, help="output directory (overrides [output] directory)")
    parser.add_argument("--seed", type=int, default=None, help="random seed (overrides [run] seed)")
    parser.add_argument("--workers", type=int, default=None, help="worker processes (overrides [run] workers)")
    parser.add_argument("--resume", action="store_true", help="skip runs already completed in the manifest")
    parser.add_argument("--log-level", type=str, default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--quiet", action="store_true", help="warnings only, no progress bars")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ground", help="ground states over a V sweep")
    p.add_argument("--V", type=str, default=None, help="comma separated depths (overrides [protocol] V_values)")
    p.set_defaults(func=cmd_ground)

    p = sub.add_parser("sweep", help="protocol runs over the configured k values")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("analyze", help="scaling analysis of a sweep directory")
    p.add_argument("input", nargs="?", default=None, help="sweep directory (defaults to the output directory)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bandmap", help="gamma_MI of band-mapping profiles")
    p.add_argument("inputs", nargs="+", help="profile CSV files or directories of numbered profiles")
    p.add_argument("--plateau-window", type=float, default=None, help="inner edge of the plateau window in units of pi")
    p.add_argument("--group", type=str, default=None, help="group_size x n_groups, e.g. 3x6")
    p.add_argument("--report", type=str, default=None, help="also write the JSON result here")
    p.set_defaults(func=cmd_bandmap)

    p = sub.add_parser("synth-profile", help="band-mapping profile of a checkpointed state")
    p.add_argument("state", help="state checkpoint")
    p.add_argument("--output", type=str, required=True, help="profile CSV (a directory when --shots > 1)")
    p.add_argument("--grid-size", type=int, default=None)
    p.add_argument("--blur", type=float, default=None, help="Gaussian blur width in units of q")
    p.add_argument("--noise", type=str, default=None, help="noise model, gaussian:<rel std> or poisson:<atoms>")
    p.add_argument("--shots", type=int, default=1)
    p.set_defaults(func=cmd_synth_profile)
    return parser

def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    logging.basicConfig(level=logging.WARNING if args.quiet else getattr(logging, args.log_level), format=LOG_FORMAT)
    try:
        config = load_config(args.config, overrides={"run" : {"seed" : args.seed, "workers" : args.workers},
                                                     "output" : {"directory" : args.out}})
        return args.func(args, config)
    except (ConfigError, ProfileFormatError) as e:
        logger.error("%s", e)
        return 1
    except GMFTError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return 2

if __name__ == "__main__":
    sys.exit(main())
