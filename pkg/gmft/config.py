#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 18-10-2026 11:02:40

 Run configuration: an INI file read with configparser.

    [run]         schema_version, seed, workers
    [model]       constants, calibration backend, lattice, atom number, solver settings
    [protocol]    phase_transition | oscillation | ground_sweep, ramp rates, depths, holds
    [integrator]  dt, sample_interval, renormalize, snapshot_times
    [analysis]    thresholds, cuts, windows, smoother, band-mapping settings
    [output]      directory, snapshots

 Lists are comma separated. Any key can be overridden from the environment with
 GMFT_<SECTION>__<KEY>, e.g. GMFT_MODEL__SIDE_LENGTH=11.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.config")

import configparser
import math
import os
from pathlib import Path

import numpy as np

from .errors import ConfigError, DomainError
from .model import PhysicalConstants, Calibration, CalibrationTable, LatticeGeometry, BOHR_RADIUS
from .dynamics.evolve import EvolutionOptions
from .dynamics.protocol import ProtocolSetup

SCHEMA_VERSION = 1
ENV_PREFIX = "GMFT_"
PROTOCOLS = ("phase_transition", "oscillation", "ground_sweep")

DEFAULTS = {
    "run" : {"schema_version" : "1", "seed" : "0", "workers" : "0"},
    "model" : {"side_length" : "21", "dim" : "3", "boundary" : "open", "n_max" : "7",
               "atom_number" : "1100", "mu" : "",
               "calibration" : "analytic", "calibration_table" : "",
               "recoil_frequency" : "2000", "lattice_wavelength" : "1064e-9",
               "scattering_length_a0" : "100", "trap_frequency_hz" : "20",
               "ground_backend" : "self_consistent", "tol" : "1e-8", "max_iter" : "10000",
               "mixing" : "0.5", "device" : "cpu"},
    "protocol" : {"type" : "phase_transition", "k" : "0.5,1,2,4", "V0" : "5", "V_stop" : "30",
                  "initial_hold" : "20", "V_hold" : "25", "hold_time" : "1.5",
                  "V_values" : ",".join(str(v) for v in range(5, 37, 2))},
    "integrator" : {"dt" : "5e-4", "sample_interval" : "0.05", "renormalize" : "true", "snapshot_times" : ""},
    "analysis" : {"gamma_normalization" : "coherent", "sf_threshold" : "0.6",
                  "mi_start_ref" : "gamma", "mi_start" : "0.6", "mi_cuts" : "band", "mi_average" : "delay",
                  "mi_k_max" : "4", "V_c" : "13",
                  "smoother" : "auto", "poly_threshold" : "4",
                  "nex_window" : "18,20", "nex_reference" : "ground_state", "reference_V" : "12,21,0.5",
                  "collapse_b" : "fit",
                  "cut_scan" : "0.7,0.9,9", "window_scan" : "14,19,6",
                  "oscillation_window" : "1.2", "oscillation_mode" : "auto", "peak_to_peak_above" : "12",
                  "plateau_window" : "0.9", "grid_size" : "64", "blur_sigma" : "0"},
    "output" : {"directory" : "runs", "snapshots" : "false"},
}

def parse_list(value, cast=float):
    value = value.strip()
    if not value:
        return []
    try:
        return [cast(v.strip()) for v in value.split(",") if v.strip()]
    except ValueError:
        raise ConfigError("cannot parse list '{0}'".format(value))

def parse_range(value):
    """ 'start,stop,step' -> numpy array including stop. """
    a, b, step = parse_list(value)
    return np.round(np.arange(a, b + 0.5 * step, step), 12)

def parse_linspace(value):
    """ 'start,stop,n' -> numpy linspace. """
    a, b, n = parse_list(value)
    return np.linspace(a, b, int(n))

class RunConfig:
    """ Typed access to a validated configparser.ConfigParser. """

    def __init__(self, parser, source=None):
        self.parser = parser
        self.source = source
        self._validate()

    def __getitem__(self, section):
        return self.parser[section]

    def get(self, section, key, cast=str):
        value = self.parser[section][key]
        try:
            if cast is bool:
                return self.parser.getboolean(section, key)
            return cast(value)
        except ValueError:
            raise ConfigError("[{0}] {1} = '{2}' is not a valid {3}".format(section, key, value, cast.__name__))

    def _validate(self):
        for section in self.parser.sections():
            if section not in DEFAULTS:
                raise ConfigError("unknown config section [{0}]".format(section))
            for key in self.parser[section]:
                if key not in {k.lower() for k in DEFAULTS[section]}:
                    raise ConfigError("unknown config key [{0}] {1}".format(section, key))
        version = self.get("run", "schema_version", int)
        if version != SCHEMA_VERSION:
            raise ConfigError("config schema_version {0} is not supported (expected {1})".format(version, SCHEMA_VERSION))
        if self.protocol not in PROTOCOLS:
            raise ConfigError("[protocol] type must be one of {0}, got {1}".format(PROTOCOLS, self.protocol))
        k = self.k_values
        if any(not x > 0 for x in k) or len(set(k)) != len(k):
            raise ConfigError("[protocol] k values must be positive and distinct, got {0}".format(k))
        table = self["model"]["calibration_table"].strip()
        if table and not Path(table).exists():
            raise ConfigError("[model] calibration_table {0} does not exist".format(table))
        if self["model"]["atom_number"].strip() == "" and self["model"]["mu"].strip() == "":
            raise ConfigError("[model] needs atom_number or mu")
        try:
            self.calibration()
            self.geometry()
            self.evolution_options()
        except DomainError as e:
            raise ConfigError(str(e))

    @property
    def seed(self):
        return self.get("run", "seed", int)

    @property
    def workers(self):
        n = self.get("run", "workers", int)
        return n if n > 0 else (os.cpu_count() or 1)

    @property
    def protocol(self):
        return self["protocol"]["type"].strip()

    @property
    def k_values(self):
        return parse_list(self["protocol"]["k"])

    @property
    def output_directory(self):
        return Path(self["output"]["directory"])

    def constants(self):
        m = self["model"]
        return PhysicalConstants(recoil_frequency=float(m["recoil_frequency"]),
                                 lattice_wavelength=float(m["lattice_wavelength"]),
                                 scattering_length=float(m["scattering_length_a0"]) * BOHR_RADIUS,
                                 trap_frequency_omega0=2 * math.pi * float(m["trap_frequency_hz"]))

    def calibration(self):
        m = self["model"]
        backend = m["calibration"].strip()
        table = None
        if backend == "table":
            if not m["calibration_table"].strip():
                raise ConfigError("[model] calibration = table needs calibration_table")
            table = CalibrationTable.load(m["calibration_table"].strip())
        return Calibration(self.constants(), backend, table)

    def geometry(self):
        return LatticeGeometry(self.get("model", "side_length", int), self.get("model", "dim", int), self["model"]["boundary"].strip())

    def solver_options(self):
        m = self["model"]
        return {"backend" : m["ground_backend"].strip(), "tol" : float(m["tol"]), "max_iter" : int(float(m["max_iter"])),
                "seed" : self.seed, **({"mixing" : float(m["mixing"])} if m["ground_backend"].strip() == "self_consistent" else {})}

    def evolution_options(self, progress=False):
        i = self["integrator"]
        return EvolutionOptions(dt=float(i["dt"]), sample_interval=float(i["sample_interval"]),
                                norm_renormalize=self.get("integrator", "renormalize", bool),
                                gamma_normalization=self["analysis"]["gamma_normalization"].strip(),
                                snapshot_times=tuple(parse_list(i["snapshot_times"])), progress=progress)

    def setup(self, progress=False):
        m = self["model"]
        atom_number = float(m["atom_number"]) if m["atom_number"].strip() else None
        mu = float(m["mu"]) if m["mu"].strip() else None
        return ProtocolSetup(calibration=self.calibration(), geometry=self.geometry(), n_max=self.get("model", "n_max", int),
                             atom_number=atom_number, mu=mu, V0=float(self["protocol"]["V0"]),
                             initial_hold=float(self["protocol"]["initial_hold"]),
                             options=self.evolution_options(progress), solver_options=self.solver_options())

    def to_dict(self):
        return {s : dict(self.parser[s]) for s in self.parser.sections()}

    @classmethod
    def from_dict(cls, sections):
        parser = _parser()
        parser.read_dict(sections)
        return cls(parser)

def _parser():
    parser = configparser.ConfigParser(interpolation=None)
    parser.read_dict(DEFAULTS)
    return parser

def load_config(path=None, environ=None, overrides=None):
    """ Defaults <- INI file <- GMFT_<SECTION>__<KEY> environment variables <- overrides.

    Args:
        path (str, optional): INI file.
        environ (dict, optional): environment. Defaults to os.environ.
        overrides (dict, optional): {section: {key: value}} applied last (CLI flags).

    Returns:
        RunConfig
    """
    parser = _parser()
    if path is not None:
        if not Path(path).exists():
            raise ConfigError("config file {0} does not exist".format(path))
        try:
            parser.read(path)
        except configparser.Error as e:
            raise ConfigError("cannot parse {0}: {1}".format(path, e))
    environ = os.environ if environ is None else environ
    for name, value in environ.items():
        if not name.startswith(ENV_PREFIX) or "__" not in name:
            continue
        section, key = name[len(ENV_PREFIX):].split("__", 1)
        section = section.lower()
        if section not in DEFAULTS:
            raise ConfigError("environment override {0} names unknown section [{1}]".format(name, section))
        logger.debug("environment override [%s] %s = %s", section, key.lower(), value)
        parser[section][key.lower()] = value
    for section, values in (overrides or {}).items():
        for key, value in values.items():
            if value is not None:
                parser[section][key] = str(value)
    return RunConfig(parser, path)
