#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 17-10-2026 10:02:48

 Plain-text formats. Floats are written with 17 significant digits.

    series  : header ``t_ms,V_Er,gamma_MI,cond_frac,N,energy_Er``, one row per sample
    profile : ``# grid_size=<n> q_range=-<a>pi..<a>pi``, ``# normalization=<N>``, then the
              grid, rows = q_y, columns = q_x
    columns : generic named columns (plot data)

 Every writer goes through ``atomic_write`` (temporary file + os.replace).
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import io
import json
import math
import os
import re
from contextlib import contextmanager
from pathlib import Path

import numpy as np

from ..errors import ProfileFormatError, DomainError
from ..observables import QuasiMomentumProfile

FLOAT_FORMAT = "%.17g"
SERIES_HEADER = ("t_ms", "V_Er", "gamma_MI", "cond_frac", "N", "energy_Er")
_PROFILE_HEADER = re.compile(r"^#\s*grid_size=(\d+)\s+q_range=(-?[0-9.eE+]*)pi\.\.([0-9.eE+]*)pi\s*$")
_PROFILE_NORM = re.compile(r"^#\s*normalization=(\S+)\s*$")

@contextmanager
def atomic_write(path, mode="w"):
    """ Opens a temporary sibling of ``path`` and moves it into place on success. """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, mode) as f:
            yield f
        os.replace(tmp, path)
    finally:
        if tmp.exists():
            tmp.unlink()

def write_json(path, obj):
    with atomic_write(path) as f:
        json.dump(obj, f, indent=2, allow_nan=True)
    return Path(path)

def write_series_csv(path, series):
    data = np.column_stack([getattr(series, name) for name in series.COLUMNS])
    with atomic_write(path) as f:
        np.savetxt(f, data, fmt=FLOAT_FORMAT, delimiter=",", header=",".join(SERIES_HEADER), comments="")
    return Path(path)

def read_series_csv(path):
    from ..dynamics.evolve import ObservableSeries
    path = Path(path)
    try:
        with open(path) as f:
            header = f.readline().strip().replace(" ", "")
    except OSError as e:
        raise ProfileFormatError("{0}: cannot read series ({1})".format(path, e))
    if tuple(header.split(",")) != SERIES_HEADER:
        raise ProfileFormatError("{0}: expected series header '{1}', got '{2}'".format(path, ",".join(SERIES_HEADER), header))
    try:
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    except ValueError as e:
        raise ProfileFormatError("{0}: malformed series row ({1})".format(path, e))
    if data.shape[1] != len(SERIES_HEADER) or data.shape[0] == 0:
        raise ProfileFormatError("{0}: expected {1} columns and at least one row".format(path, len(SERIES_HEADER)))
    try:
        return ObservableSeries(*data.T)
    except DomainError as e:
        raise ProfileFormatError("{0}: {1}".format(path, e))

def _pi_multiple(x):
    return "{0:.17g}".format(x / math.pi)

def write_profile_csv(path, profile):
    header = "# grid_size={0} q_range=-{1}pi..{1}pi\n# normalization={2}".format(
        profile.grid_size, _pi_multiple(profile.q_range), FLOAT_FORMAT % profile.normalization)
    with atomic_write(path) as f:
        f.write(header + "\n")
        np.savetxt(f, profile.grid, fmt=FLOAT_FORMAT, delimiter=",")
    return Path(path)

def read_profile_csv(path):
    """ Reads a profile grid, raising ProfileFormatError naming the file on any problem. """
    path = Path(path)
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise ProfileFormatError("{0}: cannot read profile ({1})".format(path, e))
    lines = text.splitlines()
    if len(lines) < 3:
        raise ProfileFormatError("{0}: profile needs a two line header and a grid".format(path))
    m = _PROFILE_HEADER.match(lines[0].strip())
    if m is None:
        raise ProfileFormatError("{0}: bad profile header '{1}'".format(path, lines[0]))
    grid_size = int(m.group(1))
    lo, hi = (float(g) if g not in ("", "-") else (-1. if g == "-" else 1.) for g in m.group(2, 3))
    if abs(lo + hi) > 1e-12:
        raise ProfileFormatError("{0}: q_range must be symmetric, got {1}pi..{2}pi".format(path, lo, hi))
    n = _PROFILE_NORM.match(lines[1].strip())
    if n is None:
        raise ProfileFormatError("{0}: bad normalization line '{1}'".format(path, lines[1]))
    try:
        normalization = float(n.group(1))
        grid = np.loadtxt(io.StringIO("\n".join(lines[2:])), delimiter=",", ndmin=2)
    except ValueError as e:
        raise ProfileFormatError("{0}: malformed profile ({1})".format(path, e))
    if not np.all(np.isfinite(grid)):
        raise ProfileFormatError("{0}: profile contains non-finite values".format(path))
    try:
        return QuasiMomentumProfile(grid, grid_size, normalization, hi * math.pi)
    except DomainError as e:
        raise ProfileFormatError("{0}: {1}".format(path, e))

def write_columns(path, columns):
    """ Writes named equal-length columns (dict name -> array) as CSV. """
    names = list(columns)
    data = np.column_stack([np.asarray(columns[k], dtype=np.float64) for k in names])
    with atomic_write(path) as f:
        np.savetxt(f, data, fmt=FLOAT_FORMAT, delimiter=",", header=",".join(names), comments="")
    return Path(path)
