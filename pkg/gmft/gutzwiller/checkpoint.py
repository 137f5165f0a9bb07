#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 12:02:51

 Binary state checkpoints.

    header   : struct '<4sHII' = magic b"GTZW", format version, L, n_max
    payload  : complex64 little-endian amplitudes, site-major (site index then n)
    sidecar  : <path>.json with geometry, parameters and free-form metadata

 Amplitudes are stored in single precision and renormalised on load.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.gutzwiller")

import json
import os
import struct
from dataclasses import asdict
from pathlib import Path

import numpy as np

from ..errors import ProfileFormatError
from ..model import LatticeGeometry
from .state import GutzwillerState

MAGIC = b"GTZW"
VERSION = 1
HEADER = struct.Struct("<4sHII")

def sidecar_path(path):
    path = Path(path)
    return path.with_name(path.name + ".json")

def save_state(path, state, params=None, metadata=None):
    """ Writes ``state`` to ``path`` (atomically) with a JSON sidecar. """
    path = Path(path)
    geometry = state.geometry
    amplitudes = state.numpy().reshape(geometry.n_sites, state.n_max + 1).astype("<c8")
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "wb") as f:
        f.write(HEADER.pack(MAGIC, VERSION, geometry.side_length, state.n_max))
        f.write(amplitudes.tobytes())
    os.replace(tmp, path)
    sidecar = {"format_version" : VERSION,
               "geometry" : asdict(geometry),
               "params" : None if params is None else asdict(params),
               "metadata" : metadata or {}}
    tmp = sidecar_path(path).with_name(sidecar_path(path).name + ".tmp")
    with open(tmp, "w") as f:
        json.dump(sidecar, f, indent=2)
    os.replace(tmp, sidecar_path(path))
    logger.debug("saved checkpoint %s (L=%d, n_max=%d)", path, geometry.side_length, state.n_max)
    return path

def load_state(path, device=None):
    """ Reads a checkpoint written by ``save_state``.

    Returns:
        (GutzwillerState, dict): the renormalised state and the sidecar contents.
    """
    path = Path(path)
    with open(path, "rb") as f:
        raw = f.read()
    if len(raw) < HEADER.size:
        raise ProfileFormatError("{0}: truncated checkpoint header".format(path))
    magic, version, L, n_max = HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise ProfileFormatError("{0}: bad magic {1!r}".format(path, magic))
    if version != VERSION:
        raise ProfileFormatError("{0}: unsupported checkpoint version {1}".format(path, version))

    sidecar = {}
    if sidecar_path(path).exists():
        with open(sidecar_path(path)) as f:
            sidecar = json.load(f)
    geometry = LatticeGeometry(**sidecar.get("geometry", {"side_length" : L}))
    if geometry.side_length != L:
        raise ProfileFormatError("{0}: header L={1} disagrees with sidecar L={2}".format(path, L, geometry.side_length))

    payload = np.frombuffer(raw, dtype="<c8", offset=HEADER.size)
    expected = geometry.n_sites * (n_max + 1)
    if payload.size != expected:
        raise ProfileFormatError("{0}: expected {1} amplitudes, found {2}".format(path, expected, payload.size))
    f = payload.astype(np.complex128).reshape(*geometry.shape, n_max + 1)
    f = f / np.linalg.norm(f, axis=-1, keepdims=True)
    return GutzwillerState(f, geometry, check=False).to(device or "cpu"), sidecar
