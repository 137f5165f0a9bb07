#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 17-10-2026 10:40:11

 HDF5 archive of psi-field snapshots taken during an evolution.

 Layout: one group per snapshot, ``/snapshot_<i>`` with datasets ``psi`` (complex128,
 lattice shape) and ``density`` (optional), and attributes ``t_ms`` and ``V_Er``.

 Example Usage:

    with SnapshotArchive('run/snapshots.h5', mode='w') as archive:
        series = evolve(state, schedule, calibration, options, snapshot_archive=archive)

    with SnapshotArchive('run/snapshots.h5') as archive:
        for t, psi in archive:
            ...
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.data")

from pathlib import Path

import h5py
import numpy as np

class SnapshotArchive:

    def __init__(self, file_path, mode="r", attrs=None):
        self.file_path = Path(file_path)
        if mode == "r" and not self.file_path.exists():
            raise FileNotFoundError("no snapshot archive at {0}".format(self.file_path))
        self.file = h5py.File(self.file_path, mode)
        for k, v in (attrs or {}).items():
            self.file.attrs[k] = v

    def write(self, t_ms, psi, V=None, density=None):
        name = "snapshot_{0}".format(len(self))
        group = self.file.create_group(name)
        group.create_dataset("psi", data=np.asarray(psi, dtype=np.complex128), compression="gzip")
        if density is not None:
            group.create_dataset("density", data=np.asarray(density, dtype=np.float64), compression="gzip")
        group.attrs["t_ms"] = float(t_ms)
        if V is not None:
            group.attrs["V_Er"] = float(V)
        logger.debug("wrote %s/%s at t=%.6g ms", self.file_path.name, name, t_ms)
        return name

    def times(self):
        return np.array([self.file[name].attrs["t_ms"] for name in self._names()])

    def read(self, index):
        """ (t_ms, psi) of the index-th snapshot. """
        group = self.file[self._names()[index]]
        return float(group.attrs["t_ms"]), group["psi"][()]

    def _names(self):
        return sorted(self.file.keys(), key=lambda n: int(n.split("_")[-1]))

    def __len__(self):
        return len(self.file.keys())

    def __iter__(self):
        for i in range(len(self)):
            yield self.read(i)

    def close(self):
        self.file.close()

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self.close()
