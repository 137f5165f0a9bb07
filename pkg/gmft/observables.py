#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 13:41:20

 Observables of a Gutzwiller state: Mott-insulator fraction gamma_MI, condensate
 fraction and synthetic band-mapping (quasi-momentum) profiles.

 gamma_MI normalisations:
    'coherent'       1 - sum_i |psi_i|^2 / N
    'zero_momentum'  1 - |sum_i psi_i|^2 / (M N),   M = number of lattice sites

 Both give 1 for Fock states and 0 for a uniform condensate and agree for translation
 invariant states. Only 'coherent' tends to 0 for a condensate that fills a fraction of
 the lattice, and it is the weight that ``synthesize_profile`` puts above the plateau.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.observables")

import math
from dataclasses import dataclass

import numpy as np
from scipy.ndimage import gaussian_filter

from . import torchutils as tu
from .errors import DomainError
from .gutzwiller.state import compute_order_parameter

NORMALIZATIONS = ("coherent", "zero_momentum")
CLAMP_TOLERANCE = 1e-6
DEFAULT_GRID_SIZE = 64
DEFAULT_Q_RANGE = 1.5 * math.pi

def _clamp(value, name):
    if value < -CLAMP_TOLERANCE or value > 1. + CLAMP_TOLERANCE:
        logger.warning("%s = %.3g outside [0, 1], clamped", name, value)
    return min(max(value, 0.), 1.)

def coherent_weight(state, field=None):
    """ sum_i |psi_i|^2 """
    field = compute_order_parameter(state) if field is None else field
    return field.coherent_weight

def gamma_mi(state, normalization="coherent", field=None):
    """ Mott-insulator fraction of ``state`` (see module docstring for ``normalization``). """
    if normalization not in NORMALIZATIONS:
        raise DomainError("unknown gamma_MI normalization {0}, expected one of {1}".format(normalization, NORMALIZATIONS))
    field = compute_order_parameter(state) if field is None else field
    N = field.total_density
    if not N > 0:
        raise DomainError("gamma_MI is undefined for an empty lattice (N = {0})".format(N))
    if normalization == "coherent":
        coherent = field.coherent_weight
    else:
        coherent = abs(field.psi.sum().item()) ** 2 / state.geometry.n_sites
    return _clamp(1. - coherent / N, "gamma_MI")

def condensate_fraction(state, normalization="coherent", field=None):
    return 1. - gamma_mi(state, normalization=normalization, field=field)

def q_axis(grid_size=DEFAULT_GRID_SIZE, q_range=DEFAULT_Q_RANGE):
    """ Cell-centred quasi-momentum samples on [-q_range, q_range], ``grid_size`` per Brillouin zone. """
    if grid_size < 8 or int(grid_size) != grid_size:
        raise DomainError("grid_size must be an integer >= 8, got {0}".format(grid_size))
    dq = 2. * math.pi / grid_size
    n = 2. * q_range / dq
    if q_range < math.pi or abs(n - round(n)) > 1e-9:
        raise DomainError("q_range must be >= pi and a multiple of the grid spacing, got {0}".format(q_range))
    n = int(round(n))
    return -q_range + (np.arange(n) + 0.5) * dq

@dataclass
class QuasiMomentumProfile:
    """ n(q_x, q_y) as a density per unit q^2 (rows = q_y, columns = q_x).

    Args:
        grid (np.ndarray): square 2D array.
        grid_size (int): samples per Brillouin zone (2 pi) along each axis.
        normalization (float): atom number N represented by the grid.
        q_range (float, optional): the grid spans [-q_range, q_range]. Defaults to 1.5 pi.
    """
    grid: np.ndarray
    grid_size: int
    normalization: float
    q_range: float = DEFAULT_Q_RANGE

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=np.float64)
        n = len(self.q)
        if self.grid.shape != (n, n):
            raise DomainError("grid of shape {0} does not match grid_size={1}, q_range={2:.4g} ({3} samples)".format(
                self.grid.shape, self.grid_size, self.q_range, n))

    @property
    def q(self):
        return q_axis(self.grid_size, self.q_range)

    @property
    def dq(self):
        return 2. * math.pi / self.grid_size

    @property
    def cell_area(self):
        return self.dq ** 2

    def total(self):
        """ sum over grid x cell area (equals ``normalization`` for synthesized profiles). """
        return float(self.grid.sum() * self.cell_area)

    def scaled(self, factor):
        return QuasiMomentumProfile(self.grid * factor, self.grid_size, self.normalization * factor, self.q_range)

def _column_field(psi, dim):
    """ psi summed over z (the imaging axis), as a 2D (x, y) array. """
    if dim == 1:
        return psi[:, None]
    if dim == 3:
        return psi.sum(-1)
    return psi

def _deposit(grid, q, k, weight, inside):
    """ Bilinear (cloud-in-cell) deposit of point weights at lattice momenta k onto the
        cell-centred grid, restricted to the Brillouin zone cells ``inside``.
    """
    dq = q[1] - q[0]
    lo, hi = inside[0], inside[-1]
    def split(kk):
        u = np.clip((kk - q[0]) / dq, lo, hi)
        i0 = np.minimum(np.floor(u).astype(int), hi - 1)
        return i0, u - i0
    (kx, ky) = k
    ix, fx = split(kx)
    iy, fy = split(ky)
    for dx, wx in ((0, 1. - fx), (1, fx)):
        for dy, wy in ((0, 1. - fy), (1, fy)):
            np.add.at(grid, (iy + dy, ix + dx), weight * wx * wy)
    return grid

def synthesize_profile(state, grid_size=DEFAULT_GRID_SIZE, blur_sigma=0., q_range=DEFAULT_Q_RANGE, field=None):
    """ Synthetic band-mapping profile of ``state``.

        The coherent part is |FFT|^2 of the z-summed order parameter at the lattice momenta,
        scaled to the coherent weight sum_i |psi_i|^2 and deposited bilinearly onto the grid.
        The remaining sum_i (<n_i> - |psi_i|^2) is a flat plateau over the first Brillouin zone.

    Args:
        state (GutzwillerState): the state.
        grid_size (int, optional): samples across the first Brillouin zone (>= 8). Defaults to 64.
        blur_sigma (float, optional): Gaussian blur width in units of q (0 for none).
        q_range (float, optional): half width of the grid. Defaults to 1.5 pi.

    Returns:
        QuasiMomentumProfile
    """
    if blur_sigma < 0:
        raise DomainError("blur_sigma must be >= 0, got {0}".format(blur_sigma))
    q = q_axis(grid_size, q_range)
    dq = 2. * math.pi / grid_size
    field = compute_order_parameter(state) if field is None else field
    psi, n = tu.to_numpy(field.psi, field.density)
    N = float(n.sum())
    coherent = float((np.abs(psi) ** 2).sum())

    inside = np.flatnonzero(np.abs(q) < math.pi)
    grid = np.zeros((len(q), len(q)))
    grid[np.ix_(inside, inside)] = max(N - coherent, 0.) / (2. * math.pi) ** 2

    if coherent > 0:
        column = _column_field(psi, state.geometry.dim)
        power = np.abs(np.fft.fft2(column)) ** 2
        if power.sum() > 0:
            weight = power / power.sum() * coherent
            kx = 2. * math.pi * np.fft.fftfreq(column.shape[0])
            ky = 2. * math.pi * np.fft.fftfreq(column.shape[1])
            KX, KY = np.meshgrid(kx, ky, indexing="ij")
            points = np.zeros_like(grid)
            _deposit(points, q, (KX.ravel(), KY.ravel()), weight.ravel(), inside)
            grid += points / dq ** 2

    if blur_sigma > 0:
        total = grid.sum()
        grid = gaussian_filter(grid, sigma=blur_sigma / dq, mode="constant")
        if grid.sum() > 0:
            grid *= total / grid.sum()
    return QuasiMomentumProfile(grid, grid_size, N, q_range)
