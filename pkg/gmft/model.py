#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 09:40:02

 Physical units, lattice geometry and the calibration V -> (J, U, trap curvature).

 Internally hbar = 1, energies are in units of the recoil energy E_r and times in
 units of hbar/E_r. Times at API boundaries are in ms, see ``time_unit_conversion``.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.model")

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from .errors import DomainError, ConfigError

PLANCK = 6.62607015e-34 # J s
HBAR = PLANCK / (2 * math.pi)
BOHR_RADIUS = 5.29177210903e-11 # m
RB87_MASS = 1.443160648e-25 # kg

LOBE_TIP = 3. - 2. * math.sqrt(2.) # zJ/U at the tip of the n=1 lobe

@dataclass(frozen=True)
class PhysicalConstants:
    """ Physical constants of the experiment, SI units. E_r is *defined* as h x recoil_frequency.

    Args:
        recoil_frequency (float): E_r / h in Hz. Defaults to 2 kHz.
        lattice_wavelength (float): m. Defaults to 1064 nm.
        atom_mass (float): kg. Defaults to Rb-87.
        scattering_length (float): m. Defaults to 100 a_0.
        trap_frequency_omega0 (float): rad/s. Defaults to 2 pi x 20 Hz.
        recoil_tolerance (float): allowed relative mismatch between the defined E_r and hbar^2 k^2 / 2m.
    """
    recoil_frequency: float = 2000.
    lattice_wavelength: float = 1064e-9
    atom_mass: float = RB87_MASS
    scattering_length: float = 100. * BOHR_RADIUS
    trap_frequency_omega0: float = 2 * math.pi * 20.
    recoil_tolerance: float = 0.02

    def __post_init__(self):
        for name in ("recoil_frequency", "lattice_wavelength", "atom_mass", "scattering_length"):
            if not getattr(self, name) > 0:
                raise DomainError("{0} must be strictly positive, got {1}".format(name, getattr(self, name)))
        if self.trap_frequency_omega0 < 0:
            raise DomainError("trap_frequency_omega0 must be non-negative, got {0}".format(self.trap_frequency_omega0))
        deviation = self.kinetic_recoil_energy / self.recoil_energy - 1.
        if abs(deviation) > self.recoil_tolerance:
            raise DomainError("hbar^2 k^2/2m deviates from the defined E_r by {0:.2%} (tolerance {1:.2%})".format(deviation, self.recoil_tolerance))
        if abs(deviation) > 1e-3:
            logger.debug("hbar^2 k^2/2m = E_r x %.5f (E_r defined as h x %g Hz)", 1. + deviation, self.recoil_frequency)

    @property
    def recoil_energy(self):
        """ E_r in J. """
        return PLANCK * self.recoil_frequency

    @property
    def kinetic_recoil_energy(self):
        k = 2 * math.pi / self.lattice_wavelength
        return (HBAR * k) ** 2 / (2 * self.atom_mass)

    @property
    def lattice_spacing(self):
        return self.lattice_wavelength / 2.

    @property
    def recoil_rate(self):
        """ E_r / hbar in rad/ms. """
        return 2 * math.pi * self.recoil_frequency / 1000.

DEFAULT_CONSTANTS = PhysicalConstants()

@dataclass(frozen=True)
class LatticeGeometry:
    """ Hypercubic lattice of side L (odd), centred on the middle site.

    Args:
        side_length (int): sites per dimension.
        dim (int, optional): spatial dimension. Defaults to 3.
        boundary (str, optional): 'open' or 'periodic'. Defaults to 'open'.
    """
    side_length: int
    dim: int = 3
    boundary: str = "open"

    def __post_init__(self):
        if int(self.side_length) != self.side_length or self.side_length < 1:
            raise DomainError("side_length must be a positive integer, got {0}".format(self.side_length))
        if self.side_length % 2 == 0:
            raise DomainError("side_length must be odd so a unique centre site exists, got {0}".format(self.side_length))
        if self.dim not in (1, 2, 3):
            raise DomainError("dim must be 1, 2 or 3, got {0}".format(self.dim))
        if self.boundary not in ("open", "periodic"):
            raise DomainError("boundary must be 'open' or 'periodic', got {0}".format(self.boundary))

    @property
    def shape(self):
        return (self.side_length,) * self.dim

    @property
    def n_sites(self):
        return self.side_length ** self.dim

    @property
    def coordination(self):
        return 2 * self.dim

    @property
    def center(self):
        return (self.side_length // 2,) * self.dim

    def coordinate(self, index):
        """ Site index -> lattice coordinate (x, y, z). Row-major, x slowest. """
        if not 0 <= index < self.n_sites:
            raise IndexError("site index {0} out of range [0, {1})".format(index, self.n_sites))
        return tuple(int(c) for c in np.unravel_index(index, self.shape))

    def index(self, coordinate):
        """ Lattice coordinate -> site index. """
        return int(np.ravel_multi_index(tuple(coordinate), self.shape))

    @cached_property
    def displacement(self):
        """ (dim, L, ..., L) array of coordinates relative to the centre. """
        axis = np.arange(self.side_length) - self.side_length // 2
        return np.stack(np.meshgrid(*([axis] * self.dim), indexing="ij"))

    @cached_property
    def radius2(self):
        """ Squared distance r_i^2 of every site from the centre, in lattice spacings^2. """
        return (self.displacement ** 2).sum(0).astype(np.float64)

@dataclass(frozen=True)
class HubbardParams:
    """ Bose-Hubbard parameters, all in units of E_r. """
    J: float
    U: float
    mu: float = 0.
    trap_curvature: float = 0.

    def __post_init__(self):
        if not self.J >= 0:
            raise DomainError("J must be non-negative, got {0}".format(self.J))
        if not self.U > 0:
            raise DomainError("U must be strictly positive, got {0}".format(self.U))
        if self.trap_curvature < 0:
            raise DomainError("trap_curvature must be non-negative, got {0}".format(self.trap_curvature))

    def with_mu(self, mu):
        return HubbardParams(self.J, self.U, mu, self.trap_curvature)

def _check_depth(V):
    V = np.asarray(V, dtype=np.float64)
    if np.any(~(V > 0)):
        raise DomainError("lattice depth must be strictly positive, got {0}".format(V))
    return V

def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x

def tunneling_analytic(V):
    """ Deep-lattice closed form J/E_r = (4/sqrt(pi)) V^{3/4} exp(-2 sqrt(V)). """
    V = _check_depth(V)
    return _scalar(4. / math.sqrt(math.pi) * V ** 0.75 * np.exp(-2. * np.sqrt(V)))

def tunneling_asymptotic(V):
    """ Closed form with the first large-depth correction (1 - 7 / (16 sqrt(V))). """
    V = _check_depth(V)
    return _scalar(tunneling_analytic(V) * (1. - 7. / (16. * np.sqrt(V))))

def lowest_band_energy(V, quasi_momentum, n_plane_waves=31):
    """ Lowest eigenvalue of the 1D lattice Hamiltonian p^2 + V sin^2(x) at the given
        quasi-momentum (units of the lattice wavenumber k, zone edge at 1), in E_r.
    """
    half = n_plane_waves // 2
    l = np.arange(-half, half + 1)
    diagonal = (quasi_momentum + 2. * l) ** 2 + V / 2.
    off_diagonal = np.full(len(l) - 1, -V / 4.)
    return float(eigvalsh_tridiagonal(diagonal, off_diagonal, select='i', select_range=(0, 0))[0])

def tunneling_bandstructure(V, n_plane_waves=31):
    """ J as a quarter of the exact lowest-band width (plane-wave diagonalisation). """
    if n_plane_waves < 21:
        raise DomainError("at least 21 plane waves are required, got {0}".format(n_plane_waves))
    V = _check_depth(V)
    def width(v):
        return lowest_band_energy(v, 1., n_plane_waves) - lowest_band_energy(v, 0., n_plane_waves)
    return _scalar(np.vectorize(width)(V) / 4.)

def interaction_analytic(V, constants=DEFAULT_CONSTANTS):
    """ U/E_r = sqrt(8/pi) (2 pi a_s / lambda) V^{3/4}. """
    V = _check_depth(V)
    ka = 2 * math.pi * constants.scattering_length / constants.lattice_wavelength
    return _scalar(math.sqrt(8. / math.pi) * ka * V ** 0.75)

TUNNELING_BACKENDS = {"analytic" : tunneling_analytic,
                      "asymptotic" : tunneling_asymptotic,
                      "bandstructure" : tunneling_bandstructure}

def tunneling_from_depth(V, backend="analytic"):
    """ Nearest-neighbour tunneling J (E_r) at lattice depth V (E_r). """
    if backend not in TUNNELING_BACKENDS:
        raise DomainError("unknown tunneling backend {0}, expected one of {1}".format(backend, list(TUNNELING_BACKENDS)))
    return TUNNELING_BACKENDS[backend](V)

def interaction_from_depth(V, constants=DEFAULT_CONSTANTS):
    """ On-site interaction U (E_r) at lattice depth V (E_r). """
    return interaction_analytic(V, constants)

def trap_curvature(constants=DEFAULT_CONSTANTS):
    """ Coefficient of r_i^2 (in lattice spacings) in (1/2) m w0^2 r^2, in E_r. """
    m, w, d = constants.atom_mass, constants.trap_frequency_omega0, constants.lattice_spacing
    return 0.5 * m * w ** 2 * d ** 2 / constants.recoil_energy

def lobe_boundary(mu_over_U, n=1):
    """ Mean-field zJ/U at the edge of the n-th Mott lobe, (n - x)(x - n + 1)/(x + 1) with x = mu/U in (n - 1, n). """
    x = mu_over_U
    if int(n) != n or n < 1 or not n - 1 < x < n:
        raise DomainError("mu/U must lie in ({0}, {1}) for lobe n={1}, got {2}".format(n - 1, n, x))
    return (n - x) * (x - n + 1.) / (x + 1.)

def time_unit_conversion(t_ms, constants=DEFAULT_CONSTANTS):
    """ ms -> natural units hbar/E_r (1 ms = 4 pi for E_r = h x 2 kHz). """
    return t_ms * constants.recoil_rate

def natural_to_ms(t, constants=DEFAULT_CONSTANTS):
    return t / constants.recoil_rate

class CalibrationTable:
    """ User supplied (V, J, U) rows, CSV with header ``V_Er,J_Er,U_Er``, linearly interpolated. """

    HEADER = ("V_Er", "J_Er", "U_Er")

    def __init__(self, V, J, U):
        V, J, U = (np.asarray(x, dtype=np.float64) for x in (V, J, U))
        if not (V.shape == J.shape == U.shape) or V.ndim != 1 or len(V) < 2:
            raise ConfigError("calibration table needs at least two rows of equal length")
        order = np.argsort(V)
        self.V, self.J, self.U = V[order], J[order], U[order]
        if np.any(np.diff(self.V) <= 0):
            raise ConfigError("calibration table depths must be distinct")
        if np.any(self.J < 0) or np.any(self.U <= 0):
            raise ConfigError("calibration table needs J >= 0 and U > 0")

    @classmethod
    def load(cls, path):
        with open(path, "r") as f:
            header = f.readline().strip().replace(" ", "")
        if tuple(header.split(",")) != cls.HEADER:
            raise ConfigError("calibration table {0}: expected header {1}, got '{2}'".format(path, ",".join(cls.HEADER), header))
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        return cls(data[:,0], data[:,1], data[:,2])

    def _interp(self, V, values):
        V = _check_depth(V)
        if np.any(V < self.V[0]) or np.any(V > self.V[-1]):
            raise DomainError("depth {0} outside calibration table range [{1}, {2}]".format(V, self.V[0], self.V[-1]))
        return _scalar(np.interp(V, self.V, values))

    def tunneling(self, V):
        return self._interp(V, self.J)

    def interaction(self, V):
        return self._interp(V, self.U)

@dataclass(frozen=True)
class Calibration:
    """ Maps lattice depth V to Hubbard parameters.

    Args:
        constants (PhysicalConstants): physical constants.
        backend (str): 'analytic', 'asymptotic', 'bandstructure' or 'table'.
        table (CalibrationTable, optional): required for the 'table' backend.
    """
    constants: PhysicalConstants = DEFAULT_CONSTANTS
    backend: str = "analytic"
    table: CalibrationTable = field(default=None, compare=False)

    def __post_init__(self):
        if self.backend == "table":
            if self.table is None:
                raise ConfigError("the 'table' calibration backend requires a table")
        elif self.backend not in TUNNELING_BACKENDS:
            raise ConfigError("unknown calibration backend {0}".format(self.backend))

    def tunneling(self, V):
        if self.backend == "table":
            return self.table.tunneling(V)
        return tunneling_from_depth(V, self.backend)

    def interaction(self, V):
        if self.backend == "table":
            return self.table.interaction(V)
        return interaction_from_depth(V, self.constants)

    @property
    def trap_curvature(self):
        return trap_curvature(self.constants)

    def params(self, V, mu=0.):
        return HubbardParams(J=self.tunneling(V), U=self.interaction(V), mu=mu, trap_curvature=self.trap_curvature)

    def lobe_tip_ratio(self, V, coordination=6):
        """ zJ/U at depth V relative to the mean-field n=1 lobe tip (>1: superfluid at the tip). """
        ratio = coordination * self.tunneling(V) / self.interaction(V)
        logger.info("V=%.3g E_r: U/(zJ)=%.4g, zJ/U=%.4g (n=1 lobe tip at %.4f)", V, 1. / ratio, ratio, LOBE_TIP)
        return ratio / LOBE_TIP

    def lobe_tip_depth(self, coordination=6, bracket=(2., 60.)):
        """ Depth at which zJ/U crosses the n=1 lobe tip for this calibration. """
        from scipy.optimize import brentq
        f = lambda V: coordination * self.tunneling(V) / self.interaction(V) - LOBE_TIP
        return brentq(f, *bracket)

    def ms(self, t):
        return natural_to_ms(t, self.constants)

    def natural(self, t_ms):
        return time_unit_conversion(t_ms, self.constants)
