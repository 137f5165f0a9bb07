#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 10:21:37

 Site-factorised Gutzwiller wavefunction |Psi> = prod_i sum_n f_i^n |n>_i.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import math
from dataclasses import dataclass

import numpy as np
import torch

from .. import torchutils as tu
from ..errors import DomainError

NORM_TOLERANCE = 1e-9
MIN_NMAX = 3

def _ladder(n_max, device=None):
    """ sqrt(n+1) for n = 0 ... n_max-1 """
    return torch.sqrt(torch.arange(1, n_max + 1, dtype=tu.REAL_DTYPE, device=device))

def _occupation(n_max, device=None):
    return torch.arange(0, n_max + 1, dtype=tu.REAL_DTYPE, device=device)

class GutzwillerState:
    """ Complex Fock amplitudes f[site..., n] on a lattice geometry.

    Args:
        amplitudes (torch.Tensor, np.ndarray): shape (*geometry.shape, n_max + 1).
        geometry (LatticeGeometry): the lattice.
        check (bool, optional): validate per-site normalisation. Defaults to True.
    """

    def __init__(self, amplitudes, geometry, check=True):
        amplitudes = tu.as_complex(amplitudes)
        if tuple(amplitudes.shape[:-1]) != tuple(geometry.shape):
            raise DomainError("amplitudes of shape {0} do not match geometry {1}".format(tuple(amplitudes.shape), geometry.shape))
        if amplitudes.shape[-1] - 1 < MIN_NMAX:
            raise DomainError("n_max must be >= {0}, got {1}".format(MIN_NMAX, amplitudes.shape[-1] - 1))
        self.amplitudes = amplitudes
        self.geometry = geometry
        if check:
            drift = self.norm_drift()
            if drift > NORM_TOLERANCE:
                raise DomainError("state is not normalised, max |norm - 1| = {0:.3g}".format(drift))

    @property
    def n_max(self):
        return self.amplitudes.shape[-1] - 1

    @property
    def device(self):
        return self.amplitudes.device

    @property
    def flat(self):
        """ (n_sites, n_max + 1) view. """
        return self.amplitudes.reshape(-1, self.n_max + 1)

    def norms(self):
        return (self.amplitudes.abs() ** 2).sum(-1)

    def norm_drift(self):
        return (self.norms() - 1.).abs().max().item()

    def normalise(self):
        """ New state with every site renormalised. """
        f = self.amplitudes / torch.sqrt(self.norms()).unsqueeze(-1)
        return GutzwillerState(f, self.geometry, check=False)

    def conj(self):
        return GutzwillerState(self.amplitudes.conj().resolve_conj(), self.geometry, check=False)

    def copy(self):
        return GutzwillerState(self.amplitudes.clone(), self.geometry, check=False)

    def to(self, device):
        return GutzwillerState(self.amplitudes.to(device), self.geometry, check=False)

    def rotate(self, theta):
        """ Global U(1) rotation f^n -> e^{i n theta} f^n, psi -> e^{i theta} psi. """
        phase = torch.exp(1j * theta * _occupation(self.n_max, self.device))
        return GutzwillerState(self.amplitudes * phase, self.geometry, check=False)

    def numpy(self):
        return tu.to_numpy(self.amplitudes)

    def __repr__(self):
        return "GutzwillerState(shape={0}, n_max={1}, boundary={2})".format(self.geometry.shape, self.n_max, self.geometry.boundary)

    @classmethod
    def fock(cls, geometry, n, n_max=7, device=None):
        """ Every site in the Fock state |n> (n may be an integer array of the lattice shape). """
        n = torch.as_tensor(np.broadcast_to(np.asarray(n), geometry.shape).copy(), dtype=torch.long, device=device)
        if n.min() < 0 or n.max() > n_max:
            raise DomainError("occupations must lie in [0, {0}]".format(n_max))
        f = torch.nn.functional.one_hot(n, n_max + 1)
        return cls(f.to(tu.DTYPE), geometry)

    @classmethod
    def coherent(cls, geometry, alpha, n_max=7, device=None):
        """ Truncated, renormalised coherent state with amplitude alpha on every site. """
        n = np.arange(n_max + 1)
        log_fact = np.array([math.lgamma(k + 1) for k in n])
        alpha = complex(alpha)
        if alpha == 0:
            coeff = (n == 0).astype(np.complex128)
        else:
            coeff = np.exp(-abs(alpha) ** 2 / 2 + n * np.log(abs(alpha)) - log_fact / 2) * np.exp(1j * n * np.angle(alpha))
        coeff = coeff / np.linalg.norm(coeff)
        f = np.broadcast_to(coeff, (*geometry.shape, n_max + 1)).copy()
        return cls(tu.as_complex(f, device=device), geometry)

    @classmethod
    def uniform(cls, geometry, coefficients, device=None):
        """ Every site in the same (normalised) local state. """
        coeff = np.asarray(coefficients, dtype=np.complex128)
        coeff = coeff / np.linalg.norm(coeff)
        f = np.broadcast_to(coeff, (*geometry.shape, len(coeff))).copy()
        return cls(tu.as_complex(f, device=device), geometry)

@dataclass
class OrderParameterField:
    """ psi_i = <a_i> and density_i = <n_i> on every site (tensors of the lattice shape). """
    psi: torch.Tensor
    density: torch.Tensor

    @property
    def total_density(self):
        return self.density.sum().item()

    @property
    def coherent_weight(self):
        """ sum_i |psi_i|^2 """
        return (self.psi.abs() ** 2).sum().item()

def order_parameter(amplitudes):
    """ psi = sum_n sqrt(n+1) conj(f^n) f^{n+1} over the last axis of ``amplitudes``. """
    n_max = amplitudes.shape[-1] - 1
    ladder = _ladder(n_max, amplitudes.device)
    return (ladder * amplitudes[..., :-1].conj() * amplitudes[..., 1:]).sum(-1)

def density(amplitudes):
    n_max = amplitudes.shape[-1] - 1
    return ((amplitudes.abs() ** 2) * _occupation(n_max, amplitudes.device)).sum(-1)

def compute_order_parameter(state):
    """ Order parameter and density fields of a Gutzwiller state. """
    return OrderParameterField(psi=order_parameter(state.amplitudes), density=density(state.amplitudes))

def neighbour_sum(psi, geometry):
    """ Phi_i = sum_{j in nbr(i)} psi_j with open or periodic boundaries. """
    Phi = torch.zeros_like(psi)
    for axis in range(geometry.dim):
        if geometry.boundary == "periodic":
            if geometry.side_length > 1:
                Phi = Phi + torch.roll(psi, 1, dims=axis) + torch.roll(psi, -1, dims=axis)
        else:
            n = psi.shape[axis]
            lo = [slice(None)] * psi.dim()
            hi = [slice(None)] * psi.dim()
            lo[axis] = slice(0, n - 1)
            hi[axis] = slice(1, n)
            Phi[tuple(hi)] += psi[tuple(lo)]
            Phi[tuple(lo)] += psi[tuple(hi)]
    return Phi
