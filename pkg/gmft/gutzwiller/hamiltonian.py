#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 10:48:05

 Single-site mean-field Hamiltonian

    h_i = -J (conj(Phi_i) a + Phi_i a^dag) + U/2 n(n-1) - mu_i n,    mu_i = mu - c r_i^2

 in the truncated Fock basis {|0>, ..., |n_max>}. ``build_local_hamiltonian`` returns
 the dense matrices (used by the ground state solver), ``apply_local_hamiltonian``
 applies the tridiagonal action directly (used by the integrator).
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import torch

from .. import torchutils as tu
from .state import _ladder, _occupation, compute_order_parameter, neighbour_sum

def effective_mu(params, geometry, device=None):
    """ mu_i = mu - c r_i^2 on every site (real tensor of the lattice shape). """
    r2 = tu.as_real(geometry.radius2, device=device)
    return params.mu - params.trap_curvature * r2

def local_diagonal(U, mu_eff, n_max):
    """ U/2 n(n-1) - mu_i n, shape (*mu_eff.shape, n_max + 1). """
    n = _occupation(n_max, mu_eff.device)
    return 0.5 * U * n * (n - 1.) - mu_eff.unsqueeze(-1) * n

def build_local_hamiltonian(J, U, mu_eff, Phi, n_max):
    """ Dense Hermitian local Hamiltonians.

    Args:
        J (float): tunneling.
        U (float): on-site interaction.
        mu_eff (torch.Tensor): real, any batch shape.
        Phi (torch.Tensor): complex neighbour sums, same shape as mu_eff.
        n_max (int): Fock truncation.

    Returns:
        torch.Tensor: complex, shape (*mu_eff.shape, n_max + 1, n_max + 1).
    """
    mu_eff = tu.as_real(mu_eff)
    Phi = tu.as_complex(Phi, device=mu_eff.device)
    D = n_max + 1
    h = torch.zeros((*mu_eff.shape, D, D), dtype=tu.DTYPE, device=mu_eff.device)
    idx = torch.arange(D, device=mu_eff.device)
    h[..., idx, idx] = local_diagonal(U, mu_eff, n_max).to(tu.DTYPE)
    ladder = _ladder(n_max, mu_eff.device)
    upper = -J * Phi.conj().unsqueeze(-1) * ladder
    h[..., idx[:-1], idx[1:]] = upper
    h[..., idx[1:], idx[:-1]] = upper.conj()
    return h

def apply_local_hamiltonian(f, J, U, mu_eff, Phi):
    """ h_i f_i for every site without forming h, f of shape (..., n_max + 1). """
    n_max = f.shape[-1] - 1
    ladder = _ladder(n_max, f.device)
    hf = local_diagonal(U, mu_eff, n_max) * f
    lower = -J * Phi.unsqueeze(-1) * ladder * f[..., :-1]          # a^dag
    upper = -J * Phi.conj().unsqueeze(-1) * ladder * f[..., 1:]    # a
    zero = torch.zeros_like(f[..., :1])
    return hf + torch.cat([zero, lower], -1) + torch.cat([upper, zero], -1)

def total_energy(state, params, field=None):
    """ <Psi|H|Psi> of a Gutzwiller product state, in E_r.

        E = -J Re sum_i conj(psi_i) Phi_i + sum_i [U/2 <n(n-1)>_i + (c r_i^2 - mu) <n>_i]
    """
    if field is None:
        field = compute_order_parameter(state)
    geometry = state.geometry
    Phi = neighbour_sum(field.psi, geometry)
    kinetic = -params.J * (field.psi.conj() * Phi).real.sum()
    n = _occupation(state.n_max, state.device)
    prob = state.amplitudes.abs() ** 2
    interaction = 0.5 * params.U * (prob * n * (n - 1.)).sum()
    potential = -(effective_mu(params, geometry, state.device) * field.density).sum()
    return (kinetic + interaction + potential).item()
