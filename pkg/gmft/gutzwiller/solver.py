#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 11:20:14

 Mean-field ground states. Two solvers share the ``step``/``__call__`` shape:

    SelfConsistentSolver : diagonalise every h_i(Phi_i), mix psi, repeat (Jacobi sweep).
    ImaginaryTimeSolver  : f_i <- exp(-dtau h_i) f_i / norm, repeat. Slower, used as a cross-check.

 ``target_atom_number`` bisects mu so that sum_i <n_i> matches a requested atom number.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.gutzwiller")

from collections import defaultdict

import numpy as np
import torch

from .. import torchutils as tu
from ..batch import batch_slices, DEFAULT_BATCH_SIZE
from ..errors import ConvergenceError, BracketError, DomainError
from .state import GutzwillerState, compute_order_parameter, order_parameter, neighbour_sum
from .hamiltonian import build_local_hamiltonian, effective_mu

DEGENERACY_TOLERANCE = 1e-10
LOBE_MARGIN = 1e-3

def lowest_eigenvector(h, f_prev=None, degeneracy_tol=DEGENERACY_TOLERANCE):
    """ Lowest eigenvector of each matrix in a batch of Hermitian matrices.

        Where the two lowest eigenvalues are (numerically) degenerate, the eigenvector
        with the larger overlap with ``f_prev`` is taken. The largest component of the
        result is made real positive.
    """
    evals, evecs = torch.linalg.eigh(h)
    v = evecs[..., :, 0]
    if f_prev is not None and h.shape[-1] > 1:
        v1 = evecs[..., :, 1]
        degenerate = (evals[..., 1] - evals[..., 0]) < degeneracy_tol
        ov0 = (f_prev.conj() * v).sum(-1).abs()
        ov1 = (f_prev.conj() * v1).sum(-1).abs()
        v = torch.where((degenerate & (ov1 > ov0)).unsqueeze(-1), v1, v)
    return _fix_phase(v)

def _fix_phase(v):
    i = v.abs().argmax(-1, keepdim=True)
    pivot = torch.gather(v, -1, i)
    return v * (pivot.conj() / pivot.abs())

def initial_order_parameter(geometry, seed_psi=0.1, seed_noise=0., seed=None, device=None):
    """ Uniform psi = seed_psi, optionally with complex uniform noise of amplitude ``seed_noise``. """
    psi = torch.full(geometry.shape, complex(seed_psi), dtype=tu.DTYPE, device=device)
    if seed_noise > 0:
        generator = torch.Generator()
        if seed is not None:
            generator.manual_seed(int(seed))
        noise = torch.rand(geometry.shape, generator=generator, dtype=tu.REAL_DTYPE) \
              + 1j * torch.rand(geometry.shape, generator=generator, dtype=tu.REAL_DTYPE)
        psi = psi + seed_noise * (2. * noise.to(device) - (1. + 1j))
    return psi

class Solver:
    """ Iterates ``step`` until the largest change in psi drops below ``tol``.

    Args:
        params (HubbardParams): J, U, mu and trap curvature.
        geometry (LatticeGeometry): the lattice.
        n_max (int, optional): Fock truncation. Defaults to 7.
        tol (float, optional): convergence threshold on max_i |dpsi_i|. Defaults to 1e-8.
        max_iter (int, optional): Defaults to 10000.
        batch_size (int, optional): sites diagonalised at once.
        device (torch.device, optional): compute device.
    """

    def __init__(self, params, geometry, n_max=7, tol=1e-8, max_iter=10000, batch_size=DEFAULT_BATCH_SIZE, device=None):
        if n_max < 3:
            raise DomainError("n_max must be >= 3, got {0}".format(n_max))
        self.params = params
        self.geometry = geometry
        self.n_max = n_max
        self.tol = tol
        self.max_iter = int(max_iter)
        self.batch_size = batch_size
        self.device = device if device is not None else torch.device("cpu")
        self.mu_eff = effective_mu(params, geometry, self.device).reshape(-1)
        self.record = defaultdict(list) # residual history

    def diagonalise(self, psi, f_prev=None):
        """ Lowest eigenvector of h_i(Phi_i) on every site, shape (*lattice, n_max + 1). """
        Phi = neighbour_sum(psi, self.geometry).reshape(-1)
        out = torch.empty((self.geometry.n_sites, self.n_max + 1), dtype=tu.DTYPE, device=self.device)
        prev = None if f_prev is None else f_prev.reshape(-1, self.n_max + 1)
        for s in batch_slices(self.geometry.n_sites, self.batch_size):
            h = build_local_hamiltonian(self.params.J, self.params.U, self.mu_eff[s], Phi[s], self.n_max)
            out[s] = lowest_eigenvector(h, None if prev is None else prev[s])
        return out.reshape(*self.geometry.shape, self.n_max + 1)

    def step(self, psi, f):
        raise NotImplementedError()

    def __call__(self, psi0=None, f0=None):
        psi = initial_order_parameter(self.geometry, device=self.device) if psi0 is None else tu.as_complex(psi0, device=self.device)
        f = f0
        residual = float("inf")
        for iteration in range(1, self.max_iter + 1):
            psi, f, residual = self.step(psi, f)
            self.record["residual"].append(residual)
            if iteration % 500 == 0:
                logger.debug("%s iteration %d: residual %.3e", type(self).__name__, iteration, residual)
            if residual < self.tol:
                logger.debug("%s converged after %d iterations (residual %.3e)", type(self).__name__, iteration, residual)
                return GutzwillerState(f, self.geometry, check=False).normalise()
        raise ConvergenceError("{0} did not converge in {1} iterations, residual {2:.3e} > tol {3:.1e}".format(
            type(self).__name__, self.max_iter, residual, self.tol), residual=residual, iterations=self.max_iter)

    def __str__(self):
        return "{0}(J={1:.4g}, U={2:.4g}, mu={3:.4g}, L={4}, n_max={5})".format(
            type(self).__name__, self.params.J, self.params.U, self.params.mu, self.geometry.side_length, self.n_max)

    def __repr__(self):
        return str(self)

class SelfConsistentSolver(Solver):
    """ Diagonalise, then psi <- (1 - mixing) psi + mixing psi[f]. """

    def __init__(self, params, geometry, n_max=7, mixing=0.5, **kwargs):
        super(SelfConsistentSolver, self).__init__(params, geometry, n_max=n_max, **kwargs)
        if not 0 < mixing <= 1:
            raise DomainError("mixing must lie in (0, 1], got {0}".format(mixing))
        self.mixing = mixing

    def step(self, psi, f):
        f = self.diagonalise(psi, f)
        psi_new = order_parameter(f)
        residual = (psi_new - psi).abs().max().item()
        return (1. - self.mixing) * psi + self.mixing * psi_new, f, residual

class ImaginaryTimeSolver(Solver):
    """ Projected imaginary-time evolution f <- exp(-dtau h[Phi]) f with per-site renormalisation. """

    def __init__(self, params, geometry, n_max=7, dtau=None, **kwargs):
        super(ImaginaryTimeSolver, self).__init__(params, geometry, n_max=n_max, **kwargs)
        self.dtau = 2. / params.U if dtau is None else dtau
        if not self.dtau > 0:
            raise DomainError("dtau must be strictly positive, got {0}".format(self.dtau))

    def step(self, psi, f):
        if f is None:
            f = self.diagonalise(psi)
            return order_parameter(f), f, float("inf")
        Phi = neighbour_sum(psi, self.geometry).reshape(-1)
        flat = f.reshape(-1, self.n_max + 1)
        out = torch.empty_like(flat)
        for s in batch_slices(self.geometry.n_sites, self.batch_size):
            h = build_local_hamiltonian(self.params.J, self.params.U, self.mu_eff[s], Phi[s], self.n_max)
            evals, evecs = torch.linalg.eigh(h)
            weights = torch.exp(-self.dtau * (evals - evals[..., :1]))
            coeff = (evecs.conj().transpose(-1, -2) @ flat[s].unsqueeze(-1)).squeeze(-1) * weights
            g = (evecs @ coeff.unsqueeze(-1)).squeeze(-1)
            out[s] = g / torch.linalg.norm(g, dim=-1, keepdim=True)
        f = out.reshape(f.shape)
        psi_new = order_parameter(f)
        return psi_new, f, (psi_new - psi).abs().max().item()

SOLVERS = {"self_consistent" : SelfConsistentSolver,
           "imaginary_time" : ImaginaryTimeSolver}

def ground_state(params, geometry, n_max=7, backend="self_consistent", psi0=None, seed_psi=0.1, seed_noise=0., seed=None, **options):
    """ Mean-field ground state of the trapped Bose-Hubbard model.

    Args:
        params (HubbardParams): J, U, mu, trap curvature (E_r).
        geometry (LatticeGeometry): the lattice.
        n_max (int, optional): Fock truncation (>= 3). Defaults to 7.
        backend (str, optional): 'self_consistent' or 'imaginary_time'.
        psi0 (torch.Tensor, optional): initial order parameter, overrides the seed.
        seed_psi (complex, optional): uniform seed, non-zero so the superfluid branch is found. Defaults to 0.1.
        seed_noise (float, optional): amplitude of random noise added to the seed.
        seed (int, optional): RNG seed for the noise.
        **options: passed to the solver (tol, max_iter, mixing, dtau, batch_size, device).

    Returns:
        GutzwillerState: the converged state.

    Raises:
        ConvergenceError: if the iteration does not converge within max_iter.
    """
    if backend not in SOLVERS:
        raise DomainError("unknown ground state backend {0}, expected one of {1}".format(backend, list(SOLVERS)))
    solver = SOLVERS[backend](params, geometry, n_max=n_max, **options)
    if psi0 is None:
        psi0 = initial_order_parameter(geometry, seed_psi, seed_noise, seed, device=solver.device)
    state = solver(psi0)
    logger.info("%s: converged in %d iterations", solver, len(solver.record["residual"]))
    return state

def _warm_seed(psi_prev, seed_psi):
    if psi_prev is None:
        return None
    seed = torch.full_like(psi_prev, complex(seed_psi))
    return torch.where(psi_prev.abs() > abs(seed_psi), psi_prev, seed)

def target_atom_number(params, atom_number, geometry, n_max=7, rtol=1e-3, max_steps=60, seed_psi=0.1, **options):
    """ Bisects mu until |N(mu) - atom_number| / atom_number < rtol.

        The lower bracket mu = -zJ - 1e-3 U gives an empty lattice. The upper bracket starts
        just inside the first Mott lobe, at (1 - 1e-3) U, away from the n=1/n=2 degeneracy at
        mu = U, and doubles. Each solve is warm-started from the previous psi.

    Returns:
        (float, GutzwillerState): mu and the ground state at that mu.

    Raises:
        BracketError: the target could not be bracketed or was not hit within max_steps.
    """
    if not atom_number > 0:
        raise DomainError("atom_number must be strictly positive, got {0}".format(atom_number))
    capacity = n_max * geometry.n_sites
    if atom_number >= capacity:
        raise DomainError("atom_number {0} exceeds the capacity n_max x sites = {1}".format(atom_number, capacity))

    table = []
    warm = [None]

    def count(mu):
        psi0 = _warm_seed(warm[0], seed_psi)
        state = ground_state(params.with_mu(mu), geometry, n_max=n_max, psi0=psi0, seed_psi=seed_psi, **options)
        field = compute_order_parameter(state)
        N = field.total_density
        table.append((mu, N))
        warm[0] = field.psi
        logger.debug("mu=%.10g -> N=%.6g (target %.6g)", mu, N, atom_number)
        return N, state

    def done(N):
        return abs(N - atom_number) / atom_number < rtol

    lo = -geometry.coordination * params.J - 1e-3 * params.U
    N_lo, state = count(lo)
    if done(N_lo):
        return lo, state
    if N_lo > atom_number:
        raise BracketError("N(mu) already exceeds the target at the lower bracket", table)

    r2_max = float(np.max(geometry.radius2))
    hi_max = 2. * (n_max * params.U + params.trap_curvature * r2_max + geometry.coordination * params.J)
    hi = (1. - LOBE_MARGIN) * params.U
    N_hi, state = count(hi)
    while N_hi < atom_number and not done(N_hi):
        if hi > hi_max:
            raise BracketError("could not bracket N = {0} below mu = {1:.6g}".format(atom_number, hi), table)
        lo, N_lo = hi, N_hi
        hi *= 2.
        N_hi, state = count(hi)
    if done(N_hi):
        _check_monotone(table)
        return hi, state

    for _ in range(max_steps):
        mid = 0.5 * (lo + hi)
        N, state = count(mid)
        if done(N):
            _check_monotone(table)
            logger.info("mu=%.10g gives N=%.6g (target %.6g) after %d solves", mid, N, atom_number, len(table))
            return mid, state
        if N < atom_number:
            lo = mid
        else:
            hi = mid
    _check_monotone(table)
    raise BracketError("bisection on mu did not reach rtol={0} in {1} steps".format(rtol, max_steps), table)

def _check_monotone(table):
    mu, N = np.array(table).T
    order = np.argsort(mu)
    if np.any(np.diff(N[order]) < -1e-6 * max(1., np.max(N))):
        logger.warning("N(mu) is not monotone over the scanned points")
