#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 14:10:32

 Real-time Gutzwiller dynamics i df_i/dt = h_i[Phi_i(t), J(t), U(t)] f_i integrated with
 fixed-step RK4. Internally hbar = 1 and time is in hbar/E_r; schedules, options and
 the returned series are in ms.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.dynamics")

import math
from dataclasses import dataclass, field

import numpy as np
import torch
from tqdm import tqdm

from .. import torchutils as tu
from ..errors import DomainError, IntegrationError
from ..model import HubbardParams
from ..gutzwiller.state import GutzwillerState, compute_order_parameter, order_parameter, neighbour_sum
from ..gutzwiller.hamiltonian import apply_local_hamiltonian, effective_mu, total_energy
from ..observables import gamma_mi, NORMALIZATIONS

DRIFT_WARNING = 1e-8
DRIFT_ERROR = 1e-4
TIME_EPS = 1e-9 # ms

@dataclass
class EvolutionOptions:
    """ Integrator options.

    Args:
        dt (float, optional): RK4 step in ms. Defaults to 5e-4.
        sample_interval (float, optional): ms between samples. Defaults to 0.05.
        integrator (str, optional): only 'rk4'.
        norm_renormalize (bool, optional): renormalise every site after each step. Defaults to True.
        gamma_normalization (str, optional): see ``observables.gamma_mi``.
        snapshot_times (tuple, optional): ms at which the psi field is stored.
        progress (bool, optional): show a progress bar.
    """
    dt: float = 5e-4
    sample_interval: float = 0.05
    integrator: str = "rk4"
    norm_renormalize: bool = True
    gamma_normalization: str = "coherent"
    snapshot_times: tuple = ()
    progress: bool = False

    def __post_init__(self):
        if not self.dt > 0:
            raise DomainError("dt must be strictly positive, got {0}".format(self.dt))
        if not self.sample_interval >= self.dt:
            raise DomainError("sample_interval ({0}) must be >= dt ({1})".format(self.sample_interval, self.dt))
        if self.integrator != "rk4":
            raise DomainError("unknown integrator {0}, only 'rk4' is available".format(self.integrator))
        if self.gamma_normalization not in NORMALIZATIONS:
            raise DomainError("unknown gamma_MI normalization {0}".format(self.gamma_normalization))
        self.snapshot_times = tuple(sorted(float(t) for t in self.snapshot_times))

@dataclass
class ObservableSeries:
    """ Observables sampled along a trajectory. All arrays have equal length, times strictly increase.

        ``snapshots`` maps sample time (ms) -> psi field (numpy), ``final_state`` is the state
        at the last time. Neither is written to the series CSV.
    """
    times: np.ndarray
    V: np.ndarray
    gamma_MI: np.ndarray
    condensate_fraction: np.ndarray
    total_N: np.ndarray
    energy: np.ndarray
    snapshots: dict = field(default_factory=dict, repr=False)
    final_state: object = field(default=None, repr=False, compare=False)

    COLUMNS = ("times", "V", "gamma_MI", "condensate_fraction", "total_N", "energy")

    def __post_init__(self):
        for name in self.COLUMNS:
            setattr(self, name, np.asarray(getattr(self, name), dtype=np.float64))
        lengths = {len(getattr(self, name)) for name in self.COLUMNS}
        if len(lengths) != 1:
            raise DomainError("series columns must have equal length, got {0}".format(sorted(lengths)))
        if np.any(np.diff(self.times) <= 0):
            raise DomainError("series times must be strictly increasing")

    def __len__(self):
        return len(self.times)

    def window(self, t_start, t_stop):
        """ Sub-series with t_start <= t <= t_stop. """
        m = (self.times >= t_start - TIME_EPS) & (self.times <= t_stop + TIME_EPS)
        return ObservableSeries(*(getattr(self, name)[m] for name in self.COLUMNS))

    def shifted(self, t0):
        """ Same series with times measured from t0. """
        return ObservableSeries(self.times - t0, self.V, self.gamma_MI, self.condensate_fraction, self.total_N, self.energy)

def derivative(state, params, mu_eff=None):
    """ df_i/dt = -i h_i f_i (natural units) with Phi recomputed from ``state``.

    Args:
        state (GutzwillerState): the state. Raw amplitude tensors carry no geometry and are rejected.
        params (HubbardParams): J, U, mu and trap curvature at the current time.
        mu_eff (torch.Tensor, optional): precomputed mu - c r^2.

    Returns:
        torch.Tensor: df/dt, shaped like ``state.amplitudes``.
    """
    if not isinstance(state, GutzwillerState):
        raise DomainError("derivative needs a GutzwillerState, got {0}".format(type(state).__name__))
    f, geometry = state.amplitudes, state.geometry
    if mu_eff is None:
        mu_eff = effective_mu(params, geometry, f.device)
    return _rhs(f, params.J, params.U, mu_eff, geometry)

def _rhs(f, J, U, mu_eff, geometry):
    Phi = neighbour_sum(order_parameter(f), geometry)
    return -1j * apply_local_hamiltonian(f, J, U, mu_eff, Phi)

def rk4_step(f, t, h, couplings, mu_eff, geometry):
    """ One RK4 step of size h (natural units) from time t, J and U re-evaluated at every stage.

    Args:
        f (torch.Tensor): amplitudes.
        t (float): current time.
        h (float): step.
        couplings (callable): t -> (J, U).
        mu_eff (torch.Tensor): mu - c r^2.
        geometry (LatticeGeometry): the lattice.
    """
    J, U = couplings(t)
    k1 = _rhs(f, J, U, mu_eff, geometry)
    J, U = couplings(t + h / 2)
    k2 = _rhs(f + (h / 2) * k1, J, U, mu_eff, geometry)
    k3 = _rhs(f + (h / 2) * k2, J, U, mu_eff, geometry)
    J, U = couplings(t + h)
    k4 = _rhs(f + h * k3, J, U, mu_eff, geometry)
    return f + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)

class _Sampler:

    def __init__(self, schedule, calibration, mu, options):
        self.schedule = schedule
        self.calibration = calibration
        self.mu = mu
        self.options = options
        self.rows = []
        self.snapshots = {}
        self.pending = list(options.snapshot_times)
        self.last = None

    def due(self, t_ms):
        if self.last is None:
            return True
        interval = self.schedule.sample_interval(t_ms - TIME_EPS, self.options.sample_interval)
        return t_ms - self.last >= interval - TIME_EPS

    def __call__(self, state, t_ms):
        V = self.schedule.V(t_ms)
        field = compute_order_parameter(state)
        params = HubbardParams(self.calibration.tunneling(V), self.calibration.interaction(V), self.mu, self.calibration.trap_curvature)
        g = gamma_mi(state, self.options.gamma_normalization, field=field)
        self.rows.append((t_ms, V, g, 1. - g, field.total_density, total_energy(state, params, field=field)))
        self.last = t_ms
        while self.pending and self.pending[0] <= t_ms + TIME_EPS:
            self.pending.pop(0)
            self.snapshots[t_ms] = tu.to_numpy(field.psi)

    def series(self, final_state):
        columns = np.array(self.rows).T
        return ObservableSeries(*columns, snapshots=self.snapshots, final_state=final_state)

def evolve(state, schedule, calibration, options=None, mu=0., snapshot_archive=None):
    """ Integrates ``state`` along ``schedule``.

    Args:
        state (GutzwillerState): normalised initial state.
        schedule (RampSchedule): V(t).
        calibration (Calibration): V -> J, U and trap curvature.
        options (EvolutionOptions, optional): integrator options.
        mu (float, optional): chemical potential, fixed during the evolution. Defaults to 0.
        snapshot_archive (SnapshotArchive, optional): psi snapshots are also written here.

    Returns:
        ObservableSeries: sampled at t = 0, every sample interval and at the end.

    Raises:
        IntegrationError: per-site norm drift above 1e-4 in a single step (or overall without renormalisation).
    """
    options = EvolutionOptions() if options is None else options
    drift = state.norm_drift()
    if drift > 1e-6:
        raise DomainError("initial state is not normalised, max |norm - 1| = {0:.3g}".format(drift))

    geometry = state.geometry
    f = state.amplitudes.clone()
    c = calibration.trap_curvature
    mu_eff = effective_mu(HubbardParams(1., 1., mu, c), geometry, f.device)
    rate = calibration.constants.recoil_rate # rad/ms

    def couplings(t):
        V = schedule.V(t / rate)
        return calibration.tunneling(V), calibration.interaction(V)

    sampler = _Sampler(schedule, calibration, mu, options)
    sampler(state, 0.)
    max_drift = 0.
    warned = False

    total_steps = sum(_n_steps(s.duration, options.dt) for s in schedule.segments)
    bar = tqdm(total=total_steps, disable=not options.progress, desc="evolve", leave=False)
    t_ms = 0.
    for segment, start in zip(schedule.segments, schedule.starts):
        n = _n_steps(segment.duration, options.dt)
        if n == 0:
            continue
        h_ms = segment.duration / n
        for i in range(n):
            t0 = start + i * h_ms
            f = rk4_step(f, t0 * rate, h_ms * rate, couplings, mu_eff, geometry)
            t_ms = start + (i + 1) * h_ms
            norms = (f.abs() ** 2).sum(-1)
            step_drift = (norms - 1.).abs().max().item()
            max_drift = max(max_drift, step_drift)
            if step_drift > DRIFT_ERROR:
                raise IntegrationError("per-site norm drift {0:.3g} at t = {1:.6g} ms exceeds {2:.0e}, reduce dt (currently {3:.3g} ms)".format(
                    step_drift, t_ms, DRIFT_ERROR, options.dt), drift=step_drift, time_ms=t_ms)
            if options.norm_renormalize:
                if step_drift > DRIFT_WARNING and not warned:
                    logger.warning("per-step norm drift %.3g at t = %.6g ms (renormalised)", step_drift, t_ms)
                    warned = True
                f = f / torch.sqrt(norms).unsqueeze(-1)
            bar.update(1)
            if sampler.due(t_ms):
                sampler(GutzwillerState(f, geometry, check=False), t_ms)
    bar.close()

    final = GutzwillerState(f, geometry, check=False)
    if sampler.last < t_ms - TIME_EPS:
        sampler(final, t_ms)
    logger.info("evolved %.6g ms in %d steps (%d samples), max per-step norm drift %.3g",
                schedule.total_duration, total_steps, len(sampler.rows), max_drift)
    series = sampler.series(final)
    if snapshot_archive is not None:
        for t, psi in series.snapshots.items():
            snapshot_archive.write(t, psi, V=schedule.V(t))
    return series

def _n_steps(duration, dt):
    if duration <= 0:
        return 0
    return max(1, int(math.ceil(duration / dt - 1e-9)))
