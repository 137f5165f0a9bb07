#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 15:02:19

 Experimental protocols: prepare the V0 = 5 E_r ground state at fixed atom number, then

    phase transition : hold, then ramp linearly at rate k to V_stop
    oscillation      : ramp 5 -> 25 E_r at rate k, then hold at 25 E_r (dense sampling)

 and the equilibrium (ground-state) gamma_MI(V) sweep used as the excitation reference.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.dynamics")

from dataclasses import dataclass, field, replace

import numpy as np
from tqdm import tqdm

from ..errors import DomainError
from ..model import Calibration, LatticeGeometry
from ..gutzwiller import ground_state, target_atom_number, compute_order_parameter, total_energy
from ..observables import gamma_mi
from .schedule import RampSchedule, Segment
from .evolve import EvolutionOptions, evolve

V_INITIAL = 5.
V_HOLD = 25.
INITIAL_HOLD = 20. # ms
HOLD_SAMPLE_INTERVAL = 0.02 # ms

@dataclass
class ProtocolSetup:
    """ Configuration shared by every run of a campaign.

    Args:
        calibration (Calibration): V -> J, U, trap curvature.
        geometry (LatticeGeometry): the lattice.
        n_max (int): Fock truncation.
        atom_number (float, optional): target N at V0 (mu is found by bisection).
        mu (float, optional): fixed chemical potential, used when atom_number is None.
        V0 (float): initial depth. Defaults to 5 E_r.
        initial_hold (float): ms held at V0 before the ramp. Defaults to 20.
        options (EvolutionOptions): integrator options.
        solver_options (dict): passed to the ground state solver.
    """
    calibration: Calibration = field(default_factory=Calibration)
    geometry: LatticeGeometry = field(default_factory=lambda: LatticeGeometry(21))
    n_max: int = 7
    atom_number: float = None
    mu: float = None
    V0: float = V_INITIAL
    initial_hold: float = INITIAL_HOLD
    options: EvolutionOptions = field(default_factory=EvolutionOptions)
    solver_options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.atom_number is None and self.mu is None:
            raise DomainError("either atom_number or mu must be given")
        self._initial = None

    def equilibrium(self, V):
        """ (mu, ground state) at depth V, at fixed atom number when one is configured. """
        if self.atom_number is not None:
            params = self.calibration.params(V)
            return target_atom_number(params, self.atom_number, self.geometry, n_max=self.n_max, **self.solver_options)
        state = ground_state(self.calibration.params(V, self.mu), self.geometry, n_max=self.n_max, **self.solver_options)
        return self.mu, state

    def set_initial(self, mu, state):
        """ Use a previously computed V0 ground state. """
        if state.geometry != self.geometry or state.n_max != self.n_max:
            raise DomainError("initial state {0} does not match the configured lattice".format(state))
        self._initial = (mu, state)

    def initial_state(self):
        """ Cached (mu, state) at V0. """
        if self._initial is None:
            self._initial = self.equilibrium(self.V0)
            mu, state = self._initial
            logger.info("initial state at V0=%.4g E_r: mu=%.8g, N=%.6g, gamma_MI=%.4f", self.V0, mu,
                        compute_order_parameter(state).total_density, gamma_mi(state, self.options.gamma_normalization))
        return self._initial

def phase_transition_schedule(k, V_stop, V0=V_INITIAL, initial_hold=INITIAL_HOLD):
    if not k > 0:
        raise DomainError("ramp rate k must be strictly positive, got {0}".format(k))
    if V_stop < V0:
        raise DomainError("V_stop ({0}) must be >= V0 ({1})".format(V_stop, V0))
    return RampSchedule([Segment(initial_hold, V0, V0, "hold"), Segment((V_stop - V0) / k, V0, V_stop, "linear")])

def oscillation_schedule(k, hold_time, V0=V_INITIAL, V_hold=V_HOLD, hold_sample_interval=HOLD_SAMPLE_INTERVAL):
    if not k > 0:
        raise DomainError("ramp rate k must be strictly positive, got {0}".format(k))
    if not hold_time >= 0:
        raise DomainError("hold_time must be >= 0, got {0}".format(hold_time))
    return RampSchedule.linear_ramp(V0, V_hold, k, hold_after=hold_time, hold_sample_interval=hold_sample_interval)

def protocol_phase_transition(k, V_stop, setup, snapshot_archive=None):
    """ Hold the V0 ground state for ``initial_hold`` ms, then ramp at k (E_r/ms) to V_stop. """
    schedule = phase_transition_schedule(k, V_stop, setup.V0, setup.initial_hold)
    mu, state = setup.initial_state()
    logger.info("phase transition run: k=%.4g E_r/ms, V_stop=%.4g E_r, %s", k, V_stop, schedule)
    return evolve(state, schedule, setup.calibration, setup.options, mu=mu, snapshot_archive=snapshot_archive)

def protocol_oscillation(k, hold_time, setup, V_hold=V_HOLD, snapshot_archive=None):
    """ Ramp V0 -> V_hold at k (E_r/ms), then hold for hold_time ms sampled every <= 0.02 ms. """
    interval = min(HOLD_SAMPLE_INTERVAL, setup.options.sample_interval)
    options = setup.options
    if interval < options.dt:
        options = replace(options, dt=interval)
    schedule = oscillation_schedule(k, hold_time, setup.V0, V_hold, interval)
    mu, state = setup.initial_state()
    logger.info("oscillation run: k=%.4g E_r/ms, hold %.4g ms at %.4g E_r", k, hold_time, V_hold)
    return evolve(state, schedule, setup.calibration, options, mu=mu, snapshot_archive=snapshot_archive)

@dataclass
class EquilibriumSweep:
    V: np.ndarray
    gamma_MI: np.ndarray
    mu: np.ndarray
    total_N: np.ndarray
    energy: np.ndarray

def equilibrium_sweep(setup, V_values, progress=False):
    """ Ground-state gamma_MI(V) (at fixed N when configured). """
    rows = []
    for V in tqdm(V_values, disable=not progress, desc="ground states", leave=False):
        mu, state = setup.equilibrium(V)
        field = compute_order_parameter(state)
        params = setup.calibration.params(V, mu)
        g = gamma_mi(state, setup.options.gamma_normalization, field=field)
        rows.append((V, g, mu, field.total_density, total_energy(state, params, field=field)))
        logger.debug("ground state V=%.4g: gamma_MI=%.5f mu=%.6g", V, g, mu)
    return EquilibriumSweep(*(np.array(c, dtype=np.float64) for c in zip(*rows)))
