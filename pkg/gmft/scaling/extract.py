#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 17-10-2026 14:02:10

 Critical-dynamics observables extracted from (smoothed) gamma_MI traces:

    tau_sf                 time from the ramp start until gamma_MI = 0.6
    tau_mi                 delay from gamma_MI = 0.6 (or V = V_c) until gamma_MI = cut, averaged over cuts
    excitation_fraction    n_ex(k) = < gamma_ref(V) - gamma_k(V) > over a V window
    oscillation_amplitude  A cos(B t + C) + D fitted over the first 1.2 ms of the hold
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.scaling")

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import least_squares

from ..errors import DomainError, ExtractionError, FitError
from .smooth import SmoothedTrace, smooth_samples

SF_THRESHOLD = 0.6
MI_START = 0.6
MI_CUT = (0.9,)
MI_CUT_BAND = tuple(np.linspace(0.85, 0.95, 11))
V_CRITICAL = 13.
NEX_WINDOW = (18., 20.)
OSCILLATION_WINDOW = 1.2 # ms
MIN_OSCILLATION_SAMPLES = 8

def _require_time_axis(trace):
    if trace.axis != "t":
        raise DomainError("expected a trace on the time axis, got axis '{0}'".format(trace.axis))

def tau_sf(trace, threshold=SF_THRESHOLD):
    """ Earliest time (ms since the ramp start) at which the smoothed gamma_MI reaches ``threshold``. """
    _require_time_axis(trace)
    t = trace.crossing(threshold)
    if t is None:
        raise ExtractionError("trace (k={0}) never reaches gamma_MI = {1}".format(trace.k, threshold))
    return t

def tau_mi_delays(trace, start_ref="gamma", end_cuts=MI_CUT, start_gamma=MI_START, V_c=V_CRITICAL):
    """ Delay (ms) from the start reference to each end cut.

    Args:
        trace (SmoothedTrace): time-axis trace.
        start_ref (str, optional): 'gamma' (crossing of start_gamma) or 'V' (time at which V = V_c).
        end_cuts (sequence, optional): gamma_MI levels. Defaults to (0.9,).
    """
    _require_time_axis(trace)
    if start_ref == "gamma":
        t0 = trace.crossing(start_gamma)
        if t0 is None:
            raise ExtractionError("trace (k={0}) never reaches the start cut gamma_MI = {1}".format(trace.k, start_gamma))
    elif start_ref == "V":
        t0 = trace.time_at_depth(V_c)
        if t0 is None:
            raise ExtractionError("trace (k={0}) does not reach V_c = {1} E_r".format(trace.k, V_c))
    else:
        raise DomainError("start_ref must be 'gamma' or 'V', got {0}".format(start_ref))
    delays = []
    for cut in end_cuts:
        t1 = trace.crossing(cut, lower=t0)
        if t1 is None:
            raise ExtractionError("trace (k={0}) never reaches the end cut gamma_MI = {1:.4g}".format(trace.k, cut))
        delays.append(t1 - t0)
    return np.array(delays)

def tau_mi(trace, start_ref="gamma", end_cuts=MI_CUT, start_gamma=MI_START, V_c=V_CRITICAL):
    """ Mean over ``end_cuts`` of the delays from ``tau_mi_delays``. """
    return float(tau_mi_delays(trace, start_ref, end_cuts, start_gamma, V_c).mean())

def reference_trace(V, gamma_MI, smoother="cubic_spline"):
    """ Depth-axis trace of a quasi-static (ground state) gamma_MI(V) sweep. """
    return smooth_samples(V, gamma_MI, V, axis="V", smoother=smoother)

def excitation_fraction(traces, reference="ground_state", V_window=NEX_WINDOW, n_points=41):
    """ n_ex(k) = mean over V_window of gamma_ref(V) - gamma_k(V).

    Args:
        traces (dict): k -> SmoothedTrace on the 'V' axis.
        reference (SmoothedTrace or str): a depth-axis reference trace, or 'slowest' for the smallest k.
        V_window (tuple, optional): E_r. Defaults to (18, 20).

    Returns:
        dict: k -> n_ex.
    """
    if not traces:
        raise DomainError("no traces given")
    if isinstance(reference, str):
        if reference != "slowest":
            raise DomainError("reference must be a trace or 'slowest', got {0}".format(reference))
        reference = traces[min(traces)]
    lo, hi = V_window
    if not hi > lo:
        raise DomainError("V window must have V_hi > V_lo, got {0}".format(V_window))
    if not reference.covers(lo, hi):
        raise ExtractionError("reference trace {0} does not cover the V window [{1}, {2}]".format(reference.domain, lo, hi))
    V = np.linspace(lo, hi, n_points)
    ref = np.asarray(reference(V))
    result = {}
    for k, trace in sorted(traces.items()):
        if trace.axis != "V":
            raise DomainError("excitation_fraction needs depth-axis traces, k={0} has axis '{1}'".format(k, trace.axis))
        if not trace.covers(lo, hi):
            raise ExtractionError("trace k={0} {1} does not cover the V window [{2}, {3}]".format(k, trace.domain, lo, hi))
        result[k] = float(np.mean(ref - np.asarray(trace(V))))
    return result

@dataclass
class OscillationFit:
    """ gamma_MI(t) = A cos(B t + C) + D, t in ms since the hold start, B in rad/ms. """
    A: float
    B: float
    C: float
    D: float
    uncertainties: dict = field(default_factory=dict)
    residual: float = 0.
    mode: str = "cosine"

    def __call__(self, t):
        return self.A * np.cos(self.B * np.asarray(t) + self.C) + self.D

    def to_dict(self):
        return {"A" : self.A, "B" : self.B, "C" : self.C, "D" : self.D, "mode" : self.mode,
                "uncertainties" : dict(self.uncertainties), "residual" : self.residual}

def _cosine_residual(p, t, y):
    A, B, C, D = p
    return A * np.cos(B * t + C) + D - y

def fit_cosine(t, y, B0, A0=None, D0=None, phases=(0., 0.5 * math.pi, math.pi, 1.5 * math.pi), max_nfev=None):
    """ Multi-start damped least squares fit of A cos(B t + C) + D.

        Raises FitError when no start converges (within ``max_nfev`` evaluations), carrying
        the rms residual of the best unconverged attempt.
    """
    t = np.asarray(t, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = len(t)
    if n < MIN_OSCILLATION_SAMPLES:
        raise ExtractionError("cosine fit needs at least {0} samples in the window, got {1}".format(MIN_OSCILLATION_SAMPLES, n))
    A0 = 0.5 * (y.max() - y.min()) if A0 is None else A0
    D0 = y.mean() if D0 is None else D0
    best, closest = None, None
    for C0 in phases:
        try:
            r = least_squares(_cosine_residual, [A0, B0, C0, D0], args=(t, y), method="lm", xtol=1e-14, ftol=1e-14, gtol=1e-14,
                              max_nfev=max_nfev)
        except ValueError as e:
            logger.debug("cosine fit start C0=%.3g failed: %s", C0, e)
            continue
        if closest is None or r.cost < closest.cost:
            closest = r
        if r.status > 0 and (best is None or r.cost < best.cost):
            best = r
    if best is None:
        residual = float("nan") if closest is None else math.sqrt(2. * closest.cost / n)
        raise FitError("cosine fit did not converge from any of the starting phases {0}, best rms {1:.3g}".format(phases, residual),
                       residual=residual)
    A, B, C, D = best.x
    if A < 0:
        A, C = -A, C + math.pi
    C = C % (2 * math.pi)
    dof = max(n - 4, 1)
    s2 = 2. * best.cost / dof
    cov = np.linalg.pinv(best.jac.T @ best.jac) * s2
    err = np.sqrt(np.clip(np.diag(cov), 0., None))
    rms = math.sqrt(2. * best.cost / n)
    return OscillationFit(A, B, C, D, dict(zip("ABCD", map(float, err))), rms, "cosine")

def peak_to_peak(t, y):
    """ Half the peak-to-peak excursion, for ramps too fast for a clean cosine fit. """
    y = np.asarray(y, dtype=np.float64)
    if len(y) < 2:
        raise ExtractionError("peak-to-peak amplitude needs at least two samples")
    nan = float("nan")
    return OscillationFit(0.5 * float(y.max() - y.min()), nan, nan, 0.5 * float(y.max() + y.min()),
                          {"A" : nan, "B" : nan, "C" : nan, "D" : nan}, 0., "peak_to_peak")

def oscillation_amplitude(series, hold_start=0., window=OSCILLATION_WINDOW, B0=None, U_hold=None, recoil_rate=4 * math.pi, mode="cosine"):
    """ Fits the first ``window`` ms of the hold of an oscillation run.

    Args:
        series (ObservableSeries): the run.
        hold_start (float, optional): ms at which the hold begins.
        window (float, optional): ms. Defaults to 1.2.
        B0 (float, optional): initial angular frequency (rad/ms).
        U_hold (float, optional): U at the hold depth (E_r); B0 = U_hold x recoil_rate when B0 is not given.
        recoil_rate (float, optional): E_r / hbar in rad/ms. Defaults to 4 pi.
        mode (str, optional): 'cosine' or 'peak_to_peak'.

    Returns:
        OscillationFit
    """
    m = (series.times >= hold_start - 1e-9) & (series.times <= hold_start + window + 1e-9)
    t, y = series.times[m] - hold_start, series.gamma_MI[m]
    if mode == "peak_to_peak":
        return peak_to_peak(t, y)
    if mode != "cosine":
        raise DomainError("mode must be 'cosine' or 'peak_to_peak', got {0}".format(mode))
    if B0 is None:
        if U_hold is None:
            raise DomainError("either B0 or U_hold is required to seed the oscillation frequency")
        B0 = U_hold * recoil_rate
    fit = fit_cosine(t, y, B0)
    logger.info("oscillation fit: A=%.4g B=%.4g rad/ms (seed %.4g) C=%.4g D=%.4g, rms %.3g", fit.A, fit.B, B0, fit.C, fit.D, fit.residual)
    return fit
