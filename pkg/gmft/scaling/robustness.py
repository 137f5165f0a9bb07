#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 18-10-2026 10:12:03

 Exponents over a family of runs, and how they move with the analysis choices
 (end cut for tau_MI, V window centre for n_ex).
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.scaling")

import numpy as np

from ..errors import DomainError, ExtractionError
from .extract import tau_mi_delays, excitation_fraction, MI_CUT, MI_START, V_CRITICAL
from .fit import fit_power_law, ScalingFit

def _sorted(traces):
    if not traces:
        raise DomainError("no traces given")
    ks = np.array(sorted(traces), dtype=np.float64)
    return ks, [traces[k] for k in sorted(traces)]

def tau_mi_scaling(traces, end_cuts=MI_CUT, start_ref="gamma", mode="delay", start_gamma=MI_START, V_c=V_CRITICAL):
    """ tau_MI exponent over a family of time-axis traces.

    Args:
        traces (dict): k -> SmoothedTrace on the 't' axis.
        end_cuts (sequence): gamma_MI end cuts.
        mode (str, optional): 'delay' averages delays over cuts and fits once, 'exponent'
            fits every cut and averages the exponents (uncertainty: mean of per-cut uncertainties).

    Returns:
        (ScalingFit, dict): the fit and k -> mean delay.
    """
    ks, family = _sorted(traces)
    delays = np.array([tau_mi_delays(t, start_ref, end_cuts, start_gamma, V_c) for t in family]) # (n_k, n_cuts)
    mean_delay = dict(zip(ks.tolist(), delays.mean(1).tolist()))
    if mode == "delay":
        return fit_power_law(ks, delays.mean(1)), mean_delay
    if mode != "exponent":
        raise DomainError("mode must be 'delay' or 'exponent', got {0}".format(mode))
    fits = [fit_power_law(ks, delays[:, j]) for j in range(delays.shape[1])]
    e = float(np.mean([f.exponent for f in fits]))
    de = float(np.mean([f.uncertainty for f in fits]))
    a = float(np.exp(np.mean([np.log(f.prefactor) for f in fits])))
    return ScalingFit(e, de, a, fits[0].k_range, len(ks)), mean_delay

def tau_mi_cut_scan(traces, cuts, start_ref="gamma", start_gamma=MI_START, V_c=V_CRITICAL):
    """ tau_MI exponent for each single end cut. Cuts without crossings in every trace give nan. """
    ks, family = _sorted(traces)
    exponents, errors = [], []
    for cut in cuts:
        try:
            delays = [tau_mi_delays(t, start_ref, (cut,), start_gamma, V_c)[0] for t in family]
            fit = fit_power_law(ks, delays)
            exponents.append(fit.exponent)
            errors.append(fit.uncertainty)
        except (ExtractionError, DomainError) as e:
            logger.warning("cut scan: gamma_MI = %.4g skipped (%s)", cut, e)
            exponents.append(np.nan)
            errors.append(np.nan)
    return np.asarray(cuts, dtype=np.float64), np.array(exponents), np.array(errors)

def nex_window_scan(traces, reference, centers, width=2.):
    """ n_ex exponent for V windows [c - width/2, c + width/2]. """
    exponents, errors = [], []
    for c in centers:
        try:
            nex = excitation_fraction(traces, reference, (c - width / 2., c + width / 2.))
            ks = [k for k in sorted(nex) if nex[k] > 0]
            fit = fit_power_law(ks, [nex[k] for k in ks])
            exponents.append(fit.exponent)
            errors.append(fit.uncertainty)
        except (ExtractionError, DomainError) as e:
            logger.warning("window scan: centre V = %.4g skipped (%s)", c, e)
            exponents.append(np.nan)
            errors.append(np.nan)
    return np.asarray(centers, dtype=np.float64), np.array(exponents), np.array(errors)
