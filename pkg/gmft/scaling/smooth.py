#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 17-10-2026 13:20:55

 Smoothing of gamma_MI traces. Slow ramps (k <= 4 E_r/ms by default) are fitted with a
 6th order polynomial, faster ones are interpolated with a natural cubic spline.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.scaling")

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial, polynomial
from scipy.interpolate import CubicSpline, PchipInterpolator
from scipy.optimize import brentq

from ..errors import DomainError

SMOOTHERS = ("auto", "poly6", "cubic_spline", "pchip", "linear")
AXES = ("t", "V")
MIN_SAMPLES = 10
POLY_THRESHOLD = 4. # E_r/ms
CONDITION_LIMIT = 1e10
SCAN_POINTS = 4097

@dataclass
class SmoothedTrace:
    """ A smooth model y(x) of gamma_MI against time since the ramp start (axis 't', ms) or depth (axis 'V', E_r).

        ``V`` holds the depth at each sample so time and depth can be related.
    """
    x: np.ndarray
    y: np.ndarray
    V: np.ndarray
    axis: str
    smoother: str
    k: float = None
    coefficients: np.ndarray = None
    residual_rms: float = 0.
    model: object = field(default=None, repr=False, compare=False)

    def __call__(self, x):
        return self.model(x)

    @property
    def domain(self):
        return float(self.x[0]), float(self.x[-1])

    def covers(self, lo, hi):
        a, b = self.domain
        return a <= lo + 1e-12 and hi <= b + 1e-12

    def crossing(self, level, lower=None):
        """ Earliest x >= lower at which the smoothed trace reaches ``level`` (None if never).
            Returns ``lower`` if the trace already starts at or above the level.
        """
        a, b = self.domain
        a = a if lower is None else max(a, lower)
        if a >= b:
            return None
        xs = np.linspace(a, b, SCAN_POINTS)
        ys = np.asarray(self(xs)) - level
        if ys[0] >= 0:
            return float(a)
        above = np.flatnonzero(ys >= 0)
        if len(above) == 0:
            return None
        i = above[0]
        if ys[i] == 0:
            return float(xs[i])
        return float(brentq(lambda x: float(self(x)) - level, xs[i - 1], xs[i], xtol=1e-14, rtol=1e-14))

    def time_at_depth(self, V):
        """ Time (trace axis 't') at which the depth reaches V, by linear interpolation of the samples. """
        if self.axis != "t":
            raise DomainError("time_at_depth needs a trace on the 't' axis")
        if V < self.V[0] or V > self.V[-1]:
            return None
        return float(np.interp(V, self.V, self.x))

def _poly(x, y, degree):
    p = Polynomial.fit(x, y, degree)
    mapped = p.mapparms()[0] + p.mapparms()[1] * x
    cond = np.linalg.cond(polynomial.polyvander(mapped, degree))
    return p, cond

def smooth_samples(x, y, V=None, axis="t", k=None, smoother="auto", poly_threshold=POLY_THRESHOLD, degree=6):
    """ SmoothedTrace from raw samples (x strictly increasing). """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    V = x if V is None else np.asarray(V, dtype=np.float64)
    if smoother not in SMOOTHERS:
        raise DomainError("unknown smoother {0}, expected one of {1}".format(smoother, SMOOTHERS))
    if axis not in AXES:
        raise DomainError("unknown trace axis {0}, expected one of {1}".format(axis, AXES))
    if len(x) < MIN_SAMPLES:
        raise DomainError("smoothing needs at least {0} samples, got {1}".format(MIN_SAMPLES, len(x)))
    if np.any(np.diff(x) <= 0):
        raise DomainError("trace samples must be strictly increasing along the {0} axis".format(axis))
    if smoother == "auto":
        smoother = "poly6" if k is not None and k <= poly_threshold else "cubic_spline"

    if smoother == "poly6":
        p, cond = _poly(x, y, degree) if len(x) > degree else (None, np.inf)
        if cond > CONDITION_LIMIT:
            logger.warning("polynomial fit ill-conditioned (cond=%.3g) for k=%s, falling back to a cubic spline", cond, k)
            smoother = "cubic_spline"
        else:
            rms = float(np.sqrt(np.mean((p(x) - y) ** 2)))
            logger.debug("poly%d fit for k=%s: residual rms %.3g", degree, k, rms)
            return SmoothedTrace(x, y, V, axis, "poly6", k, p.convert().coef, rms, p)
    if smoother == "cubic_spline":
        model = CubicSpline(x, y, bc_type="natural")
        return SmoothedTrace(x, y, V, axis, smoother, k, model.c, 0., model)
    if smoother == "pchip":
        model = PchipInterpolator(x, y)
        return SmoothedTrace(x, y, V, axis, smoother, k, model.c, 0., model)
    return SmoothedTrace(x, y, V, axis, "linear", k, None, 0., lambda t: np.interp(t, x, y))

def smooth_trace(series, k=None, axis="t", ramp_start=0., ramp_end=None, smoother="auto", poly_threshold=POLY_THRESHOLD):
    """ Smooths the ramp part (ramp_start <= t <= ramp_end) of an ObservableSeries.

    Args:
        series (ObservableSeries): the sampled trajectory.
        k (float, optional): ramp rate, selects the smoother when ``smoother='auto'``.
        axis (str, optional): 't' (time since ramp_start) or 'V'.
        ramp_start (float, optional): ms. Defaults to 0.
        ramp_end (float, optional): ms. Defaults to the end of the series.
        smoother (str, optional): 'auto', 'poly6', 'cubic_spline', 'pchip' or 'linear'.
        poly_threshold (float, optional): largest k fitted with the polynomial. Defaults to 4.

    Returns:
        SmoothedTrace
    """
    t_end = series.times[-1] if ramp_end is None else ramp_end
    m = (series.times >= ramp_start - 1e-9) & (series.times <= t_end + 1e-9)
    t, V, y = series.times[m] - ramp_start, series.V[m], series.gamma_MI[m]
    if axis == "V":
        keep = np.concatenate([[True], np.diff(V) > 0])
        if not np.all(keep):
            logger.debug("dropping %d samples with non-increasing V", np.count_nonzero(~keep))
        t, V, y = t[keep], V[keep], y[keep]
        return smooth_samples(V, y, V, "V", k, smoother, poly_threshold)
    return smooth_samples(t, y, V, "t", k, smoother, poly_threshold)
