#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 17-10-2026 15:11:47

 Power-law fits y = a k^e and their Kibble-Zurek interpretation.

    response times  tau ~ k^{-nu z / (1 + nu z)}   =>  nu z = |e| / (1 - |e|)
    excitations     n_ex ~ k^{d nu / (1 + nu z)}   =>  nu z = d nu / e - 1
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.scaling")

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import curve_fit
from scipy.stats import linregress

from ..errors import DomainError, OutOfModelError, FitError

OUTLIER_THRESHOLD = 3.
CANDIDATES = ((0.5, 1.), (0.5, 2.)) # (nu, z)

@dataclass
class ScalingFit:
    exponent: float
    uncertainty: float
    prefactor: float
    k_range: tuple
    n_points: int
    weighted: bool = False
    outliers: list = field(default_factory=list)
    studentized_residuals: np.ndarray = field(default=None, repr=False)

    def __call__(self, k):
        return self.prefactor * np.asarray(k, dtype=np.float64) ** self.exponent

    def to_dict(self):
        return {"exponent" : self.exponent, "uncertainty" : self.uncertainty, "prefactor" : self.prefactor,
                "k_range" : list(self.k_range), "n_points" : self.n_points, "weighted" : self.weighted,
                "outliers" : list(self.outliers)}

def studentized_residuals(x, y, slope, intercept):
    """ Externally studentized residuals of a straight-line fit (nan when n < 4). """
    n = len(x)
    e = y - (intercept + slope * x)
    e[np.abs(e) < 1e-12 * max(1., np.abs(y).max())] = 0. # rounding noise
    if n < 4:
        return np.full(n, np.nan)
    xc = x - x.mean()
    h = 1. / n + xc ** 2 / (xc ** 2).sum()
    sse = (e ** 2).sum()
    with np.errstate(divide="ignore", invalid="ignore"):
        s2 = (sse - e ** 2 / (1. - h)) / (n - 3)
        return e / np.sqrt(np.clip(s2, 0., None) * (1. - h))

def fit_power_law(k, y, y_err=None, outlier_threshold=OUTLIER_THRESHOLD):
    """ Least squares fit of ln y = ln a + e ln k.

    Args:
        k (array): positive abscissae (ramp rates).
        y (array): positive values.
        y_err (array, optional): 1 sigma uncertainties of y, enables the weighted fit.
        outlier_threshold (float, optional): |externally studentized residual| above which a point is flagged.

    Returns:
        ScalingFit: exponent with its 1 sigma regression uncertainty.
    """
    k = np.asarray(k, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if k.shape != y.shape or k.ndim != 1:
        raise DomainError("k and y must be 1D arrays of equal length")
    if len(k) < 3:
        raise DomainError("a power-law fit needs at least 3 points, got {0}".format(len(k)))
    if np.any(~(y > 0)) or np.any(~(k > 0)):
        raise DomainError("power-law fits need strictly positive k and y")
    if len(np.unique(k)) < 2:
        raise DomainError("a power-law fit needs at least two distinct k")
    x, z = np.log(k), np.log(y)
    if y_err is None:
        r = linregress(x, z)
        slope, intercept, err = float(r.slope), float(r.intercept), float(r.stderr)
        weighted = False
    else:
        sigma = np.asarray(y_err, dtype=np.float64) / y
        if np.any(~(sigma > 0)):
            raise DomainError("y uncertainties must be strictly positive")
        try:
            popt, pcov = curve_fit(lambda x, b, a: a + b * x, x, z, p0=[0., z.mean()], sigma=sigma, absolute_sigma=True)
        except RuntimeError as e:
            raise FitError("weighted power-law fit failed: {0}".format(e))
        slope, intercept, err = float(popt[0]), float(popt[1]), float(np.sqrt(pcov[0, 0]))
        weighted = True
    t = studentized_residuals(x, z, slope, intercept)
    outliers = [int(i) for i in np.flatnonzero(np.abs(t) > outlier_threshold)]
    if outliers:
        logger.warning("power-law fit: points %s have studentized residuals > %.3g", outliers, outlier_threshold)
    fit = ScalingFit(slope, max(err, 0.), float(np.exp(intercept)), (float(k.min()), float(k.max())), len(k), weighted, outliers, t)
    logger.info("power-law fit over k in [%.4g, %.4g]: exponent %.4f +- %.4f", k.min(), k.max(), fit.exponent, fit.uncertainty)
    return fit

@dataclass
class CriticalParameters:
    nu_z: float
    uncertainty: float
    relation: str
    exponent: float
    nu: float = None
    d: int = None
    candidates: list = field(default_factory=list)
    selected: tuple = None

    def to_dict(self):
        return {"nu_z" : self.nu_z, "nu_z_uncertainty" : self.uncertainty, "relation" : self.relation,
                "exponent" : self.exponent, "nu" : self.nu, "d" : self.d,
                "candidates" : self.candidates, "selected" : None if self.selected is None else list(self.selected)}

def nu_z_from_tau(e, de=0.):
    """ nu z from the exponent of a response time tau ~ k^e, e in (-1, 0]. """
    if not -1. < e <= 0.:
        raise OutOfModelError("tau exponent {0} outside (-1, 0]: tau ~ k^(-nu z/(1 + nu z)) has no solution".format(e))
    a = abs(e)
    return CriticalParameters(a / (1. - a), abs(de) / (1. - a) ** 2, "tau", e)

def tau_exponent(nu_z):
    """ Inverse of ``nu_z_from_tau``: e = -nu z / (1 + nu z). """
    if nu_z < 0:
        raise OutOfModelError("nu z must be >= 0, got {0}".format(nu_z))
    return -nu_z / (1. + nu_z)

def nex_exponent(nu, z, d=3):
    """ Predicted n_ex exponent d nu / (1 + nu z). """
    return d * nu / (1. + nu * z)

def nu_z_from_nex(e, d=3, nu=0.5, de=0., candidates=CANDIDATES):
    """ nu z = d nu / e - 1 from the exponent of n_ex ~ k^e for an assumed nu, and the
        (nu, z) candidate whose predicted exponent is closest to e.
    """
    if not e > 0 or not nu > 0 or not d * nu > e:
        raise OutOfModelError("n_ex exponent {0} is outside the relation's domain for d={1}, nu={2} (need 0 < e < d nu)".format(e, d, nu))
    table = [{"nu" : n, "z" : z, "nu_z" : n * z, "predicted_exponent" : nex_exponent(n, z, d)} for n, z in candidates]
    best = min(table, key=lambda c: abs(c["predicted_exponent"] - e)) if table else None
    return CriticalParameters(d * nu / e - 1., d * nu * abs(de) / e ** 2, "n_ex", e, nu, d, table,
                              None if best is None else (best["nu"], best["z"]))
