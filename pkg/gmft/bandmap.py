#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 17-10-2026 09:14:02

 Band-mapping analysis: 2D quasi-momentum profile -> gamma_MI.

    integrate_profile       n(q_x) = int n(q_x, q_y) dq_y
    remove_background       n(|q_x| > pi) shifted to zero mean
    centralize_symmetrize   centre of mass moved to q = 0, then (n(q) + n(-q)) / 2
    estimate_gamma          plateau = <n> on pi_in <= |q| <= pi, everything above it is superfluid

 Areas over |q| <= pi weight each sample by the overlap of its cell with [-pi, pi].
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.bandmap")

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ProfileFormatError
from .observables import QuasiMomentumProfile

PLATEAU_WINDOW = 0.9 # inner edge of the plateau window, fraction of pi

@dataclass
class LineProfile:
    q: np.ndarray
    n: np.ndarray
    center_shift: float = 0.

    def __post_init__(self):
        self.q = np.asarray(self.q, dtype=np.float64)
        self.n = np.asarray(self.n, dtype=np.float64)
        if self.q.ndim != 1 or self.q.shape != self.n.shape or len(self.q) < 2:
            raise DomainError("line profile needs equal length 1D q and n with at least two samples")
        if np.any(np.diff(self.q) <= 0):
            raise DomainError("line profile q must be strictly increasing")

    def edges(self):
        """ Cell edges: midpoints between samples, half a spacing beyond the end samples. """
        mid = 0.5 * (self.q[1:] + self.q[:-1])
        return np.concatenate([[2 * self.q[0] - mid[0]], mid, [2 * self.q[-1] - mid[-1]]])

    def zone_weights(self, cutoff=math.pi):
        """ Length of each sample's cell inside [-cutoff, cutoff]. """
        e = self.edges()
        return np.clip(np.minimum(e[1:], cutoff) - np.maximum(e[:-1], -cutoff), 0., None)

    def is_symmetric(self):
        return np.allclose(self.q, -self.q[::-1], rtol=0., atol=1e-12 * max(1., np.abs(self.q).max()))

@dataclass
class GammaEstimate:
    gamma_MI: float
    A_SF: float
    A_tot: float
    diagnostics: dict = field(default_factory=dict)

    def to_dict(self):
        return {"gamma" : self.gamma_MI, "A_SF" : self.A_SF, "A_tot" : self.A_tot, "diagnostics" : dict(self.diagnostics)}

def integrate_profile(profile):
    """ Sums the grid along q_y (rows), times the q spacing. """
    if not isinstance(profile, QuasiMomentumProfile):
        raise ProfileFormatError("expected a QuasiMomentumProfile, got {0}".format(type(profile).__name__))
    if not np.all(np.isfinite(profile.grid)):
        raise ProfileFormatError("profile grid contains non-finite values")
    return LineProfile(profile.q, profile.grid.sum(axis=0) * profile.dq)

def remove_background(p, cutoff=math.pi):
    outside = np.abs(p.q) > cutoff
    if not np.any(outside):
        raise DomainError("profile has no samples with |q| > {0:.4g}, the background cannot be estimated".format(cutoff))
    return LineProfile(p.q, p.n - p.n[outside].mean(), p.center_shift)

def centralize_symmetrize(p, cutoff=math.pi):
    """ Moves the centre of mass (over |q| <= cutoff) to q = 0 by linear interpolation,
        then averages the profile with its mirror image.
    """
    w = p.zone_weights(cutoff) * p.n
    total = w.sum()
    if not total > 0:
        raise DomainError("profile has non-positive weight {0:.4g} inside |q| <= {1:.4g}".format(total, cutoff))
    com = float((w * p.q).sum() / total)
    n = np.interp(p.q + com, p.q, p.n, left=0., right=0.)
    if p.is_symmetric():
        n = 0.5 * (n + n[::-1])
    else:
        n = 0.5 * (n + np.interp(-p.q, p.q, n, left=0., right=0.))
    return LineProfile(p.q, n, p.center_shift + com)

def estimate_gamma(p, plateau_window=PLATEAU_WINDOW, cutoff=math.pi):
    """ gamma_MI = 1 - A_SF / A_tot for a processed (background free, centred, symmetric) profile.

    Args:
        p (LineProfile): processed profile.
        plateau_window (float, optional): the plateau height is the mean of n over
            plateau_window x pi <= |q| <= pi. Defaults to 0.9.
        cutoff (float, optional): zone edge. Defaults to pi.
    """
    if not 0 <= plateau_window < 1:
        raise DomainError("plateau_window must lie in [0, 1), got {0}".format(plateau_window))
    aq = np.abs(p.q)
    window = (aq >= plateau_window * cutoff) & (aq <= cutoff)
    if not np.any(window):
        raise DomainError("no samples in the plateau window [{0:.4g}, {1:.4g}]".format(plateau_window * cutoff, cutoff))
    height = float(p.n[window].mean())
    w = p.zone_weights(cutoff)
    A_tot = float((w * p.n).sum())
    if not A_tot > 0:
        raise DomainError("total area {0:.4g} must be positive".format(A_tot))
    A_SF = float((w * np.clip(p.n - height, 0., None)).sum())
    if A_SF > A_tot:
        logger.warning("A_SF = %.4g exceeds A_tot = %.4g (negative plateau %.3g), clamped", A_SF, A_tot, height)
        A_SF = A_tot
    return GammaEstimate(1. - A_SF / A_tot, A_SF, A_tot, {"plateau_height" : height, "center_shift" : p.center_shift})

def analyze_line(line, plateau_window=PLATEAU_WINDOW):
    return estimate_gamma(centralize_symmetrize(remove_background(line)), plateau_window)

def analyze(profile, plateau_window=PLATEAU_WINDOW):
    """ The full pipeline on a 2D profile. """
    return analyze_line(integrate_profile(profile), plateau_window)

def average_profiles(profiles):
    """ Pixelwise mean of profiles sharing one grid. """
    first = profiles[0]
    for p in profiles[1:]:
        if p.grid.shape != first.grid.shape or p.grid_size != first.grid_size or p.q_range != first.q_range:
            raise DomainError("profiles on different grids cannot be averaged")
    grid = np.mean([p.grid for p in profiles], axis=0)
    return QuasiMomentumProfile(grid, first.grid_size, float(np.mean([p.normalization for p in profiles])), first.q_range)

@dataclass
class GroupedGamma:
    mean: float
    std: float
    values: np.ndarray

    def to_dict(self):
        return {"gamma_mean" : self.mean, "gamma_std" : self.std, "group_gammas" : [float(v) for v in self.values]}

def grouped_statistics(samples, group_size=3, n_groups=6, plateau_window=PLATEAU_WINDOW):
    """ Averages consecutive groups of ``group_size`` profiles, runs the pipeline on each
        average and returns the mean and sample standard deviation (ddof=1) of the n_groups values.
        A single group has std 0.
    """
    samples = list(samples)
    if group_size < 1 or n_groups < 1 or len(samples) != group_size * n_groups:
        raise DomainError("expected {0} x {1} = {2} profiles, got {3}".format(group_size, n_groups, group_size * n_groups, len(samples)))
    values = np.array([analyze(average_profiles(samples[i * group_size:(i + 1) * group_size]), plateau_window).gamma_MI
                       for i in range(n_groups)])
    std = float(values.std(ddof=1)) if n_groups > 1 else 0.
    logger.info("grouped gamma_MI (%dx%d): %.5f +- %.5f", group_size, n_groups, values.mean(), std)
    return GroupedGamma(float(values.mean()), std, values)
