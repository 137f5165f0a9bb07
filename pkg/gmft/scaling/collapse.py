#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 18-10-2026 09:30:16

 Universal rescaling V_eff = (V - V_c) k^{-(1 - b)} + V_c of gamma_MI(V) traces.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.scaling")

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ..errors import DomainError, ExtractionError
from .extract import V_CRITICAL

GRID_POINTS = 200
MIN_OVERLAP = 5

def effective_depth(V, k, V_c=V_CRITICAL, b=0.53):
    return (np.asarray(V, dtype=np.float64) - V_c) * k ** (-(1. - b)) + V_c

@dataclass
class CollapseResult:
    V_eff: np.ndarray
    curves: dict
    score: float
    unrescaled_score: float
    b: float
    V_c: float

    def to_dict(self):
        return {"score" : self.score, "unrescaled_score" : self.unrescaled_score, "b" : self.b, "V_c" : self.V_c,
                "V_eff_range" : [float(self.V_eff[0]), float(self.V_eff[-1])]}

def _score(traces, V_c, b, n_grid):
    ranges = {}
    for k, trace in traces.items():
        lo, hi = trace.domain
        lo = max(lo, V_c)
        if hi <= lo:
            raise DomainError("trace k={0} does not extend beyond V_c = {1}".format(k, V_c))
        ranges[k] = effective_depth([lo, hi], k, V_c, b)
    union = np.linspace(min(r[0] for r in ranges.values()), max(r[1] for r in ranges.values()), n_grid)
    lo = max(r[0] for r in ranges.values())
    hi = min(r[1] for r in ranges.values())
    grid = union[(union >= lo) & (union <= hi)]
    if len(grid) < MIN_OVERLAP:
        raise ExtractionError("rescaled traces overlap on only {0} grid points (need {1})".format(len(grid), MIN_OVERLAP))
    curves = {k : np.asarray(trace(V_c + (grid - V_c) * k ** (1. - b))) for k, trace in traces.items()}
    pairs = list(combinations(sorted(curves), 2))
    if not pairs:
        return grid, curves, 0.
    msd = np.mean([np.mean((curves[a] - curves[c]) ** 2) for a, c in pairs])
    return grid, curves, float(np.sqrt(msd))

def universal_rescale(traces, V_c=V_CRITICAL, b=0.53, n_grid=GRID_POINTS):
    """ Rescales depth-axis traces and scores the collapse.

    Args:
        traces (dict): k -> SmoothedTrace on the 'V' axis.
        V_c (float, optional): critical depth. Defaults to 13 E_r.
        b (float, optional): magnitude of the tau_MI exponent. Defaults to 0.53.
        n_grid (int, optional): points of the common V_eff grid. Defaults to 200.

    Returns:
        CollapseResult: the rescaled curves, the RMS pairwise deviation with rescaling
            and, for comparison, without (b = 1).
    """
    if not traces:
        raise DomainError("no traces to rescale")
    for k, trace in traces.items():
        if trace.axis != "V":
            raise DomainError("universal_rescale needs depth-axis traces, k={0} has axis '{1}'".format(k, trace.axis))
    grid, curves, score = _score(traces, V_c, b, n_grid)
    _, _, plain = _score(traces, V_c, 1., n_grid)
    logger.info("collapse score %.4g (b=%.3g) vs %.4g unrescaled", score, b, plain)
    return CollapseResult(grid, curves, score, plain, b, V_c)
