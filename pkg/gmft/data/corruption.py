#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 17-10-2026 11:05:37

 Noise models for synthetic band-mapping shots. Each model is a callable on a
 QuasiMomentumProfile returning a new, noisy profile.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import numpy as np

from ..errors import DomainError
from ..observables import QuasiMomentumProfile

class Gaussian:

    """
        Additive isotropic gaussian noise, std relative to the peak of the grid.
    """

    def __init__(self, std=0.01, seed=None):
        if std < 0:
            raise DomainError("noise std must be >= 0, got {0}".format(std))
        self.std = std
        self.rng = np.random.default_rng(seed)

    def __call__(self, profile):
        scale = self.std * np.abs(profile.grid).max()
        grid = profile.grid + self.rng.normal(0., scale, size=profile.grid.shape)
        return QuasiMomentumProfile(grid, profile.grid_size, profile.normalization, profile.q_range)

class Poisson:

    """
        Shot noise: each cell holds a Poisson number of atoms with mean n(q) x cell area x (atoms / N).
    """

    def __init__(self, atoms=1e4, seed=None):
        if not atoms > 0:
            raise DomainError("atoms must be strictly positive, got {0}".format(atoms))
        self.atoms = atoms
        self.rng = np.random.default_rng(seed)

    def __call__(self, profile):
        scale = self.atoms / profile.normalization * profile.cell_area
        counts = self.rng.poisson(np.clip(profile.grid, 0., None) * scale)
        return QuasiMomentumProfile(counts / scale, profile.grid_size, profile.normalization, profile.q_range)

NOISE_MODELS = {"gaussian" : Gaussian, "poisson" : Poisson}

def noise_model(name, level, seed=None):
    """ 'gaussian' (level = relative std) or 'poisson' (level = atoms per shot). """
    if name not in NOISE_MODELS:
        raise DomainError("unknown noise model {0}, expected one of {1}".format(name, list(NOISE_MODELS)))
    return NOISE_MODELS[name](level, seed=seed)
