import math

import numpy as np
import pytest

from gmft.model import PhysicalConstants, Calibration, LatticeGeometry
from gmft.dynamics import EvolutionOptions, ProtocolSetup

@pytest.fixture
def cube():
    return LatticeGeometry(3)

@pytest.fixture
def chain():
    return LatticeGeometry(5, dim=1)

@pytest.fixture
def ring():
    return LatticeGeometry(5, dim=1, boundary="periodic")

@pytest.fixture
def calibration():
    return Calibration()

@pytest.fixture
def untrapped():
    """ Calibration without a harmonic trap. """
    return Calibration(PhysicalConstants(trap_frequency_omega0=0.))

@pytest.fixture
def small_setup(calibration):
    return ProtocolSetup(calibration=calibration,
                         geometry=LatticeGeometry(3, dim=1, boundary="periodic"),
                         n_max=4, mu=0.1, V0=5., initial_hold=0.02,
                         options=EvolutionOptions(dt=1e-3, sample_interval=0.01))
