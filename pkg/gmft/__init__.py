#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 09:12:44

 Gutzwiller mean-field dynamics of trapped bosons in a 3D optical lattice, band-mapping
 analysis and Kibble-Zurek scaling of superfluid to Mott-insulator ramps.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

__version__ = "0.1.0"

from . import model
from . import gutzwiller
from . import dynamics
from . import observables
from . import bandmap
from . import scaling
from . import data

__all__ = ("model", "gutzwiller", "dynamics", "observables", "bandmap", "scaling", "data")
