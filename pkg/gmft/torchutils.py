#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 10:02:37

 Tensor helpers shared by the Gutzwiller solver and the integrator.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.torchutils")

import numpy as np
import torch

DTYPE = torch.complex128
REAL_DTYPE = torch.float64

def device(name=None, display=False):
    """ Select the compute device. 

    Args:
        name (str, optional): explicit device ('cpu', 'cuda', 'cuda:1'). Defaults to cuda if available.
        display (bool, optional): log the selected device. Defaults to False.

    Returns:
        torch.device
    """
    if name is None:
        name = 'cuda' if torch.cuda.is_available() else 'cpu'
    if display:
        logger.info("USING DEVICE: %s", name)
    return torch.device(name)

def as_complex(x, device=None):
    """ Converts x (array, tensor, scalar) to a complex128 tensor. """
    if torch.is_tensor(x):
        return x.to(dtype=DTYPE, device=device if device is not None else x.device)
    return torch.as_tensor(np.asarray(x), dtype=DTYPE, device=device)

def as_real(x, device=None):
    if torch.is_tensor(x):
        return x.to(dtype=REAL_DTYPE, device=device if device is not None else x.device)
    return torch.as_tensor(np.asarray(x), dtype=REAL_DTYPE, device=device)

def _numpy(x):
    if torch.is_tensor(x):
        # conj/neg views must be materialised before numpy can see them
        return x.detach().cpu().resolve_conj().resolve_neg().numpy()
    return np.asarray(x)

def to_numpy(*xs):
    """ numpy arrays for one or more tensors (or array-likes). One argument gives an array, several give a tuple.

    Example:
        psi, density = to_numpy(field.psi, field.density)
    """
    if len(xs) == 1:
        return _numpy(xs[0])
    return tuple(_numpy(x) for x in xs)
