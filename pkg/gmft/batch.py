#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 10:31:05

 Chunked iteration over the flat site axis. Large lattices (75^3 sites, 8x8 local
 matrices) are diagonalised in chunks to bound peak memory.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

DEFAULT_BATCH_SIZE = 1 << 16

def batch_slices(size, batch_size=DEFAULT_BATCH_SIZE):
    """ Yields consecutive slices covering range(size), the last one possibly shorter. """
    if batch_size is None or batch_size <= 0:
        batch_size = size
    _shape = size // batch_size
    _max = _shape * batch_size
    for i in range(_shape):
        yield slice(i * batch_size, (i + 1) * batch_size)
    if _max < size:
        yield slice(_max, size)
