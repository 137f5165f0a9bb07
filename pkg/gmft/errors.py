#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 09:12:40

 Exceptions raised by gmft. Each one also derives from the builtin that would 
 otherwise have been raised, so ``except ValueError`` keeps working.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

class GMFTError(Exception):
    pass

class DomainError(GMFTError, ValueError):
    """ Invalid physical input (non-positive depth, empty state, bad window...). """
    pass

class ConvergenceError(GMFTError, RuntimeError):

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations

class BracketError(GMFTError, RuntimeError):

    def __init__(self, message, table=()):
        table = list(table)
        if table:
            rows = "\n".join("  mu={0:.10g} N={1:.10g}".format(mu, n) for mu, n in table)
            message = "{0}\nscanned (mu, N):\n{1}".format(message, rows)
        super().__init__(message)
        self.table = table

class IntegrationError(GMFTError, RuntimeError):

    def __init__(self, message, drift=None, time_ms=None):
        super().__init__(message)
        self.drift = drift
        self.time_ms = time_ms

class ExtractionError(GMFTError, ValueError):
    pass

class FitError(GMFTError, RuntimeError):

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual

class OutOfModelError(GMFTError, ValueError):
    pass

class ProfileFormatError(GMFTError, ValueError):
    pass

class ConfigError(GMFTError, ValueError):
    pass
