#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 16-10-2026 13:05:44

 Piecewise-linear lattice depth schedules V(t), t in ms.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

from dataclasses import dataclass, asdict

import numpy as np

from ..errors import DomainError

CONTINUITY_TOLERANCE = 1e-9
SHAPES = ("linear", "hold")

@dataclass(frozen=True)
class Segment:
    """ One stage of a schedule.

    Args:
        duration (float): ms, >= 0.
        V_start (float): E_r.
        V_end (float): E_r (equal to V_start for a hold).
        shape (str, optional): 'linear' or 'hold'. Defaults to 'linear'.
        sample_interval (float, optional): ms, overrides the global sampling interval in this segment.
    """
    duration: float
    V_start: float
    V_end: float
    shape: str = "linear"
    sample_interval: float = None

    def __post_init__(self):
        if not self.duration >= 0:
            raise DomainError("segment duration must be >= 0, got {0}".format(self.duration))
        if self.shape not in SHAPES:
            raise DomainError("segment shape must be one of {0}, got {1}".format(SHAPES, self.shape))
        if self.shape == "hold" and abs(self.V_end - self.V_start) > CONTINUITY_TOLERANCE:
            raise DomainError("hold segment must have V_start == V_end, got {0} -> {1}".format(self.V_start, self.V_end))
        if not (self.V_start > 0 and self.V_end > 0):
            raise DomainError("lattice depths must be strictly positive, got {0} -> {1}".format(self.V_start, self.V_end))
        if self.sample_interval is not None and not self.sample_interval > 0:
            raise DomainError("sample_interval must be strictly positive, got {0}".format(self.sample_interval))

    @property
    def rate(self):
        """ dV/dt in E_r/ms (0 for holds and empty segments). """
        return 0. if self.duration == 0 else (self.V_end - self.V_start) / self.duration

    def V(self, tau):
        if self.duration == 0:
            return self.V_end
        return self.V_start + (self.V_end - self.V_start) * tau / self.duration

    def reversed(self):
        return Segment(self.duration, self.V_end, self.V_start, self.shape, self.sample_interval)

class RampSchedule:
    """ Ordered list of contiguous segments starting at t = 0. """

    def __init__(self, segments):
        self.segments = tuple(segments)
        if len(self.segments) == 0:
            raise DomainError("a schedule needs at least one segment")
        for a, b in zip(self.segments[:-1], self.segments[1:]):
            if abs(a.V_end - b.V_start) > CONTINUITY_TOLERANCE:
                raise DomainError("V is discontinuous between segments: {0} -> {1}".format(a.V_end, b.V_start))
        if not self.total_duration > 0:
            raise DomainError("schedule total duration must be > 0")
        self.starts = np.concatenate([[0.], np.cumsum([s.duration for s in self.segments])[:-1]])

    @property
    def total_duration(self):
        return float(sum(s.duration for s in self.segments))

    @property
    def V_initial(self):
        return self.segments[0].V_start

    @property
    def V_final(self):
        return self.segments[-1].V_end

    @property
    def ramp_start(self):
        """ Start time (ms) of the first segment that changes V, total duration if none does. """
        for start, segment in zip(self.starts, self.segments):
            if segment.shape == "linear" and segment.duration > 0 and segment.V_end != segment.V_start:
                return float(start)
        return self.total_duration

    def segment_index(self, t):
        """ Index of the (non-empty) segment containing t, the last one for t at the end. """
        i = int(np.searchsorted(self.starts, t, side="right")) - 1
        i = min(max(i, 0), len(self.segments) - 1)
        while i > 0 and self.segments[i].duration == 0:
            i -= 1
        return i

    def V(self, t):
        """ Lattice depth at time t (ms), clamped to the schedule's end points. """
        if np.ndim(t) > 0:
            return np.array([self.V(x) for x in np.asarray(t, dtype=np.float64)])
        t = min(max(float(t), 0.), self.total_duration)
        i = self.segment_index(t)
        return self.segments[i].V(t - self.starts[i])

    def sample_interval(self, t, default):
        s = self.segments[self.segment_index(t)].sample_interval
        return default if s is None else s

    def reversed(self):
        """ The schedule run backwards in time, V_rev(t) = V(T - t). """
        return RampSchedule([s.reversed() for s in reversed(self.segments)])

    def to_list(self):
        return [asdict(s) for s in self.segments]

    @classmethod
    def from_list(cls, segments):
        return cls([Segment(**s) for s in segments])

    @classmethod
    def linear_ramp(cls, V_start, V_stop, rate, hold_before=0., hold_after=0., hold_sample_interval=None):
        """ Optional hold at V_start, linear ramp at ``rate`` (E_r/ms) to V_stop, optional hold at V_stop. """
        if not rate > 0:
            raise DomainError("ramp rate must be strictly positive, got {0}".format(rate))
        segments = []
        if hold_before > 0:
            segments.append(Segment(hold_before, V_start, V_start, "hold"))
        segments.append(Segment(abs(V_stop - V_start) / rate, V_start, V_stop, "linear"))
        if hold_after > 0:
            segments.append(Segment(hold_after, V_stop, V_stop, "hold", hold_sample_interval))
        return cls(segments)

    def __len__(self):
        return len(self.segments)

    def __repr__(self):
        return "RampSchedule({0})".format(", ".join("{0:.4g}ms:{1:.4g}->{2:.4g}".format(s.duration, s.V_start, s.V_end) for s in self.segments))
