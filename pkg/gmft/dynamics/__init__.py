from .schedule import Segment, RampSchedule
from .evolve import EvolutionOptions, ObservableSeries, derivative, rk4_step, evolve
from .protocol import ProtocolSetup, protocol_phase_transition, protocol_oscillation, \
                      phase_transition_schedule, oscillation_schedule, equilibrium_sweep, EquilibriumSweep
