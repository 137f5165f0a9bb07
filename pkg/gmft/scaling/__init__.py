from .smooth import SmoothedTrace, smooth_trace, smooth_samples
from .extract import tau_sf, tau_mi, tau_mi_delays, excitation_fraction, reference_trace, \
                     oscillation_amplitude, fit_cosine, peak_to_peak, OscillationFit, MI_CUT_BAND, MI_CUT
from .fit import ScalingFit, CriticalParameters, fit_power_law, nu_z_from_tau, nu_z_from_nex, tau_exponent, nex_exponent
from .collapse import universal_rescale, effective_depth, CollapseResult
from .robustness import tau_mi_scaling, tau_mi_cut_scan, nex_window_scan
