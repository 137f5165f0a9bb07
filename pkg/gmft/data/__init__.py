from .csvio import atomic_write, write_json, write_series_csv, read_series_csv, write_profile_csv, read_profile_csv, write_columns
from .snapshots import SnapshotArchive
from .corruption import Gaussian, Poisson, noise_model
