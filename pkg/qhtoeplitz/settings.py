"""Internal settings."""
# Standard Library
import os

# Third Party Libraries
import appdirs

# qhtoeplitz Modules
from qhtoeplitz import __version__
from qhtoeplitz.util.settings import SettingsIO

PROJECT = "qhtoeplitz"
VERSION = __version__

# Paths
CONFIG_DIR = appdirs.user_config_dir(PROJECT)
CONFIG_FILE = os.path.join(CONFIG_DIR, "qhtoeplitz.conf")
CACHE_DIR = appdirs.user_cache_dir(PROJECT)

# Versioned report envelope
SCHEMA = "toeplitz-qh/1"

sio = SettingsIO(CONFIG_FILE)

# Numerical defaults, overridable from the config file and the command line
ZERO_TOLERANCE = sio.read_float("tolerance", 1e-10)
WINDOW_MARGIN = sio.read_int("margin", 20)
QUADRATURE_ORDER = sio.read_int("quadrature_order", 40)
QUADRATURE_MAX_PANELS = sio.read_int("quadrature_max_panels", 2000)
QUADRATURE_TOLERANCE = sio.read_float("quadrature_tolerance", 1e-12)
SVD_RELATIVE_THRESHOLD = sio.read_float("svd_threshold", 1e-9)
MATCH_TOLERANCE = sio.read_float("match_tolerance", 1e-9)
GRID_WORKERS = sio.read_int("workers", 4)

# Offsets closer than this to an integer multiple of the Gamma scale telescope
INTEGRALITY_TOLERANCE = 1e-9

read_setting = sio.read_setting
write_setting = sio.write_setting
