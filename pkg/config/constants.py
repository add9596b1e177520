"""
Configuration constants and enums for the edit distance toolkit.
"""
import os
from enum import Enum

# Load .env file if it exists
def load_env_file():
    """Load environment variables from .env file"""
    env_path = '.env'
    if os.path.exists(env_path):
        with open(env_path, 'r') as f:
            for line in f:
                line = line.strip()
                if line and not line.startswith('#') and '=' in line:
                    key, value = line.split('=', 1)
                    os.environ.setdefault(key.strip(), value.strip())

# Try to load with python-dotenv first, fallback to manual loading
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    load_env_file()


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        print(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default

###############################################################################
#                          ENVIRONMENT / PATHS
###############################################################################
CACHE_DIR = os.environ.get("EDFN_CACHE_DIR") or "catalogs"
LOG_LEVEL = (os.environ.get("EDFN_LOG_LEVEL") or "INFO").upper()
DEFAULT_THREADS = _env_int("EDFN_THREADS", os.cpu_count() or 1)

###############################################################################
#                              SIZE CAPS
###############################################################################
CHROMATIC_CAP = _env_int("EDFN_CHROMATIC_CAP", 12)
CANONICAL_CAP = 9
SOLVER_FLOAT_CAP = _env_int("EDFN_SOLVER_FLOAT_CAP", 16)
SOLVER_EXACT_CAP = _env_int("EDFN_SOLVER_EXACT_CAP", 12)
# Above this size the solver tries join decomposition / the path program first
SOLVER_ENUM_PREFERRED_MAX = 10
EXPLICIT_COLORED_CAP = 64
DIST_CAP = 7
DENSITY_CAP = 6
# families whose freeness memo is kept at once
FREE_MEMO_SPECS = 8

###############################################################################
#                              TOLERANCES
###############################################################################
G_TOL = 1e-10
MASS_TOL = 1e-12
POINT_TOL = 1e-8
FEASIBILITY_TOL = 1e-9
SINGULAR_COND = 1e12
CONCAVITY_TOL = 1e-9
CHANGEPOINT_WIDTH = 1e-6

###############################################################################
#                              DEFAULTS
###############################################################################
DEFAULT_GRID_POINTS = 1024
FLOAT_DIGITS = 17
WITHIN_WINDOW = "within cataloged window"
SMALL_P_REGIME = 0.05

###############################################################################
#                                ENUMS
###############################################################################
class SolveMode(Enum):
    EXACT = "exact"
    FLOAT = "float"


class CatalogSide(Enum):
    ZERO_CORE = "zero_core"
    ONE_CORE = "one_core"


class GeneratorType(Enum):
    CYCLES_GE = "cycles_ge"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete_bipartite"


# Exit codes used by the command handlers
EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2
