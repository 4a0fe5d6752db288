# settings.py: mfix constants and verification bounds
VERSION = "0.3.0"

# Default truncation degree for series printed by the CLI
DEFAULT_TRUNCATION = 60

# Desk-scale bounds for the verification suites (full suite stays in minutes)
INVOLUTION_N_MAX = 22
ROUNDTRIP_N_MAX = 25
MAP_N_MAX = 30
BLOCK_N_MAX = 28
CORE_SIZE_MAX = 20
SC_N_MAX = 40
BARCORE_SIZE_MAX = 40

DEFAULT_E_RANGE = (2, 3, 4, 5, 6, 7)
MAIN_E_RANGE = (3, 4, 5, 6)
BLOCK_E_RANGE = (3, 4, 5, 6)
KAPPA_E_RANGE = (2, 3, 4, 5, 6)
BARCORE_E_RANGE = (2, 4)

# Counts and series coefficients are kept inside signed 64-bit range
INT64_MAX = 2**63 - 1

THREADS_ENV = "MULLINEUX_THREADS"

OUTPUT_FORMATS = ("plain", "json", "csv")
SERIES_NAMES = ("mf", "mf-alt", "sc", "f", "g", "mf2")
