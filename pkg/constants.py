# Default problem size
DEFAULT_N = 3

# Grassmann / operator configuration
MAX_GRASSMANN_N = 12

# Parallel Processing Configuration
MAX_WORKERS = 3

# Supported parameter ranges per operation (inclusive)
W_MIN_N = 2
CHEVALLEY_MIN_N = 3
ROOT_ATLAS_N_RANGE = (3, 6)
MAIN_THEOREM_N_RANGE = (3, 5)
WEYL_N_RANGE = (3, 5)
PROPS_N_RANGE = (4, 5)
EN_N_RANGE = (4, 8)
MULT_TABLE_N_RANGE = (5, 6)
ORACLE_N_RANGE = (2, 5)
AXIOMS_EXHAUSTIVE_MAX_N = 4
FREE_LEVEL_MAX_DEPTH = 3
E_SERIES_MAX_RANK = 11

# Randomized property checks
PROPERTY_SEED = 20240611
RANDOM_TRIPLE_SAMPLES = 10000

# Command-line surface
VERBS = ["dims", "roots", "table", "verify"]
ALGEBRAS = ["w", "s", "sl1n"]
FORMATS = ["tsv", "records", "text"]
DEFAULT_FORMAT = "text"
TABLE_IDS = ["grading-w", "grading-s", "roots", "mult-20", "mult-010"]
SUITES = ["relations", "psi", "weyl", "ideal", "prolongation", "props", "enmap", "all"]

# n used by a suite when the requested n is outside the range it supports
SUITE_N_RANGES = {
    "relations": (3, 6),
    "psi": (3, 5),
    "weyl": WEYL_N_RANGE,
    "ideal": MAIN_THEOREM_N_RANGE,
    "prolongation": MAIN_THEOREM_N_RANGE,
    "props": PROPS_N_RANGE,
    "enmap": EN_N_RANGE,
}

# Output Configuration
BANNER_WIDTH = 60
