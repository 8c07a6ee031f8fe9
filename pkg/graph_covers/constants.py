"""
Constants used throughout the graph_covers package.
"""

# Config and log locations
CONFIG_DIR_NAME = ".graphcovers"  # Hidden folder in home directory for config and logs
LOGS_DIR_NAME = "logs"  # Subfolder inside .graphcovers for logs
LOG_RETENTION_COUNT = 10  # Number of most recent log files to keep
LOG_FILE_PREFIX = "graph_covers_"
CONFIG_FILE_NAME = "config.json"

# Search limits
DEFAULT_BUDGET = 16  # Vertex budget for bounded witness search
ENUMERATION_VERTEX_CAP = 16  # k * |V(A)| bound for simple cover enumeration
ENUMERATION_SPACE_CAP = 1_000_000  # Voltage assignments tried for one fold count
GOOD_SET_VERTEX_CAP = 20  # Good-set enumeration is exponential in |V|
POSET_VERTEX_CAP = 8  # Largest graph accepted by cover_poset
ISOMORPHISM_ORBIT_CAP = 4  # Target size up to which the first vertex uses orbit representatives

# Text formats
MG_EXTENSION = ".mg"
SEMI_STUB_PREFIX = "__s"  # DOT stub node name for semi-edges
DOT_COVER_COLOR = "green"
DOT_STRONGER_COLOR = "purple"

# Exit codes
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

# Catalog witness candidates tried before voltage enumeration
WITNESS_CANDIDATES = (
    "K4",
    "K3prime_odot",
    "K33",
    "Q3",
    "H1",
    "C(8;4)",
    "Petersen",
    "C6prime_odot",
)

# Intermediate targets used to certify refutations by composition
REFUTATION_INTERMEDIATES = ("F(1,1)", "F(3,0)")

# The twelve graphs of the small cubic poset, in report order
SMALL_CUBIC_NAMES = (
    "F(1,1)",
    "F(3,0)",
    "W(0,0,3,0,0)",
    "W(0,1,1,1,0)",
    "W(1,0,2,0,1)",
    "W(0,1,1,0,2)",
    "W(2,0,1,0,2)",
    "K4",
    "SG",
    "DG",
    "WG",
    "LC",
)
