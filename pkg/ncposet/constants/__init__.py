"""Names, defaults and exit codes shared across ncposet."""

# Guardrails
DEFAULT_ELEMENT_BUDGET = 10**6
DEFAULT_CHAIN_BUDGET = 10**7
ENV_ELEMENT_BUDGET = "NCPOSET_BUDGET"
ENV_CHAIN_BUDGET = "NCPOSET_CHAIN_BUDGET"
ENV_CONFIG = "NCPOSET_CONFIG"

DEFAULT_SEED = 0
DEFAULT_LOG_LEVEL = "INFO"
DEBUG = "DEBUG"

# Element generators
TREES = "trees"
FILTER = "filter"

# Series variables
X = "x"
S = "s"
T = "t"
VARIABLES = (X, S, T)

# Closed-form kinds
CARDINALITY = "cardinality"
RANK_COUNT = "rank_count"
MOBIUS = "mobius"
SINGLETON = "singleton"
SINGLETON_RANK = "singleton_rank"
SMALL_BLOCKS = "small_blocks"
SMALL_BLOCKS_SINGLETON = "small_blocks_singleton"
SMALL_BLOCKS_RANK = "small_blocks_rank"
FALLING_CHAINS = "falling_chains"
RANK_KINDS = (RANK_COUNT, SINGLETON_RANK, SMALL_BLOCKS_RANK)

# Shape constraints
ALL = "all"
DEGREE_1_MOD_D = "degree_1_mod_d"
D_DIVISIBLE = "d_divisible"
D_ARY = "d_ary"

# JSON keys
D = "d"
K = "k"
INFINITY = "inf"

# CLI commands
COUNT = "count"
TABLE = "table"
POSET = "poset"
MOBIUS_COMMAND = "mobius"
CHAINS = "chains"
PARKING = "parking"
TREES_COMMAND = "trees"
ANTIPODE = "antipode"
VERIFY = "verify"
RENDER = "render"
SERIES = "series"

# Output formats
TEXT = "text"
JSON = "json"
CSV = "csv"
SVG = "svg"
FORMATS = (TEXT, JSON, CSV, SVG)

# Emit choices
EMIT_LABELS = "labels"
EMIT_CHAINS = "chains"
EMIT_COUNT = "count"
EMIT_CHAIN = "chain"
EMIT_TREE = "tree"
EMIT_EXPANSION = "expansion"
EMIT_SHAPES = "shapes"
EMIT_PARTITIONS = "partitions"

# Antipode methods
SCHMITT = "schmitt"
HYPERTREE = "hypertree"
BOTH = "both"

# Render targets
CIRCLE = "circle"
PLANE_TREE = "tree"
PARKING_TREE = "parking-tree"

# Check outcomes
CHECK_OK = "OK"
CHECK_FAIL = "FAIL"
CHECK_SKIP = "SKIP"
CHECK_STATUSES = (CHECK_OK, CHECK_FAIL, CHECK_SKIP)

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
