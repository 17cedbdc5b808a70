"""Constants for the hydra group toolkit."""
import types

DOMAIN = "hydra_groups"
PACKAGE_VERSION = "0.4.0"

# letters
GENERATOR_PREFIX = "a"
SUBGROUP_PREFIX = "h"
MIRROR_PREFIX = "~"
LETTER_T = "t"
LETTER_P = "p"
PRESET_PREFIX = "hydra"

# spec file keys
CONF_RANK = "k"
CONF_POWERS = "r"
CONF_TWIST_PREFIX = "w"
CONF_COMMUTATOR_PREFIX = "c"

# option keys
CONF_MAX_LENGTH = "max_length"
CONF_MAX_EXPONENT = "max_exponent"
CONF_WINDOW = "window"
CONF_MAX_DEGREE = "max_degree"
CONF_MAX_ENTRIES = "max_entries"
CONF_MAX_CANDIDATES = "max_candidates"

DEFAULT_MAX_LENGTH = 10 ** 6
DEFAULT_MAX_EXPONENT = 2 ** 63 - 1
DEFAULT_WINDOW = 64
DEFAULT_MAX_DEGREE = 6
DEFAULT_MAX_ENTRIES = 10 ** 7
DEFAULT_MAX_CANDIDATES = 10 ** 9
DEFAULT_SCAN_DEGREE = 4
DEFAULT_ORACLE_LENGTH = 6

DEFAULT_OPTIONS = types.MappingProxyType(
    {
        CONF_MAX_LENGTH: DEFAULT_MAX_LENGTH,
        CONF_MAX_EXPONENT: DEFAULT_MAX_EXPONENT,
        CONF_WINDOW: DEFAULT_WINDOW,
        CONF_MAX_DEGREE: DEFAULT_MAX_DEGREE,
        CONF_MAX_ENTRIES: DEFAULT_MAX_ENTRIES,
        CONF_MAX_CANDIDATES: DEFAULT_MAX_CANDIDATES,
    }
)

# rf witness kinds
WITNESS_KIND_HNN = "hnn"
WITNESS_KIND_AMALGAM = "amalgam"
WITNESS_KINDS = [WITNESS_KIND_HNN, WITNESS_KIND_AMALGAM]

PINCH_ORDER_LEFT = "left"
PINCH_ORDER_RIGHT = "right"

# cli exit codes
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE = 3
EXIT_UNDECIDED = 4
