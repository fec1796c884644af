"""Constants for the kslimit command line tools."""

from enum import IntEnum, StrEnum

NAME = "kslimit"

P_CONF_NAME = "name"
P_CONF_RANK = "rank"
P_CONF_GRAM = "gram"
P_CONF_MONODROMY = "N"
P_CONF_PERIOD_RE = "v_lim_re"
P_CONF_PERIOD_IM = "v_lim_im"
P_CONF_NERON_COMPONENTS = "neron_components"
P_CONF_ZETA_TERMS = "zeta_terms"

DEFAULT_ZETA_TERMS = 5
DEFAULT_VERIFY_SEED = 0
DEFAULT_PADDING_NORM = -2
MAX_EXAMPLE_RANK = 7

# Random congruences for the invariance suite
CONGRUENCE_SAMPLES = 20
CONGRUENCE_ENTRY_BOUND = 2
IDEAL_SAMPLES = 50
IDEAL_RANKS = range(3, 7)

RATIONAL_PATTERN = r"^-?\d+(/\d+)?$"

EXAMPLE_PREFIX = "EX-"


class ExitCode(IntEnum):
    OK = 0
    ERROR = 1
    FAILED = 2


class VerifyScope(StrEnum):
    ALL = "all"
    CLIFFORD = "clifford"
    KS = "ks"
    DEGENERATION = "degeneration"


class OutputFormat(StrEnum):
    TOML = "toml"
    TEXT = "text"


class ReportSection(StrEnum):
    INPUT = "input"
    STRUCTURE = "structure"
    K3 = "k3"
    KUGA_SATAKE = "kuga_satake"
    CENTRAL_FIBRE = "central_fibre"
    DUAL_COMPLEX = "dual_complex"
    NERON = "neron"
    ZETA = "zeta"
    VERIFICATION = "verification"


CHECK_PASS = "pass"
CHECK_FAIL = "fail"
