from enum import Enum, IntEnum


DEFAULT_REPORT_INDENT = 2


class SolverKind(str, Enum):
    BRUTE = "brute"
    MOSER_TARDOS = "moser-tardos"
    SHATTERING = "shattering"


class ConditionKind(str, Enum):
    CLASSIC = "classic"
    SHATTER = "shatter"
    SEPARATION = "separation"
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"


class Verdict(str, Enum):
    HOLDS = "holds"
    HOLDS_STRICTLY = "holds_strictly"
    FAILS = "fails"


class CommandName(str, Enum):
    SOLVE = "solve"
    CHECK = "check"
    REDUCE = "reduce"
    SIMULATE = "simulate"
    SCHREIER = "schreier"
    SECTION = "section"
    GEN = "gen"


class GraphFamily(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    GRID = "grid"
    RANDOM_REGULAR = "random-regular"


class WitnessKind(str, Enum):
    INTERVAL = "interval"
    GRID = "grid"


class ExitCode(IntEnum):
    OK = 0
    FAILED = 1
    INPUT_ERROR = 2
    CONDITION_VIOLATED = 3


# Conditions evaluated together by condition_report (s-dependent ones use the given s)
REPORTED_CONDITIONS = [
    ConditionKind.CLASSIC,
    ConditionKind.SHATTER,
    ConditionKind.SEPARATION,
    ConditionKind.POLYNOMIAL,
    ConditionKind.EXPONENTIAL,
]

# Exponent and constant of the polynomial criterion p(d+1)^8 <= 2^-15
POLYNOMIAL_EXPONENT = 8
POLYNOMIAL_LOG2_BOUND = -15


class CSPBuilder(str, Enum):
    COLORING = "coloring"
    SINKLESS = "sinkless"


class LCLName(str, Enum):
    PROPER_COLORING = "proper-coloring"
    DISTINCT_LABEL = "distinct-label"
    NON_MONOCHROMATIC = "non-monochromatic"
    MIS = "mis"
    SINKLESS = "sinkless"
    ALWAYS_TRUE = "always-true"


class AlgorithmName(str, Enum):
    OWN_LABEL = "own-label"
    CONSTANT = "constant"
    GREEDY_BY_ID = "greedy-by-id"
    LUBY_MIS = "luby-mis"
