"""Radix-generic engine for the Kaprekar routine.

Computes constants, cycles, and iteration-distance distributions for n-digit
numbers in arbitrary bases (2 to 64), using a differential encoding of digit
multisets to collapse the state space, and verifies the classical
regularities of the iteration tables.
"""

from .census import (
    CheckResult,
    CycleCensus,
    DistributionTable,
    PatternVerdicts,
    cycle_census,
    distribution_row,
    distribution_table,
    figure1_edge_check,
    figure1_edge_count,
    naive_distribution_row,
    verify_patterns,
)
from .constants import (
    ConstantReport,
    find_constants,
    five_digit_formula,
    four_digit_constant,
    three_digit_constant,
)
from .encoding import (
    Encoding,
    class_size,
    class_sizes_bruteforce,
    encode,
    encoding_count,
    enumerate_encodings,
    post_step_value,
    representative,
    step_encoding,
    three_digit_class_size,
)
from .errors import (
    BadRadix,
    KaprekarError,
    OddBase,
    RepdigitInput,
    StateSpaceTooLarge,
    StepLimitExceeded,
    TableTooSmall,
    UnsupportedBase,
    ValueTooWide,
    WidthTooSmall,
    ZeroRange,
)
from .graph import (
    Cycle,
    KaprekarGraph,
    NodeRecord,
    Trace,
    build_graph,
    cycle_values,
    cycles_of,
    depth_of,
    graph_to_dot,
    graph_to_json,
    trace,
)
from .radix import (
    DigitString,
    digit_range,
    kaprekar_step,
    make_digit_string,
    three_digit_closed_form,
)

__all__ = [
    "BadRadix",
    "CheckResult",
    "ConstantReport",
    "Cycle",
    "CycleCensus",
    "DigitString",
    "DistributionTable",
    "Encoding",
    "KaprekarError",
    "KaprekarGraph",
    "NodeRecord",
    "OddBase",
    "PatternVerdicts",
    "RepdigitInput",
    "StateSpaceTooLarge",
    "StepLimitExceeded",
    "TableTooSmall",
    "Trace",
    "UnsupportedBase",
    "ValueTooWide",
    "WidthTooSmall",
    "ZeroRange",
    "build_graph",
    "class_size",
    "class_sizes_bruteforce",
    "cycle_census",
    "cycle_values",
    "cycles_of",
    "depth_of",
    "digit_range",
    "distribution_row",
    "distribution_table",
    "encode",
    "encoding_count",
    "enumerate_encodings",
    "figure1_edge_check",
    "figure1_edge_count",
    "find_constants",
    "five_digit_formula",
    "four_digit_constant",
    "graph_to_dot",
    "graph_to_json",
    "kaprekar_step",
    "make_digit_string",
    "naive_distribution_row",
    "post_step_value",
    "representative",
    "step_encoding",
    "three_digit_class_size",
    "three_digit_closed_form",
    "three_digit_constant",
    "trace",
    "verify_patterns",
]

__version__ = "0.1.0"
