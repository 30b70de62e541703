"""Sheets and target-map monodromy of Hurwitz spaces of fully-marked covers.

The library enumerates the sheets of the map from a Hurwitz space of
fully-marked admissible covers to the moduli space of marked target curves,
computes the monodromy action of the target moduli on those sheets (three
boundary moves when the target carries four marked fibers), and reads off the
connected components together with the degree, ramification, and genus of the
restricted covering map.
"""

from .golden import (
    GoldenParseError,
    GoldenRow,
    RowVerdict,
    VerifySummary,
    default_rows,
    format_golden_row,
    load_golden_file,
    make_spec,
    parse_golden,
    spec_line,
    verify_all,
    verify_row,
)
from .marked import (
    BOUNDARY_LABELS,
    CANON_MAX_DEGREE,
    HurwitzSpec,
    InvariantViolation,
    MarkedTuple,
    SpecError,
    TooLargeError,
    canonicalize,
    component_signature,
    enumerate_markings,
    marked_tuple_json,
    marked_tuple_str,
    marking_key,
    node_product,
    transport_marking,
    tuple_key,
    validate_marked_tuple,
)
from .moves import (
    MOVES,
    ComponentReport,
    SheetGraph,
    build_sheet_graph,
    component_multiset,
    components,
    move_infty,
    move_one,
    move_zero,
)
from .perms import (
    MAX_DEGREE,
    DegreeError,
    compose,
    compose_all,
    conjugacy_class,
    conjugate,
    cycle_decomposition,
    cycle_type,
    from_cycles,
    identity,
    inverse,
    orbits,
    parse_partition,
    parse_perm,
    partition_str,
    perm_str,
)
from .sheets import count_sheets, enumerate_sheets

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY_LABELS",
    "CANON_MAX_DEGREE",
    "ComponentReport",
    "DegreeError",
    "GoldenParseError",
    "GoldenRow",
    "HurwitzSpec",
    "InvariantViolation",
    "MAX_DEGREE",
    "MOVES",
    "MarkedTuple",
    "RowVerdict",
    "SheetGraph",
    "SpecError",
    "TooLargeError",
    "VerifySummary",
    "build_sheet_graph",
    "canonicalize",
    "component_multiset",
    "component_signature",
    "compose",
    "compose_all",
    "conjugacy_class",
    "conjugate",
    "count_sheets",
    "cycle_decomposition",
    "cycle_type",
    "default_rows",
    "enumerate_markings",
    "enumerate_sheets",
    "format_golden_row",
    "from_cycles",
    "identity",
    "inverse",
    "load_golden_file",
    "make_spec",
    "marked_tuple_json",
    "marked_tuple_str",
    "marking_key",
    "move_infty",
    "move_one",
    "move_zero",
    "node_product",
    "orbits",
    "parse_golden",
    "parse_partition",
    "parse_perm",
    "partition_str",
    "perm_str",
    "spec_line",
    "transport_marking",
    "tuple_key",
    "validate_marked_tuple",
    "verify_all",
    "verify_row",
]
