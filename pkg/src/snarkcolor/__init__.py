"""Superpositioned snarks: construction, coloring assembly, verification."""

__version__ = "0.1.0"

from .assembler import (
    AssembleError,
    Certificate,
    assemble_dock_right,
    assemble_even_subgraph,
    assemble_general,
    base_coloring,
)
from .builder import (
    SpecError,
    SuperedgeSlot,
    SuperpositionSpec,
    build,
    resolve_snark,
    spec_from_json,
)
from .coloring import (
    ColoringError,
    SearchTimeout,
    VerificationReport,
    is_3_edge_colorable,
    search_normal_5,
    verify,
)
from .factors import (
    FactorError,
    LeftGood,
    Neither,
    RightGood,
    TwoFactor,
    classify_factor,
    hamiltonian_cycle,
    two_factor_from_cycles,
    two_factors,
)
from .multipole import (
    Multipole,
    MultipoleError,
    from_graph6,
    glue,
    is_isomorphic,
    to_graph6,
)
from .schemes import (
    SchemeError,
    classify_superedge,
    hypo_right,
    left_from_factor,
    right_from_factor,
    right_js_via_search,
)
from .snarks import find_K_in_flower, flower, k_reduce, petersen, superedge
from .tablecheck import (
    TableError,
    check_tables,
    infer_labeling,
    load_rows,
    regenerate_T3,
    validate_row,
)

__all__ = [
    "AssembleError",
    "Certificate",
    "ColoringError",
    "FactorError",
    "LeftGood",
    "Multipole",
    "MultipoleError",
    "Neither",
    "RightGood",
    "SchemeError",
    "SearchTimeout",
    "SpecError",
    "SuperedgeSlot",
    "SuperpositionSpec",
    "TableError",
    "TwoFactor",
    "VerificationReport",
    "__version__",
    "assemble_dock_right",
    "assemble_even_subgraph",
    "assemble_general",
    "base_coloring",
    "build",
    "check_tables",
    "classify_factor",
    "classify_superedge",
    "find_K_in_flower",
    "flower",
    "from_graph6",
    "glue",
    "hamiltonian_cycle",
    "hypo_right",
    "infer_labeling",
    "is_3_edge_colorable",
    "is_isomorphic",
    "k_reduce",
    "left_from_factor",
    "load_rows",
    "petersen",
    "regenerate_T3",
    "resolve_snark",
    "right_from_factor",
    "right_js_via_search",
    "search_normal_5",
    "spec_from_json",
    "superedge",
    "to_graph6",
    "two_factor_from_cycles",
    "two_factors",
    "validate_row",
    "verify",
]
