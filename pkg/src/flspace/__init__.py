"""Workbench for finite fuzzy linear spaces over chain lattices.

Models spaces of lattice-valued lines, computes closures and fuzzy
degrees, counts nonzero labelings exactly, checks the crisp and
generalized line-count theorems clause by clause, and exhaustively
enumerates all small instances with isomorphism rejection.
"""

from .classify import FuzzinessSummary, is_k_fuzzy_line, is_k_fuzzy_point, summarize
from .closure import ClosureMode, closure, closure_oracle, generates
from .counting import (
    count_k_fuzzy_line_labelings,
    count_k_fuzzy_point_configs,
    infer_line_count,
    infer_line_count_for_space,
    labeling_oracle,
    space_cardinality,
)
from .documents import load_space, parse_space, serialize_space, space_to_dict
from .enumerate import (
    Census,
    CensusEntry,
    LabelingStream,
    SearchReport,
    canonicalize,
    census,
    embed_crisp,
    enumerate_labelings,
    enumerate_skeletons,
    search_counterexamples,
)
from .errors import (
    AxiomViolationError,
    DocumentError,
    FlsError,
    LatticeMismatchError,
    NoExactSolutionError,
    ResourceLimitError,
    TokenError,
)
from .lattice import ChainLattice, LatticeElement, join, meet, meet_all
from .space import (
    ALL_AXIOMS,
    Axiom,
    DEFAULT_AXIOMS,
    FuzzyLine,
    FuzzyLinearSpace,
    ValidationReport,
    parse_axiom_set,
)
from .theorems import (
    Shape,
    Verdict,
    check_classical_dbe,
    check_generalized_dbe,
    render_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_AXIOMS",
    "Axiom",
    "AxiomViolationError",
    "Census",
    "CensusEntry",
    "ChainLattice",
    "ClosureMode",
    "DEFAULT_AXIOMS",
    "DocumentError",
    "FlsError",
    "FuzzinessSummary",
    "FuzzyLine",
    "FuzzyLinearSpace",
    "LabelingStream",
    "LatticeElement",
    "LatticeMismatchError",
    "NoExactSolutionError",
    "ResourceLimitError",
    "SearchReport",
    "Shape",
    "TokenError",
    "ValidationReport",
    "Verdict",
    "canonicalize",
    "census",
    "check_classical_dbe",
    "check_generalized_dbe",
    "closure",
    "closure_oracle",
    "count_k_fuzzy_line_labelings",
    "count_k_fuzzy_point_configs",
    "embed_crisp",
    "enumerate_labelings",
    "enumerate_skeletons",
    "generates",
    "infer_line_count",
    "infer_line_count_for_space",
    "is_k_fuzzy_line",
    "is_k_fuzzy_point",
    "join",
    "labeling_oracle",
    "load_space",
    "meet",
    "meet_all",
    "parse_axiom_set",
    "parse_space",
    "render_verdict",
    "search_counterexamples",
    "serialize_space",
    "space_cardinality",
    "space_to_dict",
    "summarize",
]
