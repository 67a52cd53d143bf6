"""sharpbounds: discover sharp linear inequalities between graph invariants.

The pipeline: load a corpus of small simple graphs, compute exact numeric
invariants and Boolean predicates into a feature table, fit the linear bound
between each property pair that maximizes the number of objects attaining
equality (the touch number), then filter and rank the resulting conjectures.
"""

from .engine import (
    Conjecture,
    EngineConfig,
    conjecture_from_record,
    conjecture_to_record,
    dalmatian_filter,
    find_counterexample,
    generality_filter,
    generate,
    read_export,
    render_conjecture,
    run_pipeline,
    sort_conjectures,
    touch_count_on,
    write_export,
)
from .errors import (
    ConfigError,
    CorpusError,
    Graph6Error,
    SharpboundsError,
    UndefinedInvariantError,
    UnsupportedSizeError,
)
from .features import (
    FeatureTable,
    Hypothesis,
    build_table,
    corpus_digest,
    load_or_build_table,
    load_table,
    save_table,
)
from .fitting import (
    FitResult,
    SharpBoundingFunction,
    evaluate_bound,
    fit_linear_bound,
)
from .graph6 import parse_graph6, read_graph6_file, to_graph6, write_graph6_file
from .graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    graph_names,
    named_graph,
    path,
    petersen,
    prism,
    star,
)
from .invariants import (
    domination_number,
    forcing_closure,
    independence_number,
    independent_domination_number,
    matching_number,
    min_maximal_matching,
    resolve_column,
    standard_invariants,
    total_domination_number,
    vertex_cover_number,
    zero_forcing_number,
)
from .predicates import evaluate_predicates, standard_predicates

__version__ = "0.1.0"

__all__ = [
    "Conjecture", "EngineConfig", "FeatureTable", "FitResult", "Graph",
    "Graph6Error", "Hypothesis", "SharpBoundingFunction", "SharpboundsError",
    "ConfigError", "CorpusError", "UndefinedInvariantError",
    "UnsupportedSizeError", "build_table", "complete", "complete_bipartite",
    "conjecture_from_record", "conjecture_to_record", "corpus_digest",
    "cycle", "dalmatian_filter", "domination_number", "evaluate_bound",
    "evaluate_predicates", "find_counterexample", "fit_linear_bound",
    "forcing_closure", "generality_filter", "generate", "graph_names",
    "independence_number", "independent_domination_number",
    "load_or_build_table", "load_table", "matching_number",
    "min_maximal_matching", "named_graph", "parse_graph6", "path", "petersen",
    "prism", "read_export", "read_graph6_file", "render_conjecture",
    "resolve_column", "run_pipeline", "save_table", "sort_conjectures",
    "standard_invariants", "standard_predicates", "star", "to_graph6",
    "total_domination_number", "touch_count_on", "vertex_cover_number",
    "write_export", "write_graph6_file", "zero_forcing_number",
]
