"""Constant-ratio citation analysis and reference-field normalization."""
from citeratio.comparison import ComparisonResult, Entity, compare_entities
from citeratio.dataset import (
    CitationTable,
    FieldId,
    builtin_nsf_table,
    load_table,
    parse_citation_table,
    resolve_field,
    serialize_citation_table,
    slugify,
    yearly_totals,
)
from citeratio.errors import (
    CitationError,
    DuplicateCell,
    EmptyEntityList,
    EmptyInput,
    IncompleteTable,
    MalformedRow,
    NegativeCount,
    UnknownField,
    UnknownYear,
    ZeroDenominator,
)
from citeratio.normalization import (
    Baseline,
    Method,
    Mode,
    compute_baseline,
    equivalent_citations,
    normalize,
    per_year_rounded_ratios,
)
from citeratio.ratio_law import (
    ConstancyStats,
    RatioSeries,
    ValidationReport,
    constancy_stats,
    ratio,
    ratio_series,
    validate_constancy,
)

__version__ = "0.1.0"
