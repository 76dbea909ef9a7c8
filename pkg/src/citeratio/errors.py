"""Exception hierarchy.

Every error carries a short ``code`` so the CLI can print a single greppable
line (``error[UNKNOWN_FIELD]: ...``).
"""


class CitationError(Exception):
    code = "CITATION_ERROR"


class MalformedRow(CitationError):
    code = "MALFORMED_ROW"


class NegativeCount(CitationError):
    code = "NEGATIVE_COUNT"


class DuplicateCell(CitationError):
    code = "DUPLICATE_CELL"


class IncompleteTable(CitationError):
    code = "INCOMPLETE_TABLE"


class EmptyInput(CitationError):
    code = "EMPTY_INPUT"


class UnknownField(CitationError, KeyError):
    code = "UNKNOWN_FIELD"

    def __str__(self):
        # KeyError would otherwise repr() the message
        return str(self.args[0]) if self.args else ""


class UnknownYear(CitationError, KeyError):
    code = "UNKNOWN_YEAR"

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ZeroDenominator(CitationError, ZeroDivisionError):
    code = "ZERO_DENOMINATOR"


class EmptyEntityList(CitationError, ValueError):
    code = "EMPTY_ENTITY_LIST"
