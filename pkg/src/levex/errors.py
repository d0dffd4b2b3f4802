"""Exception types shared across the engine.

Every user-facing failure carries a stable machine code so the HTTP layer
and the CLI can map it without string matching.
"""

from __future__ import annotations


class LevexError(Exception):
    """Base class for all engine errors."""

    code = "error"


class EmptyQueryError(LevexError):
    code = "empty_query"


class QuerySyntaxError(LevexError):
    code = "syntax_error"


class IllegalCharacterError(QuerySyntaxError):
    code = "illegal_character"

    def __init__(self, char: str, position: int):
        super().__init__(f"illegal character {char!r} at position {position}")
        self.char = char
        self.position = position


class WildcardTooBroadError(LevexError):
    code = "wildcard_too_broad"

    def __init__(self, pattern: str, cap: int):
        super().__init__(
            f"wildcard too broad: pattern {pattern!r} matches more than {cap} terms"
        )
        self.pattern = pattern
        self.cap = cap


class InvalidTermError(LevexError):
    code = "invalid_term"


class BadFilterError(LevexError):
    code = "bad_filter"


class NoSuchEntryError(LevexError):
    code = "no_such_entry"


class NoSuchDocumentError(LevexError):
    code = "no_such_document"


class NoResultsInPeriodError(LevexError):
    code = "no_results_in_period"


class NoBackgroundError(LevexError):
    code = "no_background"


class DegenerateContingencyError(LevexError):
    code = "degenerate_contingency"
