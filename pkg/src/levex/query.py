"""Boolean/wildcard query language: parsing, rendering, evaluation.

Grammar (whitespace separated):

    query    :=  conjunct (OR conjunct)*
    conjunct :=  atom+                 adjacency is implicit AND
    atom     :=  pattern | "(" query ")"

OR is a case-insensitive keyword and binds looser than adjacency, so
"a b OR c" reads as (a AND b) OR c. Patterns are token text plus `*`.
Query text is case-folded and hyphen-preserved exactly like document
tokenization. Parsing yields a canonical tree: nested same-operator nodes
are flattened, single-child nodes collapse, children keep input order.
"""

from __future__ import annotations

import datetime
import re
from dataclasses import dataclass
from typing import Iterator, Union

from .corpus import is_token
from .errors import (
    BadFilterError,
    EmptyQueryError,
    IllegalCharacterError,
    InvalidTermError,
    QuerySyntaxError,
)
from .index import DEFAULT_EXPANSION_CAP, Index, is_pattern, union_postings

Node = Union["TermPattern", "And", "Or"]


@dataclass(frozen=True)
class TermPattern:
    pattern: str


@dataclass(frozen=True)
class And:
    children: tuple[Node, ...]


@dataclass(frozen=True)
class Or:
    children: tuple[Node, ...]


@dataclass(frozen=True)
class Filters:
    """Inclusive date range restricting every evaluation."""

    date_from: datetime.date
    date_to: datetime.date

    def __post_init__(self):
        if self.date_from > self.date_to:
            raise BadFilterError(
                f"date_from {self.date_from} is after date_to {self.date_to}"
            )

    def contains(self, date: datetime.date) -> bool:
        return self.date_from <= date <= self.date_to


# -- lexer -------------------------------------------------------------------

_ATOM_RE = re.compile(r"(?:[^\W_]|\*)+(?:-(?:[^\W_]|\*)+)*")


def _lex(text: str) -> Iterator[tuple[str, str, int]]:
    """Yield (kind, value, position) tokens: pattern | or | lparen | rparen."""
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "(":
            yield ("lparen", ch, i)
            i += 1
            continue
        if ch == ")":
            yield ("rparen", ch, i)
            i += 1
            continue
        m = _ATOM_RE.match(text, i)
        if m:
            word = m.group(0)
            if word.lower() == "or":
                yield ("or", word, i)
            else:
                yield ("pattern", word.lower(), i)
            i = m.end()
            continue
        if ch == "-":
            # bare hyphen: punctuation-only fragment, dropped like tokenize does
            i += 1
            continue
        raise IllegalCharacterError(ch, i)


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise QuerySyntaxError("syntax error at end")
        self.pos += 1
        return tok

    def parse_query(self) -> Node:
        disjuncts = [self.parse_conjunct()]
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "or":
                break
            self.take()
            disjuncts.append(self.parse_conjunct())
        return _or(disjuncts)

    def parse_conjunct(self) -> Node:
        atoms = [self.parse_atom()]
        while True:
            tok = self.peek()
            if tok is None or tok[0] not in ("pattern", "lparen"):
                break
            atoms.append(self.parse_atom())
        return _and(atoms)

    def parse_atom(self) -> Node:
        tok = self.take()
        kind, value, pos = tok
        if kind == "pattern":
            return TermPattern(value)
        if kind == "lparen":
            inner = self.parse_query()
            closing = self.take()
            if closing[0] != "rparen":
                raise QuerySyntaxError(f"syntax error at position {closing[2]}")
            return inner
        raise QuerySyntaxError(f"syntax error at position {pos}")


def _and(children: list[Node]) -> Node:
    flat: list[Node] = []
    for c in children:
        flat.extend(c.children) if isinstance(c, And) else flat.append(c)
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def _or(children: list[Node]) -> Node:
    flat: list[Node] = []
    for c in children:
        flat.extend(c.children) if isinstance(c, Or) else flat.append(c)
    return flat[0] if len(flat) == 1 else Or(tuple(flat))


def parse_query(text: str) -> Node:
    """Parse query text into a canonical AST.

    Raises EmptyQueryError for blank input, IllegalCharacterError for
    characters outside the query alphabet, QuerySyntaxError otherwise
    (dangling OR, unbalanced parentheses).
    """
    tokens = list(_lex(text))
    if not tokens:
        raise EmptyQueryError("empty query")
    parser = _Parser(tokens)
    ast = parser.parse_query()
    trailing = parser.peek()
    if trailing is not None:
        raise QuerySyntaxError(f"syntax error at position {trailing[2]}")
    return ast


def render_query(ast: Node) -> str:
    """Canonical text for an AST; parse_query(render_query(ast)) == ast."""
    if isinstance(ast, TermPattern):
        return ast.pattern
    if isinstance(ast, Or):
        return " OR ".join(render_query(c) for c in ast.children)
    if isinstance(ast, And):
        parts = []
        for c in ast.children:
            rendered = render_query(c)
            parts.append(f"({rendered})" if isinstance(c, Or) else rendered)
        return " ".join(parts)
    raise TypeError(f"not a query node: {ast!r}")


def canonical_query(text: str) -> str:
    return render_query(parse_query(text))


# -- evaluation ----------------------------------------------------------------


def _eval_node(ast: Node, index: Index, cap: int) -> set[str]:
    if isinstance(ast, TermPattern):
        return union_postings(index, index.expand_wildcard(ast.pattern, cap))
    if isinstance(ast, Or):
        out: set[str] = set()
        for c in ast.children:
            out |= _eval_node(c, index, cap)
        return out
    if isinstance(ast, And):
        out = _eval_node(ast.children[0], index, cap)
        for c in ast.children[1:]:
            if not out:
                break
            out &= _eval_node(c, index, cap)
        return out
    raise TypeError(f"not a query node: {ast!r}")


def evaluate(
    ast: Node, index: Index, filters: Filters, cap: int = DEFAULT_EXPANSION_CAP
) -> list[str]:
    """Full matching doc-id set (sorted) for a query inside a date range.

    TermPattern is the union of postings over its wildcard expansion; Or is
    set union, And set intersection; the result is intersected with the
    documents dated inside the filter range.
    """
    matched = _eval_node(ast, index, cap)
    kept = [
        doc_id
        for doc_id in matched
        if (d := index.doc_date(doc_id)) is not None and filters.contains(d)
    ]
    kept.sort()
    return kept


def matched_terms(ast: Node, index: Index, cap: int = DEFAULT_EXPANSION_CAP) -> set[str]:
    """Union of the wildcard expansions of every pattern in the query."""
    out: set[str] = set()
    for pattern in iter_patterns(ast):
        out.update(index.expand_wildcard(pattern, cap))
    return out


def iter_patterns(ast: Node) -> Iterator[str]:
    if isinstance(ast, TermPattern):
        yield ast.pattern
    else:
        for c in ast.children:
            yield from iter_patterns(c)


# -- refinement ----------------------------------------------------------------


def refine_conjunctive(ast: Node, term: str) -> Node:
    """Conjoin an exact term to a query (the one-click word-cloud action).

    Returns the input unchanged when the term is already a top-level
    conjunct; never mutates the input.
    """
    if not is_token(term):
        raise InvalidTermError(f"invalid refinement term {term!r}")
    conjuncts = list(ast.children) if isinstance(ast, And) else [ast]
    if TermPattern(term) in conjuncts:
        return ast
    return _and(conjuncts + [TermPattern(term)])


def validate_pattern(pattern: str) -> str:
    """Check a pattern for Token-legal characters plus `*`; returns it."""
    if not is_pattern(pattern):
        raise InvalidTermError(f"invalid pattern {pattern!r}")
    return pattern
