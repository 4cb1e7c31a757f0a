"""Minimal immutable RDF data model: terms, triples, and a set-semantics graph.

The model is deliberately small: just enough to hold ontology header
triples. Graphs are value objects; iteration order is deterministic
(sorted by the canonical string form of subject, predicate, object), so
everything downstream of a graph is reproducible regardless of source
file ordering.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from .exceptions import RdfModelError

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_FORBIDDEN_IRI_CHARS = set(' \t\n\r\x0b\x0c<>"')
_LANG_RE = re.compile(r"^[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*$")
_BNODE_LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")


def is_absolute_iri(value: str) -> bool:
    """True when the string starts with a scheme and contains no character
    forbidden in an IRI."""
    return bool(
        value
        and _SCHEME_RE.match(value)
        and not _FORBIDDEN_IRI_CHARS.intersection(value)
    )


@dataclass(frozen=True, order=True)
class Iri:
    """An absolute IRI. Validation is syntactic-lite: a scheme must be
    present and whitespace, angle brackets, and quotes are rejected."""

    value: str

    def __post_init__(self):
        if not self.value:
            raise RdfModelError("IRI must be non-empty")
        if not _SCHEME_RE.match(self.value):
            raise RdfModelError(f"IRI lacks a scheme: {self.value!r}")
        bad = _FORBIDDEN_IRI_CHARS.intersection(self.value)
        if bad:
            raise RdfModelError(
                f"IRI contains forbidden character(s) {''.join(sorted(bad))!r}: {self.value!r}"
            )

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Literal:
    """A literal term. A language tag and a datatype are mutually
    exclusive; the primary language subtag is normalized to lowercase."""

    lexical: str
    lang: Optional[str] = None
    datatype: Optional["Iri"] = None

    def __post_init__(self):
        if self.lang is not None and self.datatype is not None:
            raise RdfModelError("literal cannot carry both a language tag and a datatype")
        if self.lang is not None:
            if not _LANG_RE.match(self.lang):
                raise RdfModelError(f"malformed language tag: {self.lang!r}")
            head, sep, rest = self.lang.partition("-")
            object.__setattr__(self, "lang", head.lower() + sep + rest)
        if self.datatype is not None and not isinstance(self.datatype, Iri):
            raise RdfModelError("literal datatype must be an Iri")


@dataclass(frozen=True)
class BlankNode:
    """A blank node with a session-local label, stable within one document."""

    label: str

    def __post_init__(self):
        if not _BNODE_LABEL_RE.match(self.label):
            raise RdfModelError(f"malformed blank node label: {self.label!r}")


Term = Union[Iri, Literal, BlankNode]

_LEXICAL_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def _escape_lexical(text: str) -> str:
    out = []
    for ch in text:
        if ch in _LEXICAL_ESCAPES:
            out.append(_LEXICAL_ESCAPES[ch])
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def nt(term: Term) -> str:
    """Canonical N-Triples token for a term.

    This single rendering doubles as the graph ordering key and as the
    serializer's term formatter, so order and output can never drift apart.
    """
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    if isinstance(term, Literal):
        body = f'"{_escape_lexical(term.lexical)}"'
        if term.lang is not None:
            return f"{body}@{term.lang}"
        if term.datatype is not None:
            return f"{body}^^<{term.datatype.value}>"
        return body
    raise RdfModelError(f"not an RDF term: {term!r}")


@dataclass(frozen=True)
class Triple:
    subject: Union[Iri, BlankNode]
    predicate: Iri
    object: Term

    def __post_init__(self):
        if not isinstance(self.subject, (Iri, BlankNode)):
            raise RdfModelError(
                f"triple subject must be an IRI or blank node, got {type(self.subject).__name__}"
            )
        if not isinstance(self.predicate, Iri):
            raise RdfModelError(
                f"triple predicate must be an IRI, got {type(self.predicate).__name__}"
            )
        if not isinstance(self.object, (Iri, Literal, BlankNode)):
            raise RdfModelError(
                f"triple object must be an RDF term, got {type(self.object).__name__}"
            )


def _triple_key(t: Triple) -> Tuple[str, str, str]:
    return (nt(t.subject), nt(t.predicate), nt(t.object))


class Graph:
    """An immutable set of triples with deterministic iteration order.

    Duplicate triples collapse silently (set semantics). ``insert``
    returns a new graph; for bulk construction pass an iterable to the
    constructor.
    """

    __slots__ = ("_triples", "_ordered")

    def __init__(self, triples: Iterable[Triple] = ()):
        items = tuple(triples)
        for t in items:
            if not isinstance(t, Triple):
                raise RdfModelError(f"graph elements must be triples, got {type(t).__name__}")
        tset = frozenset(items)
        self._triples = tset
        self._ordered = tuple(sorted(tset, key=_triple_key))

    def insert(self, t: Triple) -> "Graph":
        if not isinstance(t, Triple):
            raise RdfModelError(f"cannot insert {type(t).__name__} into a graph")
        if t in self._triples:
            return self
        return Graph(self._triples | {t})

    def match(
        self,
        s: Optional[Term] = None,
        p: Optional[Iri] = None,
        o: Optional[Term] = None,
    ) -> List[Triple]:
        """All triples equal to the pattern on each bound position.

        Absent arguments are wildcards; results follow graph iteration order.
        """
        return [
            t
            for t in self._ordered
            if (s is None or t.subject == s)
            and (p is None or t.predicate == p)
            and (o is None or t.object == o)
        ]

    @property
    def triples(self) -> frozenset:
        return self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._ordered)

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, t: Triple) -> bool:
        return t in self._triples

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self) -> int:
        return hash(self._triples)

    def __repr__(self) -> str:
        return f"Graph({len(self._triples)} triples)"
