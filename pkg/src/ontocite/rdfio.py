"""Read and write ontology files.

N-Triples is supported in full; Turtle as the subset needed for ontology
headers (directives, prefixed names, predicate/object lists, anonymous
blank-node property lists, short and long strings, language tags,
datatypes, numeric/boolean shorthand). RDF collections ``( ... )`` are
rejected with a distinct "unsupported construct" error. Parsing is
all-or-nothing: the first malformed statement aborts with its position.
"""

from __future__ import annotations

import re
from pathlib import PurePath
from typing import Dict, List, Optional, Set, Tuple, Union
from urllib.parse import urljoin

from .exceptions import ParseError, RdfModelError, UnknownFormatError
from .model import BlankNode, Graph, Iri, Literal, Term, Triple, nt
from .vocab import (
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
)

_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_HEX_RE = re.compile(r"[0-9A-Fa-f]")
_BNODE_CHARS_RE = re.compile(r"[A-Za-z0-9_]")
_PN_PREFIX_RE = re.compile(r"[A-Za-z0-9_\-]")
_PN_LOCAL_CHARS = set("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_-.%")
_WORD_RE = re.compile(r"[A-Za-z][A-Za-z0-9_\-]*")
_NUMBER_RE = re.compile(
    r"[+-]?(?:\d+\.\d+(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+|\d+)"
)
_IRI_FORBIDDEN = set('<"{}|^`')
_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")


class _Cursor:
    """Character cursor with 1-based line/column tracking."""

    __slots__ = ("text", "pos", "line", "col")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def eof(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.text[i] if i < len(self.text) else ""

    def take(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def startswith(self, prefix: str) -> bool:
        return self.text.startswith(prefix, self.pos)

    def advance(self, n: int) -> None:
        for _ in range(n):
            self.take()

    def error(self, message: str, line: Optional[int] = None, col: Optional[int] = None):
        raise ParseError(line or self.line, col or self.col, message)

    def mark(self) -> Tuple[int, int]:
        return (self.line, self.col)


def _read_escape(cur: _Cursor, allow_echar: bool) -> str:
    mark = cur.mark()
    cur.take()  # backslash
    if cur.eof():
        cur.error("unterminated escape sequence", *mark)
    key = cur.take()
    if key in ("u", "U"):
        width = 4 if key == "u" else 8
        digits = []
        for _ in range(width):
            if cur.eof() or not _HEX_RE.match(cur.peek()):
                cur.error(f"\\{key} escape needs {width} hex digits", *mark)
            digits.append(cur.take())
        code = int("".join(digits), 16)
        if 0xD800 <= code <= 0xDFFF or code > 0x10FFFF:
            cur.error(f"escape does not denote a valid character: U+{code:X}", *mark)
        return chr(code)
    if allow_echar and key in _ECHAR:
        return _ECHAR[key]
    cur.error(f"invalid escape sequence: \\{key}", *mark)


def _read_iriref(cur: _Cursor) -> Tuple[str, Tuple[int, int]]:
    mark = cur.mark()
    cur.take()  # '<'
    out = []
    while True:
        if cur.eof():
            cur.error("unterminated IRI", *mark)
        ch = cur.peek()
        if ch == ">":
            cur.take()
            return "".join(out), mark
        if ch == "\\":
            out.append(_read_escape(cur, allow_echar=False))
            continue
        if ord(ch) <= 0x20 or ch in _IRI_FORBIDDEN:
            cur.error(f"character not allowed in IRI: {ch!r}")
        out.append(cur.take())


def _read_bnode_label(cur: _Cursor) -> str:
    mark = cur.mark()
    cur.advance(2)  # '_:'
    out = []
    while not cur.eof() and _BNODE_CHARS_RE.match(cur.peek()):
        out.append(cur.take())
    if not out:
        cur.error("blank node label is empty", *mark)
    return "".join(out)


def _read_string_body(cur: _Cursor, long_allowed: bool) -> str:
    mark = cur.mark()
    if long_allowed and cur.startswith('"""'):
        cur.advance(3)
        out = []
        while True:
            if cur.eof():
                cur.error("unterminated long string", *mark)
            if cur.peek() == '"':
                run = 0
                while cur.peek(run) == '"':
                    run += 1
                if run >= 3:
                    # quotes beyond the closing delimiter belong to the content
                    for _ in range(run - 3):
                        out.append(cur.take())
                    cur.advance(3)
                    return "".join(out)
                for _ in range(run):
                    out.append(cur.take())
                continue
            if cur.peek() == "\\":
                out.append(_read_escape(cur, allow_echar=True))
            else:
                out.append(cur.take())
    cur.take()  # opening quote
    out = []
    while True:
        if cur.eof():
            cur.error("unterminated string", *mark)
        ch = cur.peek()
        if ch == '"':
            cur.take()
            return "".join(out)
        if ch in ("\n", "\r"):
            cur.error("newline inside string literal", *mark)
        if ch == "\\":
            out.append(_read_escape(cur, allow_echar=True))
        else:
            out.append(cur.take())


def _read_langtag(cur: _Cursor) -> str:
    mark = cur.mark()
    cur.take()  # '@'
    out = []
    if cur.eof() or not cur.peek().isascii() or not cur.peek().isalpha():
        cur.error("language tag must start with a letter", *mark)
    while not cur.eof() and (cur.peek().isascii() and (cur.peek().isalnum() or cur.peek() == "-")):
        out.append(cur.take())
    return "".join(out)


def _make_literal(cur: _Cursor, lexical: str, lang: Optional[str], datatype: Optional[Iri],
                  mark: Tuple[int, int]) -> Literal:
    try:
        return Literal(lexical, lang=lang, datatype=datatype)
    except RdfModelError as exc:
        cur.error(str(exc), *mark)


# --- N-Triples -------------------------------------------------------------


def _nt_skip_between(cur: _Cursor) -> None:
    """Whitespace and comments between statements."""
    while not cur.eof():
        ch = cur.peek()
        if ch in " \t\r\n":
            cur.take()
        elif ch == "#":
            while not cur.eof() and cur.peek() != "\n":
                cur.take()
        else:
            return


def _nt_skip_inline(cur: _Cursor) -> None:
    while not cur.eof() and cur.peek() in " \t":
        cur.take()


def _nt_iri(cur: _Cursor) -> Iri:
    raw, mark = _read_iriref(cur)
    try:
        return Iri(raw)
    except RdfModelError as exc:
        cur.error(str(exc), *mark)


def _nt_term(cur: _Cursor, role: str) -> Term:
    ch = cur.peek()
    if ch == "<":
        return _nt_iri(cur)
    if ch == "_" and cur.peek(1) == ":":
        label = _read_bnode_label(cur)
        return BlankNode(label)
    if ch == '"' and role == "object":
        mark = cur.mark()
        lexical = _read_string_body(cur, long_allowed=False)
        if cur.peek() == "@":
            return _make_literal(cur, lexical, _read_langtag(cur), None, mark)
        if cur.startswith("^^"):
            cur.advance(2)
            if cur.peek() != "<":
                cur.error("datatype must be an IRI")
            return _make_literal(cur, lexical, None, _nt_iri(cur), mark)
        return _make_literal(cur, lexical, None, None, mark)
    cur.error(f"expected {role}" + (" (IRI, blank node, or literal)" if role == "object" else ""))


def parse_ntriples(text: str) -> Graph:
    """Parse N-Triples into a graph.

    Blank node labels are preserved verbatim. Raises :class:`ParseError`
    with the position of the first malformed statement.
    """
    cur = _Cursor(text)
    triples: List[Triple] = []
    while True:
        _nt_skip_between(cur)
        if cur.eof():
            break
        subject = _nt_term(cur, "subject")
        _nt_skip_inline(cur)
        if cur.peek() != "<":
            cur.error("expected predicate IRI")
        predicate = _nt_iri(cur)
        _nt_skip_inline(cur)
        obj = _nt_term(cur, "object")
        _nt_skip_inline(cur)
        if cur.peek() != ".":
            cur.error("expected '.' at end of statement")
        cur.take()
        _nt_skip_inline(cur)
        if cur.peek() == "#":
            while not cur.eof() and cur.peek() != "\n":
                cur.take()
        if not cur.eof() and cur.peek() not in "\r\n":
            cur.error("expected end of line after statement")
        triples.append(Triple(subject, predicate, obj))
    return Graph(triples)


def serialize_ntriples(g: Graph) -> str:
    """Serialize a graph as N-Triples, one statement per line in graph
    iteration order. Output is bit-deterministic and reparses to ``g``."""
    return "".join(f"{nt(t.subject)} {nt(t.predicate)} {nt(t.object)} .\n" for t in g)


# --- Turtle subset ----------------------------------------------------------


class _TurtleParser:
    def __init__(self, text: str):
        self.cur = _Cursor(text)
        self.prefixes: Dict[str, str] = {}
        self.base: Optional[str] = None
        self.triples: List[Triple] = []
        # Explicit _:labels anywhere in the document are reserved so that
        # generated anonymous labels (b1, b2, ...) can never collide.
        self.reserved: Set[str] = set(re.findall(r"_:([A-Za-z0-9_]+)", text))
        self.anon_counter = 0

    # -- lexical helpers

    def skip_ws(self) -> None:
        cur = self.cur
        while not cur.eof():
            ch = cur.peek()
            if ch in " \t\r\n":
                cur.take()
            elif ch == "#":
                while not cur.eof() and cur.peek() != "\n":
                    cur.take()
            else:
                return

    def expect(self, ch: str, what: str) -> None:
        if self.cur.peek() != ch:
            self.cur.error(f"expected {what}")
        self.cur.take()

    def fresh_bnode(self) -> BlankNode:
        while True:
            self.anon_counter += 1
            label = f"b{self.anon_counter}"
            if label not in self.reserved:
                return BlankNode(label)

    def make_iri(self, raw: str, mark: Tuple[int, int]) -> Iri:
        if not _SCHEME_RE.match(raw):
            if self.base is None:
                self.cur.error(f"relative IRI without @base: {raw!r}", *mark)
            raw = urljoin(self.base, raw)
        try:
            return Iri(raw)
        except RdfModelError as exc:
            self.cur.error(str(exc), *mark)

    def read_pname(self) -> Iri:
        cur = self.cur
        mark = cur.mark()
        prefix_chars = []
        while not cur.eof() and _PN_PREFIX_RE.match(cur.peek()):
            prefix_chars.append(cur.take())
        if cur.peek() != ":":
            cur.error("expected prefixed name", *mark)
        cur.take()
        prefix = "".join(prefix_chars)
        if prefix not in self.prefixes:
            cur.error(f"undeclared prefix: {prefix!r}:", *mark)
        local_chars = []
        while not cur.eof():
            ch = cur.peek()
            if ch not in _PN_LOCAL_CHARS:
                break
            if ch == ".":
                # a dot ends the local name unless another name char follows
                if cur.peek(1) not in _PN_LOCAL_CHARS:
                    break
            local_chars.append(cur.take())
        raw = self.prefixes[prefix] + "".join(local_chars)
        try:
            return Iri(raw)
        except RdfModelError as exc:
            cur.error(str(exc), *mark)

    def read_word(self) -> str:
        m = _WORD_RE.match(self.cur.text, self.cur.pos)
        if not m:
            return ""
        return m.group(0)

    # -- directives

    def directive_prefix(self) -> None:
        cur = self.cur
        cur.advance(len("@prefix"))
        self.skip_ws()
        mark = cur.mark()
        prefix_chars = []
        while not cur.eof() and _PN_PREFIX_RE.match(cur.peek()):
            prefix_chars.append(cur.take())
        if cur.peek() != ":":
            cur.error("expected ':' in @prefix declaration", *mark)
        cur.take()
        self.skip_ws()
        if cur.peek() != "<":
            cur.error("expected IRI in @prefix declaration")
        raw, iri_mark = _read_iriref(cur)
        iri = self.make_iri(raw, iri_mark)
        self.skip_ws()
        self.expect(".", "'.' after @prefix declaration")
        self.prefixes["".join(prefix_chars)] = iri.value

    def directive_base(self) -> None:
        cur = self.cur
        cur.advance(len("@base"))
        self.skip_ws()
        if cur.peek() != "<":
            cur.error("expected IRI in @base declaration")
        raw, iri_mark = _read_iriref(cur)
        self.base = self.make_iri(raw, iri_mark).value
        self.skip_ws()
        self.expect(".", "'.' after @base declaration")

    # -- terms

    def parse_subject(self) -> Tuple[Union[Iri, BlankNode], bool]:
        """Returns (subject, came_from_property_list)."""
        cur = self.cur
        ch = cur.peek()
        if ch == "<":
            raw, mark = _read_iriref(cur)
            return self.make_iri(raw, mark), False
        if ch == "_" and cur.peek(1) == ":":
            return BlankNode(_read_bnode_label(cur)), False
        if ch == "[":
            return self.parse_bnode_property_list(), True
        if ch == "(":
            cur.error("unsupported construct: RDF collections are not supported")
        if _WORD_RE.match(ch or "") or ch == ":":
            return self.read_pname(), False
        cur.error("expected subject")

    def parse_verb(self) -> Iri:
        cur = self.cur
        ch = cur.peek()
        if ch == "<":
            raw, mark = _read_iriref(cur)
            return self.make_iri(raw, mark)
        word = self.read_word()
        if word == "a" and cur.peek(len(word)) != ":":
            cur.advance(1)
            return RDF_TYPE
        if _WORD_RE.match(ch or "") or ch == ":":
            return self.read_pname()
        cur.error("expected predicate")

    def parse_object(self) -> Term:
        cur = self.cur
        ch = cur.peek()
        if ch == "<":
            raw, mark = _read_iriref(cur)
            return self.make_iri(raw, mark)
        if ch == "_" and cur.peek(1) == ":":
            return BlankNode(_read_bnode_label(cur))
        if ch == "[":
            return self.parse_bnode_property_list()
        if ch == "(":
            cur.error("unsupported construct: RDF collections are not supported")
        if ch == '"':
            return self.parse_literal()
        m = _NUMBER_RE.match(cur.text, cur.pos)
        if m:
            token = m.group(0)
            cur.advance(len(token))
            if "e" in token or "E" in token:
                dt = XSD_DOUBLE
            elif "." in token:
                dt = XSD_DECIMAL
            else:
                dt = XSD_INTEGER
            return Literal(token, datatype=dt)
        word = self.read_word()
        if word in ("true", "false") and cur.peek(len(word)) != ":":
            cur.advance(len(word))
            return Literal(word, datatype=XSD_BOOLEAN)
        if _WORD_RE.match(ch or "") or ch == ":":
            return self.read_pname()
        cur.error("expected an RDF term as object")

    def parse_literal(self) -> Literal:
        cur = self.cur
        mark = cur.mark()
        lexical = _read_string_body(cur, long_allowed=True)
        if cur.peek() == "@":
            return _make_literal(cur, lexical, _read_langtag(cur), None, mark)
        if cur.startswith("^^"):
            cur.advance(2)
            if cur.peek() == "<":
                raw, iri_mark = _read_iriref(cur)
                return _make_literal(cur, lexical, None, self.make_iri(raw, iri_mark), mark)
            return _make_literal(cur, lexical, None, self.read_pname(), mark)
        return _make_literal(cur, lexical, None, None, mark)

    def parse_bnode_property_list(self) -> BlankNode:
        cur = self.cur
        self.expect("[", "'['")
        node = self.fresh_bnode()
        self.skip_ws()
        if cur.peek() == "]":
            cur.take()
            return node
        self.parse_predicate_object_list(node, terminators="]")
        self.skip_ws()
        self.expect("]", "']' closing anonymous node")
        return node

    # -- statements

    def parse_predicate_object_list(self, subject: Union[Iri, BlankNode],
                                    terminators: str) -> None:
        cur = self.cur
        while True:
            self.skip_ws()
            verb = self.parse_verb()
            while True:
                self.skip_ws()
                obj = self.parse_object()
                self.triples.append(Triple(subject, verb, obj))
                self.skip_ws()
                if cur.peek() == ",":
                    cur.take()
                    continue
                break
            if cur.peek() == ";":
                cur.take()
                self.skip_ws()
                if cur.peek() in terminators or cur.peek() == ";":
                    # tolerate trailing / repeated semicolons
                    while cur.peek() == ";":
                        cur.take()
                        self.skip_ws()
                    return
                continue
            return

    def parse_statement(self) -> None:
        cur = self.cur
        subject, from_list = self.parse_subject()
        self.skip_ws()
        if from_list and cur.peek() == ".":
            cur.take()
            return
        self.parse_predicate_object_list(subject, terminators=".")
        self.skip_ws()
        self.expect(".", "'.' at end of statement")

    def run(self) -> Graph:
        cur = self.cur
        while True:
            self.skip_ws()
            if cur.eof():
                break
            if cur.startswith("@prefix"):
                self.directive_prefix()
            elif cur.startswith("@base"):
                self.directive_base()
            else:
                self.parse_statement()
        return Graph(self.triples)


def parse_turtle(text: str) -> Graph:
    """Parse the supported Turtle subset into a graph.

    Relative IRIs resolve against ``@base`` when declared and are rejected
    otherwise. Anonymous ``[ ... ]`` nodes receive labels ``b1, b2, ...``
    in document order; explicit labels are preserved verbatim.
    """
    return _TurtleParser(text).run()


# --- format detection -------------------------------------------------------

_EXTENSION_LABELS = {
    ".nt": "n-triples",
    ".ttl": "turtle",
    ".n3": "n3",
    ".owl": "rdf/xml",
    ".rdf": "rdf/xml",
    ".obo": "obo",
}

_OWL_XML_NS = "http://www.w3.org/2002/07/owl#"


def detect_format_label(filename: str, content_prefix: str) -> str:
    """Determine the serialization label for a file.

    Content sniffing wins over the extension map; when no rule matches an
    :class:`UnknownFormatError` is raised rather than guessing.
    """
    head = content_prefix
    if "<?xml" in head:
        if "rdf:RDF" in head:
            return "rdf/xml"
        if "<Ontology" in head and _OWL_XML_NS in head:
            return "owl/xml"
    if head.lstrip().startswith("format-version:"):
        return "obo"
    suffix = PurePath(filename).suffix.lower()
    if suffix in _EXTENSION_LABELS:
        return _EXTENSION_LABELS[suffix]
    raise UnknownFormatError(f"unknown format: no detection rule matched {filename!r}")
