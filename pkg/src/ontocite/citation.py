"""The citation record: assembly, rendering, and round-trip parsing.

The canonical plain-text form is::

    CREATORS (DATE). TITLE. [VERSION[(REVISION)]. ]URI[ [FORMATS]]

Creators render as ``Surname, I.`` joined with ``", "`` and ``" and "``
before the last; organizations render verbatim. The parser is the
inverse on rendered output and additionally tolerates a comma between
version and URI, an angle-bracketed URI, and surrounding whitespace
(see ``docs/grammar.abnf`` for the full grammar and its known
ambiguities).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import CitationParseError, MissingFieldError, RdfModelError
from .extract import Agent, OntologyMetadata
from .model import Iri

_DATE_GROUP_RE = re.compile(r"\((\d{4}-\d{2}-\d{2})\)\.(?= |$)")
_INITIALS_RE = re.compile(r"[A-Z]\.(?: [A-Z]\.)*")
_VERSION_TOKEN_RE = re.compile(r"([^\s()]+?)(?:\(([^\s()]+)\))?")


@dataclass(frozen=True)
class CitationRecord:
    """One instance of the reference template."""

    creators: Tuple[Agent, ...]
    date: str
    full_name: str
    uri: Iri
    acronym: Optional[str] = None
    version: Optional[str] = None
    revision: Optional[str] = None
    formats: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "creators", tuple(self.creators))
        object.__setattr__(self, "formats", tuple(self.formats))


def build_record(
    meta: OntologyMetadata, acronym_split: Tuple[Optional[str], str]
) -> CitationRecord:
    """Assemble a record from extracted metadata.

    Creators, date, and title are hard requirements; everything else is
    optional and left to the validator to flag.
    """
    if not meta.creators:
        raise MissingFieldError("creator")
    if not meta.date:
        raise MissingFieldError("date")
    if not meta.title:
        raise MissingFieldError("title")
    acronym, full_name = acronym_split
    return CitationRecord(
        creators=tuple(meta.creators),
        date=meta.date,
        full_name=full_name,
        uri=meta.ontology_iri,
        acronym=acronym,
        version=meta.version,
        revision=meta.revision if meta.version else None,
        formats=(meta.format_label,) if meta.format_label else (),
    )


def draft_fields(
    meta: OntologyMetadata,
    acronym_split: Optional[Tuple[Optional[str], str]] = None,
) -> Dict[str, object]:
    """A partial, validator-ready field mapping: present fields only, no
    hard failures on missing ones."""
    fields: Dict[str, object] = {}
    if meta.creators:
        fields["creators"] = list(meta.creators)
    if meta.date:
        fields["date"] = meta.date
    if acronym_split is not None:
        acronym, full_name = acronym_split
        if acronym:
            fields["acronym"] = acronym
        fields["full_name"] = full_name
    elif meta.title:
        fields["full_name"] = meta.title
    if meta.version:
        fields["version"] = meta.version
        if meta.revision:
            fields["revision"] = meta.revision
    fields["uri"] = meta.ontology_iri
    fields["formats"] = [meta.format_label] if meta.format_label else []
    return fields


# --- rendering ---------------------------------------------------------------


def _render_agent(agent: Agent) -> str:
    if agent.organization or not agent.initials:
        return agent.surname
    return f"{agent.surname}, {agent.initials}"


def _render_creators(creators: Sequence[Agent]) -> str:
    rendered = [_render_agent(a) for a in creators]
    if len(rendered) == 1:
        return rendered[0]
    return ", ".join(rendered[:-1]) + " and " + rendered[-1]


def _title_text(record: CitationRecord) -> str:
    if record.acronym:
        return f"{record.acronym}: {record.full_name}"
    return record.full_name


def _version_text(record: CitationRecord) -> str:
    if record.revision:
        return f"{record.version}({record.revision})"
    return record.version or ""


def render_canonical(record: CitationRecord) -> str:
    """The canonical plain-text reference for a record."""
    parts = [
        f"{_render_creators(record.creators)} ({record.date}).",
        f"{_title_text(record)}.",
    ]
    if record.version:
        parts.append(f"{_version_text(record)}.")
    parts.append(record.uri.value)
    if record.formats:
        parts.append("[" + ", ".join(record.formats) + "]")
    return " ".join(parts)


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "-", name).strip("-").lower()


def _bibtex_author(agent: Agent) -> str:
    if agent.organization:
        return "{" + agent.surname + "}"
    if agent.initials:
        return f"{agent.surname}, {agent.initials}"
    return agent.surname


def render_bibtex(record: CitationRecord) -> str:
    """A ``@misc`` BibTeX entry for the record; group names are
    double-braced so reference managers do not split them."""
    key = (record.acronym or _slug(record.full_name)) + record.date[:4]
    year, month, day = record.date.split("-")
    fields = [
        ("author", " and ".join(_bibtex_author(a) for a in record.creators)),
        ("title", _title_text(record)),
        ("year", year),
        ("month", month),
        ("day", day),
        ("howpublished", record.uri.value),
    ]
    note_parts = []
    if record.version:
        note_parts.append(f"version {_version_text(record)}")
    if record.formats:
        note_parts.append(", ".join(record.formats))
    if note_parts:
        fields.append(("note", ", ".join(note_parts)))
    lines = [f"@misc{{{key},"]
    lines.extend(f"  {name} = {{{value}}}," for name, value in fields[:-1])
    last_name, last_value = fields[-1]
    lines.append(f"  {last_name} = {{{last_value}}}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def record_to_dict(record: CitationRecord) -> Dict[str, object]:
    """Plain-data view with fixed key order; absent optionals are omitted."""
    creators = []
    for agent in record.creators:
        entry: Dict[str, object] = {"surname": agent.surname}
        if agent.initials:
            entry["initials"] = agent.initials
        entry["organization"] = agent.organization
        creators.append(entry)
    data: Dict[str, object] = {"creators": creators, "date": record.date}
    if record.acronym:
        data["acronym"] = record.acronym
    data["full_name"] = record.full_name
    if record.version:
        data["version"] = record.version
    if record.revision:
        data["revision"] = record.revision
    data["uri"] = record.uri.value
    data["formats"] = list(record.formats)
    return data


def render_json(record: CitationRecord) -> str:
    """Canonical JSON for the record (schema in ``docs/citation.schema.json``);
    bit-identical for equal records, single trailing newline."""
    return json.dumps(record_to_dict(record), ensure_ascii=False, indent=2) + "\n"


def record_from_json(text: str) -> CitationRecord:
    """Inverse of :func:`render_json`."""
    data = json.loads(text)
    for required in ("creators", "date", "full_name", "uri"):
        if required not in data:
            raise ValueError(f"citation JSON is missing {required!r}")
    creators = tuple(
        Agent(
            surname=entry["surname"],
            initials=entry.get("initials"),
            organization=bool(entry.get("organization", False)),
        )
        for entry in data["creators"]
    )
    return CitationRecord(
        creators=creators,
        date=data["date"],
        full_name=data["full_name"],
        uri=Iri(data["uri"]),
        acronym=data.get("acronym"),
        version=data.get("version"),
        revision=data.get("revision"),
        formats=tuple(data.get("formats", ())),
    )


# --- parsing -----------------------------------------------------------------


def _parse_creator_cells(cells: List[str], position: int) -> List[Agent]:
    agents: List[Agent] = []
    i = 0
    while i < len(cells):
        cell = cells[i]
        if not cell:
            raise CitationParseError(position, "creators", "empty creator name")
        if i + 1 < len(cells) and _INITIALS_RE.fullmatch(cells[i + 1]):
            agents.append(Agent(surname=cell, initials=cells[i + 1], raw=f"{cell}, {cells[i + 1]}"))
            i += 2
        elif " " in cell:
            agents.append(Agent(surname=cell, organization=True, raw=cell))
            i += 1
        else:
            agents.append(Agent(surname=cell, raw=cell))
            i += 1
    return agents


_DATE_SHAPE_ANYWHERE_RE = re.compile(r"\(\d{4}-\d{2}-\d{2}\)\.")


def _parse_creators(section: str, position: int) -> Tuple[Agent, ...]:
    if not section:
        raise CitationParseError(position, "creators", "no creators before the date")
    if _DATE_SHAPE_ANYWHERE_RE.search(section):
        # a date element inside a creator name would shift the split point
        # on re-parse; no real name looks like this
        raise CitationParseError(
            position, "creators", "creator names may not contain a date element"
        )
    head, sep, tail = section.rpartition(" and ")
    groups = [head, tail] if sep else [section]
    agents: List[Agent] = []
    for group in groups:
        agents.extend(_parse_creator_cells(group.split(", "), position))
    return tuple(agents)


def parse_canonical(text: str) -> CitationRecord:
    """Parse a canonical citation string back into a record.

    Tolerated variants normalize away: a comma between version and URI,
    an angle-bracketed URI, and arbitrary surrounding whitespace.
    Raises :class:`CitationParseError` naming the failing element.
    """
    s = " ".join(text.split())
    m = _DATE_GROUP_RE.search(s)
    if not m:
        raise CitationParseError(0, "date", "no '(YYYY-MM-DD).' element found")
    creators = _parse_creators(s[: m.start()].rstrip(), 0)
    date = m.group(1)

    rest_start = m.end() + 1 if m.end() < len(s) else m.end()
    rest = s[rest_start:]
    if not rest:
        raise CitationParseError(m.end(), "title", "nothing follows the date")

    formats: Tuple[str, ...] = ()
    if rest.endswith("]"):
        bracket = rest.rfind(" [")
        if bracket >= 0:
            labels = [t.strip() for t in rest[bracket + 2 : -1].split(",")]
            seen: List[str] = []
            for label in labels:
                if label and label not in seen:
                    seen.append(label)
            formats = tuple(seen)
            rest = rest[:bracket].rstrip()
    if not rest:
        raise CitationParseError(len(s), "source", "no URI before the format list")

    space = rest.rfind(" ")
    uri_token = rest[space + 1 :]
    before = rest[:space + 1].rstrip() if space >= 0 else ""
    if uri_token.startswith("<") and uri_token.endswith(">") and len(uri_token) > 2:
        uri_token = uri_token[1:-1]
    uri_position = rest_start + (space + 1 if space >= 0 else 0)
    try:
        uri = Iri(uri_token)
    except RdfModelError as exc:
        raise CitationParseError(uri_position, "source", str(exc)) from None

    if not before:
        raise CitationParseError(m.end(), "title", "no title between date and URI")
    if before[-1] not in ".,":
        raise CitationParseError(
            uri_position, "source", "expected '.' or ',' before the URI"
        )
    body = before[:-1].rstrip()
    if not body:
        raise CitationParseError(m.end(), "title", "empty title")

    version: Optional[str] = None
    revision: Optional[str] = None
    left, sep, tail = body.rpartition(". ")
    if sep and tail:
        vm = _VERSION_TOKEN_RE.fullmatch(tail)
        if vm and any(ch.isdigit() for ch in vm.group(1)):
            version, revision = vm.group(1), vm.group(2)
            body = left

    acronym: Optional[str] = None
    full_name = body
    head, colon, remainder = body.partition(":")
    if colon and head.strip() and remainder.strip():
        acronym = head.strip()
        full_name = remainder.strip()

    return CitationRecord(
        creators=creators,
        date=date,
        full_name=full_name,
        uri=uri,
        acronym=acronym,
        version=version,
        revision=revision,
        formats=formats,
    )
