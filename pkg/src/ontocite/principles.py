"""Validate citation records and citation strings, emitting coded diagnostics.

The twelve record-level codes are a frozen public vocabulary. A record
passes (empty diagnostic list) exactly when it is complete: creators,
date, title, and URI present, a real calendar date in YYYY-MM-DD form, an
absolute URI, known format labels, a version, person names in
"Surname, I." form, and a colon-free acronym.

``E-PARSE`` sits outside the record vocabulary: it reports a citation
string that does not match the grammar at all.
"""

from __future__ import annotations

import datetime
import re
from dataclasses import dataclass, fields as dataclass_fields
from typing import Dict, List, Mapping, Optional, Union

from .citation import CitationRecord, parse_canonical
from .exceptions import CitationParseError
from .extract import Agent
from .model import Iri, is_absolute_iri
from .vocab import KNOWN_FORMAT_LABELS

E_CREATOR_MISSING = "E-CREATOR-MISSING"
E_DATE_MISSING = "E-DATE-MISSING"
E_DATE_FORMAT = "E-DATE-FORMAT"
E_TITLE_MISSING = "E-TITLE-MISSING"
E_URI_MISSING = "E-URI-MISSING"
E_URI_RELATIVE = "E-URI-RELATIVE"
E_URI_ONLY = "E-URI-ONLY"
W_VERSION_MISSING = "W-VERSION-MISSING"
W_FORMAT_MISSING = "W-FORMAT-MISSING"
W_FORMAT_UNKNOWN = "W-FORMAT-UNKNOWN"
W_ACRONYM_COLON = "W-ACRONYM-COLON"
W_NAME_FORM = "W-NAME-FORM"
E_PARSE = "E-PARSE"

#: The frozen record-validation vocabulary (E-PARSE is string-level only).
DIAGNOSTIC_CODES = (
    E_CREATOR_MISSING,
    E_DATE_MISSING,
    E_DATE_FORMAT,
    E_TITLE_MISSING,
    E_URI_MISSING,
    E_URI_RELATIVE,
    E_URI_ONLY,
    W_VERSION_MISSING,
    W_FORMAT_MISSING,
    W_FORMAT_UNKNOWN,
    W_ACRONYM_COLON,
    W_NAME_FORM,
)

_DATE_SHAPE_RE = re.compile(r"^\d{4}-\d{2}-\d{2}$")
_NAME_STRING_RE = re.compile(r"[^,]+, (.+)")


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding."""

    code: str
    severity: str  # "error" or "warning"
    message: str
    field: Optional[str] = None


def _error(code: str, message: str, field: Optional[str] = None) -> Diagnostic:
    return Diagnostic(code, "error", message, field)


def _warning(code: str, message: str, field: Optional[str] = None) -> Diagnostic:
    return Diagnostic(code, "warning", message, field)


def _as_fields(record: Union[CitationRecord, Mapping]) -> Dict[str, object]:
    if isinstance(record, CitationRecord):
        return {f.name: getattr(record, f.name) for f in dataclass_fields(record)}
    return dict(record)


def _valid_date(value: str) -> bool:
    if not _DATE_SHAPE_RE.match(value):
        return False
    year, month, day = (int(part) for part in value.split("-"))
    try:
        datetime.date(year, month, day)
    except ValueError:
        return False
    return True


def _initials_well_formed(initials: str) -> bool:
    for chunk in initials.split(" "):
        if len(chunk) != 2 or chunk[1] != ".":
            return False
        if not (chunk[0].isalpha() and chunk[0].isupper()):
            return False
    return True


def _name_form_problem(creator: object) -> Optional[str]:
    """A description of the defect, or None when the name form is fine."""
    if isinstance(creator, Agent):
        if creator.organization:
            return None
        if not creator.surname:
            return "person has an empty surname"
        if creator.initials is not None and not _initials_well_formed(creator.initials):
            return f"initials {creator.initials!r} are not in 'I.' form"
        return None
    if isinstance(creator, Mapping):
        if creator.get("organization"):
            return None
        surname = creator.get("surname", "")
        if not surname:
            return "person has an empty surname"
        initials = creator.get("initials")
        if initials is not None and not _initials_well_formed(initials):
            return f"initials {initials!r} are not in 'I.' form"
        return None
    name = str(creator).strip()
    if not name:
        return "creator name is empty"
    if " " not in name and "," not in name:
        return None  # single token: a mononym or bare group name
    m = _NAME_STRING_RE.fullmatch(name)
    if m and _initials_well_formed(m.group(1)):
        return None
    return f"{name!r} is not in 'Surname, I.' form"


def validate_record(record: Union[CitationRecord, Mapping]) -> List[Diagnostic]:
    """Check a record (or partial field mapping) against the citation
    completeness and form rules; findings come back sorted by code."""
    f = _as_fields(record)
    out: List[Diagnostic] = []

    creators = f.get("creators") or ()
    date = f.get("date")
    title = f.get("full_name")
    uri = f.get("uri")
    acronym = f.get("acronym")
    version = f.get("version")
    formats = f.get("formats")

    if not creators:
        out.append(_error(E_CREATOR_MISSING, "no creators given", "creators"))
    if date is None or date == "":
        out.append(_error(E_DATE_MISSING, "no publication date given", "date"))
    elif not _valid_date(str(date)):
        out.append(_error(
            E_DATE_FORMAT, f"date {date!r} is not a valid YYYY-MM-DD date", "date"
        ))
    if not title:
        out.append(_error(E_TITLE_MISSING, "no ontology name given", "full_name"))

    uri_value = uri.value if isinstance(uri, Iri) else (str(uri) if uri else "")
    if not uri_value:
        out.append(_error(E_URI_MISSING, "no URI given", "uri"))
    elif not is_absolute_iri(uri_value):
        out.append(_error(
            E_URI_RELATIVE, f"URI {uri_value!r} is not absolute", "uri"
        ))
    if uri_value and not creators and not date and not title:
        out.append(_error(
            E_URI_ONLY,
            "citation is a mere link: a URI reveals neither creators, title, "
            "date, nor version",
            "uri",
        ))

    if not version:
        out.append(_warning(W_VERSION_MISSING, "no version given", "version"))
    if not formats:
        out.append(_warning(W_FORMAT_MISSING, "no file format labels given", "formats"))
    else:
        for label in formats:
            if label not in KNOWN_FORMAT_LABELS:
                out.append(_warning(
                    W_FORMAT_UNKNOWN, f"unknown format label {label!r}", "formats"
                ))
    if acronym and ":" in str(acronym):
        out.append(_warning(
            W_ACRONYM_COLON,
            f"acronym {acronym!r} contains ':', the acronym/name separator",
            "acronym",
        ))
    for index, creator in enumerate(creators):
        problem = _name_form_problem(creator)
        if problem:
            out.append(_warning(W_NAME_FORM, problem, f"creators[{index}]"))

    out.sort(key=lambda d: (d.code, d.field or "", d.message))
    return out


def _bare_iri(text: str) -> Optional[str]:
    candidate = text.strip()
    if candidate.startswith("<") and candidate.endswith(">") and len(candidate) > 2:
        candidate = candidate[1:-1]
    if not candidate or any(ch.isspace() for ch in candidate):
        return None
    return candidate if is_absolute_iri(candidate) else None


def validate_citation_string(text: str) -> List[Diagnostic]:
    """Validate a citation given as a string.

    Parseable strings are validated as records; a bare absolute IRI is
    the mere-link anti-pattern and yields exactly ``E-URI-ONLY``; anything
    else yields a single ``E-PARSE`` diagnostic.
    """
    try:
        record = parse_canonical(text)
    except CitationParseError as exc:
        if _bare_iri(text):
            return [_error(
                E_URI_ONLY,
                "citation is a mere link: a URI reveals neither creators, "
                "title, date, nor version",
                "uri",
            )]
        return [_error(E_PARSE, f"citation string does not parse: {exc}")]
    return validate_record(record)
