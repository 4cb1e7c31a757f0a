import json
import re
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ontocite import (
    Agent,
    CitationParseError,
    CitationRecord,
    Iri,
    MissingFieldError,
    OntologyMetadata,
    build_record,
    derive_acronym,
    extract_metadata,
    parse_canonical,
    record_from_json,
    render_bibtex,
    render_canonical,
    render_json,
)

from conftest import PAV_CITATION, pav_record
from strategies import citation_records

SCHEMA = json.loads(
    (Path(__file__).parent.parent / "docs" / "citation.schema.json").read_text("utf-8")
)


def _parse_bibtex_fields(entry: str) -> dict:
    """Independent minimal BibTeX reader used as the import oracle: it
    shares no code with the renderer."""
    m = re.match(r"@(\w+)\{([^,]+),\n(.*)\n\}\n$", entry, re.DOTALL)
    assert m, f"not a BibTeX entry: {entry!r}"
    fields = {}
    for line in m.group(3).split(",\n"):
        name, _, value = line.strip().partition(" = ")
        assert value.startswith("{") and value.endswith("}")
        fields[name] = value[1:-1]
    return {"type": m.group(1), "key": m.group(2), "fields": fields}


class TestBuildRecord:
    def test_pav_metadata(self, pav_graph):
        meta = extract_metadata(pav_graph, fmt="rdf/xml")
        record = build_record(meta, derive_acronym(meta, pav_graph))
        assert record == pav_record()

    def test_missing_date(self):
        meta = OntologyMetadata(
            ontology_iri=Iri("http://x"),
            title="T",
            creators=(Agent(surname="Doe", initials="J."),),
        )
        with pytest.raises(MissingFieldError) as exc:
            build_record(meta, (None, "T"))
        assert exc.value.field == "date"

    def test_missing_creator(self):
        meta = OntologyMetadata(ontology_iri=Iri("http://x"), title="T", date="2020-01-01")
        with pytest.raises(MissingFieldError) as exc:
            build_record(meta, (None, "T"))
        assert exc.value.field == "creator"

    def test_organization_only_creator(self):
        meta = OntologyMetadata(
            ontology_iri=Iri("http://x"),
            title="T",
            date="2020-01-01",
            creators=(Agent(surname="Gene Ontology Consortium", organization=True),),
        )
        record = build_record(meta, (None, "T"))
        assert record.creators[0].organization

    def test_revision_dropped_without_version(self):
        meta = OntologyMetadata(
            ontology_iri=Iri("http://x"),
            title="T",
            date="2020-01-01",
            creators=(Agent(surname="Doe"),),
            revision="2",
        )
        assert build_record(meta, (None, "T")).revision is None


class TestRenderCanonical:
    def test_pav_byte_exact(self):
        assert render_canonical(pav_record()) == PAV_CITATION

    def test_optional_elements_omitted(self):
        record = CitationRecord(
            creators=(Agent(surname="Doe", initials="J."),),
            date="2020-01-01",
            full_name="Example Ontology",
            uri=Iri("http://example.org/onto"),
        )
        assert (
            render_canonical(record)
            == "Doe, J. (2020-01-01). Example Ontology. http://example.org/onto"
        )

    def test_revision_in_parentheses(self):
        record = CitationRecord(
            creators=(Agent(surname="Doe", initials="J."),),
            date="2020-01-01",
            full_name="Example",
            uri=Iri("http://example.org/x"),
            version="1.0",
            revision="2",
        )
        assert "1.0(2)." in render_canonical(record)

    def test_organization_rendered_verbatim(self):
        record = CitationRecord(
            creators=(Agent(surname="Gene Ontology Consortium", organization=True),),
            date="2024-06-01",
            full_name="Gene Ontology",
            uri=Iri("http://example.org/go/"),
        )
        assert render_canonical(record).startswith("Gene Ontology Consortium (2024-06-01).")

    @given(record=citation_records())
    @settings(max_examples=300)
    def test_creator_separator_count(self, record):
        rendered = render_canonical(record)
        creators_section = rendered[: rendered.index(f" ({record.date})")]
        n = len(record.creators)
        # the last separator is " and "; the rest are creator-joining ", "
        assert creators_section.count(" and ") >= (1 if n > 1 else 0)
        if n > 1:
            head = creators_section.rsplit(" and ", 1)[0]
            person_commas = sum(1 for a in record.creators[:-1] if a.initials)
            assert head.count(", ") == (n - 2) + person_commas


class TestParseCanonical:
    def test_pav_string(self):
        assert parse_canonical(PAV_CITATION) == pav_record()

    def test_comma_and_angle_bracket_tolerance(self):
        variant = (
            "Ciccarese, P. and Soiland-Reyes, S. (2014-08-28). "
            "PAV: Provenance, Authoring and Versioning. 2.3.1, "
            "<http://purl.org/pav/> [rdf/xml]"
        )
        assert parse_canonical(variant) == pav_record()

    def test_surrounding_whitespace(self):
        assert parse_canonical(f"  {PAV_CITATION}\n") == pav_record()

    def test_missing_date_names_element(self):
        with pytest.raises(CitationParseError) as exc:
            parse_canonical("Nonsense without a date")
        assert exc.value.expected == "date"

    def test_missing_creators(self):
        with pytest.raises(CitationParseError) as exc:
            parse_canonical("(2020-01-01). Title. http://example.org/x")
        assert exc.value.expected == "creators"

    def test_missing_title(self):
        with pytest.raises(CitationParseError) as exc:
            parse_canonical("Doe, J. (2020-01-01). http://example.org/x")
        assert exc.value.expected == "title"

    def test_bad_uri_names_source(self):
        with pytest.raises(CitationParseError) as exc:
            parse_canonical("Doe, J. (2020-01-01). Title. not-absolute")
        assert exc.value.expected == "source"

    def test_multi_word_creator_without_initials_is_organization(self):
        record = parse_canonical(
            "Gene Ontology Consortium (2024-06-01). Gene Ontology. http://example.org/go/"
        )
        assert record.creators == (
            Agent(surname="Gene Ontology Consortium", organization=True),
        )

    def test_single_word_creator_is_mononym(self):
        record = parse_canonical("Plato (0380-01-01). Forms. http://example.org/forms")
        assert record.creators == (Agent(surname="Plato"),)

    def test_duplicate_formats_collapse(self):
        record = parse_canonical(
            "Doe, J. (2020-01-01). Title. http://example.org/x [turtle, turtle]"
        )
        assert record.formats == ("turtle",)

    @given(record=citation_records())
    @settings(max_examples=200, deadline=None)
    def test_round_trip_identity(self, record):
        assert parse_canonical(render_canonical(record)) == record

    @given(
        record=citation_records(),
        angle=st.booleans(),
        comma=st.booleans(),
        pad=st.booleans(),
    )
    @settings(max_examples=200, deadline=None)
    def test_accepted_strings_reach_normal_form_in_one_render(
        self, record, angle, comma, pad
    ):
        s = render_canonical(record)
        uri = record.uri.value
        if angle:
            s = s.replace(f" {uri}", f" <{uri}>")
        if comma and record.version:
            s = s.replace(f". {uri}", f", {uri}").replace(f". <{uri}>", f", <{uri}>")
        if pad:
            s = f"  {s} \n"
        first = parse_canonical(s)
        normal_form = render_canonical(first)
        assert parse_canonical(normal_form) == first


class TestRenderBibtex:
    def test_pav_golden_file(self):
        golden = (Path(__file__).parent / "fixtures" / "golden" / "pav.bib").read_text("utf-8")
        assert render_bibtex(pav_record()) == golden

    def test_organization_golden_file(self):
        from ontocite import build_record, derive_acronym, extract_metadata, parse_turtle
        from conftest import HEADERS

        g = parse_turtle((HEADERS / "go.ttl").read_text("utf-8"))
        meta = extract_metadata(g, fmt="obo")
        record = build_record(meta, derive_acronym(meta, g))
        golden = (Path(__file__).parent / "fixtures" / "golden" / "go.bib").read_text("utf-8")
        assert render_bibtex(record) == golden

    def test_pav_entry_fields_round_trip(self):
        entry = _parse_bibtex_fields(render_bibtex(pav_record()))
        assert entry["type"] == "misc"
        assert entry["key"] == "PAV2014"
        assert entry["fields"]["author"] == "Ciccarese, P. and Soiland-Reyes, S."
        assert entry["fields"]["year"] == "2014"
        assert entry["fields"]["month"] == "08"
        assert entry["fields"]["day"] == "28"
        assert entry["fields"]["howpublished"] == "http://purl.org/pav/"
        assert entry["fields"]["note"] == "version 2.3.1, rdf/xml"

    def test_organization_double_braced(self):
        record = CitationRecord(
            creators=(Agent(surname="Gene Ontology Consortium", organization=True),),
            date="2024-06-01",
            full_name="Gene Ontology",
            uri=Iri("http://example.org/go/"),
        )
        entry = render_bibtex(record)
        assert "author = {{Gene Ontology Consortium}}" in entry

    def test_records_differing_only_in_revision(self):
        base = pav_record()
        with_revision = CitationRecord(
            creators=base.creators,
            date=base.date,
            full_name=base.full_name,
            uri=base.uri,
            acronym=base.acronym,
            version=base.version,
            revision="2",
            formats=base.formats,
        )
        a = _parse_bibtex_fields(render_bibtex(base))
        b = _parse_bibtex_fields(render_bibtex(with_revision))
        differing = {
            name
            for name in set(a["fields"]) | set(b["fields"])
            if a["fields"].get(name) != b["fields"].get(name)
        }
        assert differing == {"note"}

    def test_slug_key_without_acronym(self):
        record = CitationRecord(
            creators=(Agent(surname="Doe", initials="J."),),
            date="2020-01-01",
            full_name="Water Quality Ontology",
            uri=Iri("http://example.org/wqo"),
        )
        entry = _parse_bibtex_fields(render_bibtex(record))
        assert entry["key"] == "water-quality-ontology2020"

    @given(record=citation_records())
    @settings(max_examples=200)
    def test_author_year_round_trip_property(self, record):
        entry = _parse_bibtex_fields(render_bibtex(record))
        assert entry["fields"]["year"] == record.date[:4]
        authors = entry["fields"]["author"].split(" and ")
        organizations = [a for a in record.creators if a.organization]
        assert len(authors) >= 1
        for organization in organizations:
            assert "{" + organization.surname + "}" in entry["fields"]["author"]


class TestRenderJson:
    def test_pav_values(self):
        data = json.loads(render_json(pav_record()))
        assert data["date"] == "2014-08-28"
        assert data["uri"] == "http://purl.org/pav/"
        assert data["acronym"] == "PAV"

    def test_absent_optionals_omitted(self):
        record = CitationRecord(
            creators=(Agent(surname="Doe"),),
            date="2020-01-01",
            full_name="Example",
            uri=Iri("http://example.org/x"),
        )
        data = json.loads(render_json(record))
        assert "acronym" not in data
        assert "version" not in data
        assert "revision" not in data
        assert "initials" not in data["creators"][0]

    def test_key_order(self):
        data = json.loads(render_json(pav_record()))
        assert list(data.keys()) == [
            "creators", "date", "acronym", "full_name", "version", "uri", "formats",
        ]

    def test_single_trailing_newline(self):
        text = render_json(pav_record())
        assert text.endswith("}\n") and not text.endswith("\n\n")

    def test_schema_valid(self):
        jsonschema.validate(json.loads(render_json(pav_record())), SCHEMA)

    @given(record=citation_records())
    @settings(max_examples=300, deadline=None)
    def test_json_round_trip(self, record):
        text = render_json(record)
        jsonschema.validate(json.loads(text), SCHEMA)
        assert record_from_json(text) == record

    @given(record=citation_records())
    @settings(max_examples=100)
    def test_bit_identical_for_equal_records(self, record):
        clone = CitationRecord(
            creators=tuple(record.creators),
            date=record.date,
            full_name=record.full_name,
            uri=Iri(record.uri.value),
            acronym=record.acronym,
            version=record.version,
            revision=record.revision,
            formats=tuple(record.formats),
        )
        assert render_json(record) == render_json(clone)
