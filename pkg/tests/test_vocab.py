"""Pin the published extraction vocabulary: the module constants, the
shipped machine-readable table, and the documented IRIs must all agree."""

from ontocite import vocab


def test_shipped_table_matches_module():
    assert vocab.shipped_ladders() == vocab.ladders_as_dict()


def test_title_ladder_pinned():
    assert [p.value for p in vocab.TITLE_LADDER] == [
        "http://purl.org/dc/terms/title",
        "http://purl.org/dc/elements/1.1/title",
        "http://www.w3.org/2000/01/rdf-schema#label",
        "http://www.w3.org/2004/02/skos/core#prefLabel",
    ]


def test_creator_ladder_pinned():
    assert [p.value for p in vocab.CREATOR_LADDER] == [
        "http://purl.org/dc/terms/creator",
        "http://purl.org/dc/elements/1.1/creator",
        "http://purl.org/pav/createdBy",
        "http://xmlns.com/foaf/0.1/maker",
        "http://schema.org/creator",
    ]


def test_date_ladder_pinned():
    assert [p.value for p in vocab.DATE_LADDER] == [
        "http://purl.org/dc/terms/issued",
        "http://purl.org/pav/createdOn",
        "http://purl.org/dc/terms/created",
        "http://purl.org/pav/lastUpdateOn",
        "http://purl.org/dc/terms/modified",
    ]


def test_version_ladder_pinned():
    assert [p.value for p in vocab.VERSION_LADDER] == [
        "http://www.w3.org/2002/07/owl#versionInfo",
        "http://purl.org/pav/version",
        "http://schema.org/version",
    ]


def test_acronym_ladder_pinned():
    assert [p.value for p in vocab.ACRONYM_LADDER] == [
        "http://omv.ontoware.org/2005/05/ontology#acronym",
        "http://identifiers.org/idot/preferredPrefix",
        "http://purl.org/vocab/vann/preferredNamespacePrefix",
    ]


def test_revision_property_pinned():
    assert vocab.ONTOCITE_REVISION.value == "http://purl.org/ontocite/revision"


def test_reference_property_pinned():
    assert vocab.DCTERMS_REFERENCES.value == "http://purl.org/dc/terms/references"


def test_format_label_vocabulary_closed():
    assert vocab.KNOWN_FORMAT_LABELS == (
        "rdf/xml", "owl/xml", "obo", "n3", "turtle", "n-triples",
    )
    assert all(label == label.lower() for label in vocab.KNOWN_FORMAT_LABELS)
