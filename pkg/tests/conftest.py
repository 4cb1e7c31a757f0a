from pathlib import Path

import pytest

from ontocite import Agent, CitationRecord, Iri, parse_turtle

FIXTURES = Path(__file__).parent / "fixtures"
HEADERS = FIXTURES / "headers"
NETWORK = FIXTURES / "network"
REFLISTS = FIXTURES / "reflists"
MISC = FIXTURES / "misc"

# The complete worked-example citation the PAV fixture must reproduce.
PAV_CITATION = (
    "Ciccarese, P. and Soiland-Reyes, S. (2014-08-28). "
    "PAV: Provenance, Authoring and Versioning. 2.3.1. http://purl.org/pav/ [rdf/xml]"
)

# The journal article describing the PAV ontology; used as the publication
# reference injected into the ontology header.
PUBLICATION_REF = (
    "Ciccarese, P., Soiland-Reyes, S., Belhajjame, K., Gray, A. J. G., "
    "Goble, C. and Clark, T. (2013). PAV ontology: provenance, authoring and "
    "versioning. Journal of biomedical semantics, 4, 37. doi:10.1186/2041-1480-4-37"
)


def pav_record() -> CitationRecord:
    return CitationRecord(
        creators=(
            Agent(surname="Ciccarese", initials="P."),
            Agent(surname="Soiland-Reyes", initials="S."),
        ),
        date="2014-08-28",
        full_name="Provenance, Authoring and Versioning",
        uri=Iri("http://purl.org/pav/"),
        acronym="PAV",
        version="2.3.1",
        formats=("rdf/xml",),
    )


@pytest.fixture
def pav_graph():
    return parse_turtle((HEADERS / "pav.ttl").read_text("utf-8"))
