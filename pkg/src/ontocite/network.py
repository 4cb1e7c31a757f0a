"""Citation and import networks over a corpus of ontologies.

Edges record that one ontology imports another (``owl:imports``) or
references it (``dcterms:references`` with an IRI object, or a literal
whose text parses as a canonical citation). Unparseable reference texts
contribute no edge but are collected for reporting. Raw in-degree counts
are the usage metric; no derived impact score is computed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from .citation import parse_canonical
from .exceptions import CitationParseError, DuplicateOntologyError, RdfModelError
from .model import Graph, Iri, Literal
from .vocab import DCTERMS_REFERENCES, OWL_IMPORTS

IMPORTS = "imports"
REFERENCES = "references"


class Edge(NamedTuple):
    src: Iri
    dst: Iri
    kind: str


@dataclass(frozen=True)
class CitationGraph:
    """Directed graph over ontology IRIs with typed edges."""

    nodes: frozenset
    edges: frozenset

    def __post_init__(self):
        for edge in self.edges:
            if edge.src not in self.nodes or edge.dst not in self.nodes:
                raise RdfModelError(f"edge endpoint missing from node set: {edge}")
            if edge.kind == IMPORTS and edge.src == edge.dst:
                raise RdfModelError(f"self-loop import edge: {edge}")


def build_network(
    corpus: Iterable[Tuple[Graph, Iri]],
    unparsed: Optional[List[Tuple[Iri, str]]] = None,
) -> CitationGraph:
    """Build the citation graph for a corpus of (graph, ontology IRI) pairs.

    Reference texts that do not parse as canonical citations are appended
    to ``unparsed`` (when given) instead of producing an edge.
    """
    entries = list(corpus)
    seen = set()
    for _, onto in entries:
        if onto in seen:
            raise DuplicateOntologyError(f"ontology appears twice in the corpus: <{onto.value}>")
        seen.add(onto)

    nodes = set(seen)
    edges = set()
    for g, onto in entries:
        for t in g.match(onto, OWL_IMPORTS, None):
            if isinstance(t.object, Iri) and t.object != onto:
                edges.add(Edge(onto, t.object, IMPORTS))
        for t in g.match(onto, DCTERMS_REFERENCES, None):
            if isinstance(t.object, Iri):
                edges.add(Edge(onto, t.object, REFERENCES))
            elif isinstance(t.object, Literal):
                try:
                    record = parse_canonical(t.object.lexical)
                except CitationParseError:
                    if unparsed is not None:
                        unparsed.append((onto, t.object.lexical))
                else:
                    edges.add(Edge(onto, record.uri, REFERENCES))
    nodes.update(edge.dst for edge in edges)
    return CitationGraph(nodes=frozenset(nodes), edges=frozenset(edges))


def usage_counts(cg: CitationGraph) -> Dict[Iri, Tuple[int, int]]:
    """Per-node in-degree split by edge kind, over all nodes (including
    those with no incoming edges); keys iterate in sorted IRI order."""
    tallies: Dict[Iri, List[int]] = {node: [0, 0] for node in sorted(cg.nodes)}
    for edge in cg.edges:
        slot = 0 if edge.kind == IMPORTS else 1
        tallies[edge.dst][slot] += 1
    return {node: (imports, references) for node, (imports, references) in tallies.items()}


def _dot_quote(value: str) -> str:
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(cg: CitationGraph) -> str:
    """Deterministic DOT text: import edges solid, reference edges dashed."""
    lines = ["digraph ontocite {"]
    for node in sorted(cg.nodes):
        lines.append(f"  {_dot_quote(node.value)};")
    for edge in sorted(cg.edges):
        style = "solid" if edge.kind == IMPORTS else "dashed"
        lines.append(
            f"  {_dot_quote(edge.src.value)} -> {_dot_quote(edge.dst.value)} [style={style}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_counts_report(
    cg: CitationGraph,
    unparsed: Iterable[Tuple[Iri, str]] = (),
) -> str:
    """JSON usage report with stable key order: per-node counts plus any
    reference texts that could not be attributed to an ontology."""
    data = {
        "counts": {
            node.value: {"imports": imports, "references": references}
            for node, (imports, references) in usage_counts(cg).items()
        },
        "unparsed_references": [
            {"ontology": onto.value, "text": text}
            for onto, text in sorted(unparsed, key=lambda pair: (pair[0].value, pair[1]))
        ],
    }
    return json.dumps(data, ensure_ascii=False, indent=2) + "\n"
