"""Berge cycles in non-uniform hypergraphs: oracles, constructions and verifiers."""

from .hypercore import (
    BergeCertificate,
    FormatError,
    Graph,
    Hypergraph,
    certificate_from_json,
    certificate_to_json,
    check_certificate,
    degree,
    down_close,
    is_downset,
    parse_graph,
    parse_hypergraph,
    serialize_hypergraph,
    shadow2,
    verify_certificate,
)

__version__ = "0.1.0"
# Revision of the file formats and exit-code contract implemented here.
CONTRACT_REVISION = "1"

__all__ = [
    "BergeCertificate",
    "FormatError",
    "Graph",
    "Hypergraph",
    "certificate_from_json",
    "certificate_to_json",
    "check_certificate",
    "degree",
    "down_close",
    "is_downset",
    "parse_graph",
    "parse_hypergraph",
    "serialize_hypergraph",
    "shadow2",
    "verify_certificate",
    "__version__",
    "CONTRACT_REVISION",
]
