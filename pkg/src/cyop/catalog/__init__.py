"""The degree-two catalog: data, loading and verification."""

from .entries import (
    CatalogEntry,
    default_catalog_path,
    get_entry,
    load_catalog,
    parse_catalog,
    parse_factored,
    parse_record,
)
from .verify import (
    VerificationOutcome,
    export_report,
    fingerprint_lookup,
    source_check,
    source_series,
    summarize,
    verify_all,
    verify_entry,
)

__all__ = [
    "CatalogEntry", "default_catalog_path", "get_entry", "load_catalog", "parse_catalog",
    "parse_factored", "parse_record", "VerificationOutcome", "export_report",
    "fingerprint_lookup", "source_check", "source_series", "summarize", "verify_all",
    "verify_entry",
]
