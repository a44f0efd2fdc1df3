from .chi_expr import evaluate_chi, parse_chi
from .data import CATALOG_DOCUMENT
from .entries import catalog_entries, entry_by_id, entry_text, instantiate_entry
from .templates import render
from .verification import reports_of, verify_all, verify_entry

__all__ = [
    'CATALOG_DOCUMENT',
    'catalog_entries',
    'entry_by_id',
    'entry_text',
    'evaluate_chi',
    'instantiate_entry',
    'parse_chi',
    'render',
    'reports_of',
    'verify_all',
    'verify_entry',
]
