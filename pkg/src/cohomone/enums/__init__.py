from .families import GroupFamily
from .groups import FieldTag, KindSymbol, Marker, NamedTag
from .output_format import OutputFormat
from .results import CheckVerdict, Primitivity, QuotientType, Verdict

__all__ = [
    'CheckVerdict',
    'FieldTag',
    'GroupFamily',
    'KindSymbol',
    'Marker',
    'NamedTag',
    'OutputFormat',
    'Primitivity',
    'QuotientType',
    'Verdict',
]
