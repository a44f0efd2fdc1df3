import pbr.version

from .catalog import catalog_entries, instantiate_entry, verify_all, verify_entry
from .diagrams import Diagram, euler_char_M, parse_diagram, validate_diagram
from .enumerator import cross_check_catalog, enumerate_candidates
from .groups import GroupExpr, format_group, parse_group
from .homogeneous import euler_char

__all__ = [
    'Diagram',
    'GroupExpr',
    'catalog_entries',
    'cross_check_catalog',
    'enumerate_candidates',
    'euler_char',
    'euler_char_M',
    'format_group',
    'instantiate_entry',
    'parse_diagram',
    'parse_group',
    'validate_diagram',
    'verify_all',
    'verify_entry',
]

__version__ = pbr.version.VersionInfo('cohomone').version_string()
