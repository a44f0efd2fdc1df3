from .checks import detect_non_primitive, kernel_factors, necessary_filters, validate_diagram
from .inclusion import Inclusion, check_inclusion
from .invariants import action_kernel_order, chi_terms, dim_M, euler_char_M
from .model import Diagram, SphereWitness, format_diagram, parse_diagram, sphere_witness
from .normalize import normalize_diagram

__all__ = [
    'Diagram',
    'Inclusion',
    'SphereWitness',
    'action_kernel_order',
    'check_inclusion',
    'chi_terms',
    'detect_non_primitive',
    'dim_M',
    'euler_char_M',
    'format_diagram',
    'kernel_factors',
    'necessary_filters',
    'normalize_diagram',
    'parse_diagram',
    'sphere_witness',
    'validate_diagram',
]
