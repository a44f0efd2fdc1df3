from .circles import pi1_index_brute_force, pi1_index_circle, sphere_isotropy_circle, weighted_circle
from .lattice import in_span, integer_kernel, lattice_index, reduced_basis, saturate, span_rank
from .patterns import SPHERE_PATTERNS, SphereAction, SpherePattern, pattern_by_name, transitive_pairs_on_sphere
from .recognition import NOT_RECOGNIZED, classify_quotient
from .surjectivity import pi1_surjective_in_SO

__all__ = [
    'NOT_RECOGNIZED',
    'SPHERE_PATTERNS',
    'SphereAction',
    'SpherePattern',
    'classify_quotient',
    'in_span',
    'integer_kernel',
    'lattice_index',
    'pattern_by_name',
    'pi1_index_brute_force',
    'pi1_index_circle',
    'pi1_surjective_in_SO',
    'reduced_basis',
    'saturate',
    'span_rank',
    'sphere_isotropy_circle',
    'transitive_pairs_on_sphere',
    'weighted_circle',
]
