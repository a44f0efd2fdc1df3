from .candidates import (COMPONENT_ORDERS, UNPLACED, component_variants, diagram_key, enumerate_candidates, group_key,
                         keys_match, placement_key, shape_key)
from .coverage import cross_check_catalog
from .embeddings import NON_EMBEDDINGS, NonEmbedding, fits, rank_one_factors
from .growth import enumerate_Kminus
from .isotropy import enumerate_H, free_torus, semisimple_parts, torus_choices
from .kplus import enumerate_Kplus

__all__ = [
    'COMPONENT_ORDERS',
    'NON_EMBEDDINGS',
    'NonEmbedding',
    'UNPLACED',
    'component_variants',
    'cross_check_catalog',
    'diagram_key',
    'enumerate_H',
    'enumerate_Kminus',
    'enumerate_Kplus',
    'enumerate_candidates',
    'fits',
    'free_torus',
    'group_key',
    'keys_match',
    'placement_key',
    'rank_one_factors',
    'semisimple_parts',
    'shape_key',
    'torus_choices',
]
