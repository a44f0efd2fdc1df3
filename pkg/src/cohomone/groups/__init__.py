from .grammar import format_factor, format_group, parse_group
from .invariants import (center_order, dim, factor_count, is_abelian_factor, rank, weyl_group_elements, weyl_order,
                         weyl_order_brute_force)
from .isomorphisms import abstractly_isomorphic, lie_type, locally_isomorphic
from .model import (Abstract, Ambient, DiagonalCircle, Embedding, Factor, GroupExpr, NamedSpecial, StandardBlock,
                    ambient_group, ambient_of)
from .normalize import normalize_group
from .realization import Atom, Realization, natural_size, realize, realize_together

__all__ = [
    'Abstract',
    'Ambient',
    'Atom',
    'DiagonalCircle',
    'Embedding',
    'Factor',
    'GroupExpr',
    'NamedSpecial',
    'Realization',
    'StandardBlock',
    'abstractly_isomorphic',
    'lie_type',
    'locally_isomorphic',
    'ambient_group',
    'ambient_of',
    'center_order',
    'dim',
    'factor_count',
    'format_factor',
    'format_group',
    'is_abelian_factor',
    'natural_size',
    'normalize_group',
    'parse_group',
    'rank',
    'realize',
    'realize_together',
    'weyl_group_elements',
    'weyl_order',
    'weyl_order_brute_force',
]
