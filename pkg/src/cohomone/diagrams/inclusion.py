"""Factor-level inclusion of one embedded group in another."""
from dataclasses import dataclass
from functools import lru_cache

from cohomone.exceptions import CohomoneException, GroupSemanticException
from cohomone.groups import GroupExpr, dim, format_group, rank, realize_together
from cohomone.spheres import in_span


@dataclass(frozen=True)
class Inclusion:
    contained: bool
    detail: str


@lru_cache(maxsize=65536)
def check_inclusion(H: GroupExpr, K: GroupExpr) -> Inclusion:
    """
    Whether H sits inside K by the matching rules on their realizations: every simple part of H is a simple part of
    K or acts only on coordinates K acts on with its simple parts, and the torus of H lies in the one of K.

    Groups without embedding data are compared by rank and dimension only.
    """
    if dim(H) > dim(K) or rank(H) > rank(K):
        return Inclusion(False, f'{format_group(H)} is larger than {format_group(K)}')
    if H.ambient is None or K.ambient is None:
        return Inclusion(True, 'no embedding data, compared by rank and dimension')
    if H.ambient != K.ambient:
        return Inclusion(False, f'ambients {H.ambient.text} and {K.ambient.text} differ')

    try:
        h, k = realize_together(H, K)
    except GroupSemanticException as e:
        return Inclusion(False, e.message)
    except CohomoneException as e:
        return Inclusion(True, f'compared by rank and dimension: {e.message}')

    covered = frozenset(c for a in k.atoms for c in a.coordinates)
    for atom in h.atoms:
        if atom not in k.atoms and not atom.coordinates <= covered:
            return Inclusion(False, f'{atom.kind.value}({atom.n}) on coordinates {sorted(atom.coordinates)} '
                                    f'is not inside {format_group(K)}')

    if not in_span(h.directions, k.directions, K.ambient.torus_size):
        return Inclusion(False, f'the maximal torus of {format_group(H)} is not inside {format_group(K)}')

    return Inclusion(True, 'factors and torus matched')
