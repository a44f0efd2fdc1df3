"""Surjectivity of fundamental groups of subgroups of SO(m)."""
import logging

from cohomone.enums import KindSymbol
from cohomone.exceptions import UnsupportedGroupException
from cohomone.groups import Abstract, GroupExpr, format_group, realize
from .lattice import saturate


def pi1_surjective_in_SO(K: GroupExpr) -> bool:
    """
    Whether the inclusion of K into SO(m) is surjective on fundamental groups, i.e. whether K contains a loop that is
    not null-homotopic in SO(m). Then the preimage of K in Spin(m) is connected.

    Standard blocks SO(j) with j >= 2 and unitary blocks always contain such a loop, while the named G2 and Spin(7)
    are simply connected. Otherwise the loop classes are read off the cocharacter lattice of the maximal torus, whose
    vectors map to their coordinate sum mod 2. Circles of quaternionic type contribute nothing.

    :param GroupExpr K: Subgroup with ambient SO(m), m >= 3, and embedding data for every factor.
    :return: True when the map onto the fundamental group Z2 of SO(m) is surjective.
    :raises UnsupportedGroupException: for other ambients or factors without embedding data.
    """
    if K.ambient is None or K.ambient.kind != KindSymbol.so or K.ambient.size < 3:
        raise UnsupportedGroupException(message='Surjectivity on fundamental groups needs an ambient SO(m), m >= 3.')
    if any(isinstance(f.embedding, Abstract) for f in K.factors):
        raise UnsupportedGroupException(message=f'Every factor of {format_group(K)} needs embedding data.')

    realization = realize(K)
    if any(fr.surjective for fr in realization.factors):
        return True

    directions = [d for fr in realization.factors if not fr.quaternionic_circle
                  for d in [x for a in fr.atoms for x in a.directions] + list(fr.abelian)]
    surjective = any(sum(v) % 2 for v in saturate(directions, K.ambient.torus_size))
    logging.debug(f'pi1 surjective for {format_group(K)}: {surjective}')
    return surjective
