import logging

from cohomone.borel_siebenthal import maximal_rank_families, ordered_placements
from cohomone.dataclasses import EnumConfig
from cohomone.groups import GroupExpr, format_group


def enumerate_Kplus(G: GroupExpr, cfg: EnumConfig) -> list[GroupExpr]:
    """
    Candidates for the singular isotropy group of maximal rank: the proper connected subgroups of maximal rank of G with
    at most `cfg.max_factors` factors, in every order of their blocks.

    :param GroupExpr G: A classical simple group.
    :param EnumConfig cfg: Enumeration bounds.
    :return: The subgroups, placed in the ambient of G (SO(n) for a spin group), without repetitions.
    """
    found: dict[str, GroupExpr] = {}
    for family in maximal_rank_families(G, cfg.max_factors, proper_only=True):
        for K in ordered_placements(family):
            found.setdefault(format_group(K), K)

    logging.debug(f'{len(found)} candidates for K+ in {format_group(G)}')
    return list(found.values())
