"""Invariants of homogeneous spaces G/K."""
import logging

from .dataclasses import QuotientInvariants
from .exceptions import InconsistentDescriptorException, UnsupportedGroupException
from .groups import GroupExpr, dim, format_group, rank, weyl_order


def dim_quotient(G: GroupExpr, K: GroupExpr) -> int:
    value = dim(G) - dim(K)
    if value < 0:
        raise InconsistentDescriptorException(
            message=f'{format_group(K)} has larger dimension than {format_group(G)}.')
    return value


def corank(G: GroupExpr, K: GroupExpr) -> int:
    return rank(G) - rank(K)


def euler_char(G: GroupExpr, K: GroupExpr) -> int:
    """
    Euler characteristic of G/K: zero unless K has maximal rank, and otherwise the Weyl order ratio o(G)/o(K0)
    divided by the number of components of K, G/K0 being a finite cover of G/K with fiber K/K0.

    :param GroupExpr G: Connected ambient group.
    :param GroupExpr K: Subgroup.
    :return: chi(G/K).
    :raises InconsistentDescriptorException: when one of the divisions is not exact.
    """
    if not G.is_connected:
        raise UnsupportedGroupException(message='The group G must be connected.')
    if corank(G, K) < 0:
        raise InconsistentDescriptorException(message=f'{format_group(K)} has larger rank than {format_group(G)}.')
    if corank(G, K) > 0:
        return 0

    quotient, remainder = divmod(weyl_order(G), weyl_order(K))
    if remainder:
        raise InconsistentDescriptorException(
            message=f'Weyl order of {format_group(K)} does not divide the one of {format_group(G)}.')

    euler, remainder = divmod(quotient, K.component_order)
    if remainder:
        raise InconsistentDescriptorException(
            message=f'{K.component_order} components do not divide chi = {quotient} of the identity component.')

    logging.debug(f'chi({format_group(G)} / {format_group(K)}) = {euler}')
    return euler


def quotient_invariants(G: GroupExpr, K: GroupExpr) -> QuotientInvariants:
    return QuotientInvariants(dim_quotient=dim_quotient(G, K), corank=corank(G, K), euler=euler_char(G, K))
