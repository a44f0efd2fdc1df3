"""Helpers shared by the enumeration stages."""
from functools import reduce
from itertools import product
from math import gcd
from typing import Iterable, Iterator, Optional

from cohomone.enums import KindSymbol
from cohomone.exceptions import CohomoneException
from cohomone.groups import Ambient, DiagonalCircle, Factor, GroupExpr, format_group, parse_group, realize

type Vector = tuple[int, ...]


def placed_group(factors: Iterable[Factor], ambient: Ambient, component_order: int = 1) -> Optional[GroupExpr]:
    """The group with the given factors in the ambient, or None when it is not valid there."""
    g = GroupExpr(tuple(factors), component_order, ambient)
    try:
        return parse_group(format_group(g))
    except CohomoneException:
        return None


def circle(weights: Vector) -> Factor:
    return Factor(KindSymbol.torus, (1,), DiagonalCircle(tuple(weights)))


def circles_of(g: GroupExpr) -> list[Factor]:
    return [f for f in g.factors if isinstance(f.embedding, DiagonalCircle)]


def occupied(factors: Iterable[Factor], ambient: Ambient) -> frozenset[int]:
    """Defining coordinates taken by the placed factors; circles take none."""
    placed = [f for f in factors if not isinstance(f.embedding, DiagonalCircle)]
    if not placed:
        return frozenset()
    realization = realize(GroupExpr(tuple(placed), ambient=ambient))
    return frozenset(realization.original(c) for fr in realization.factors for c in fr.coordinates)


def primitive_forms(width: int, bound: int) -> Iterator[Vector]:
    """Nonzero primitive integer vectors with entries in [-bound, bound] and positive leading entry."""
    for v in product(range(-bound, bound + 1), repeat=width):
        lead = next((x for x in v if x), 0)
        if lead > 0 and reduce(gcd, v) == 1:
            yield v
