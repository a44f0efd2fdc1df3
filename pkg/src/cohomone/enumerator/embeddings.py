"""Feasibility of subgroups in the ambient group and the rank-one subgroups circles can grow into."""
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable

from cohomone.enums import KindSymbol, NamedTag
from cohomone.exceptions import CohomoneException
from cohomone.groups import (Ambient, Factor, GroupExpr, NamedSpecial, StandardBlock, ambient_group, dim, natural_size,
                             rank)


@dataclass(frozen=True)
class NonEmbedding:
    """
    A known obstruction to embedding a factor into an ambient group.

    name (str): Readable form, e.g. 'SU(n+1) into Sp(n)'.

    applies (Callable[[Factor, Ambient], bool]): Whether the obstruction rules out the factor in the ambient.
    """
    name: str
    applies: Callable[[Factor, Ambient], bool]


NON_EMBEDDINGS: tuple[NonEmbedding, ...] = (
    NonEmbedding('SU(n+1) into Sp(n)',
                 lambda f, a: a.kind == KindSymbol.sp and f.kind in (KindSymbol.su, KindSymbol.u) and f.n > a.size),
    NonEmbedding('SU(m) into SO(k) for 2m > k',
                 lambda f, a: a.is_orthogonal and f.kind in (KindSymbol.su, KindSymbol.u) and 2 * f.n > a.size),
    NonEmbedding('Sp(m) into SO(k) for 4m > k',
                 lambda f, a: a.is_orthogonal and f.kind == KindSymbol.sp and 4 * f.n > a.size),
    NonEmbedding('G2 into SO(k) for k < 7',
                 lambda f, a: f.kind == KindSymbol.g2 and (not a.is_orthogonal or a.size < 7)),
    NonEmbedding('Spin(7) into SO(k) for k < 8',
                 lambda f, a: f.kind == KindSymbol.spin and f.n == 7 and (not a.is_orthogonal or a.size < 8)),
)


def _budget(f: Factor, ambient: Ambient) -> int:
    if f.kind == KindSymbol.torus:
        return 0
    if f.kind == KindSymbol.so and f.n == 2:
        return 2 if ambient.is_orthogonal else 1
    try:
        return natural_size(f, ambient)
    except CohomoneException:
        return 0


@lru_cache(maxsize=65536)
def fits(g: GroupExpr, ambient: Ambient) -> bool:
    """
    Necessary conditions for `g` to be a subgroup of the ambient: rank and dimension, the standard sizes of its factors
    side by side and none of the :data:`NON_EMBEDDINGS`.
    """
    whole = ambient_group(ambient)
    if rank(g) > rank(whole) or dim(g) >= dim(whole):
        return False
    if sum(_budget(f, ambient) for f in g.factors) > ambient.size:
        return False
    return not any(rule.applies(f, ambient) for f in g.factors for rule in NON_EMBEDDINGS)


def rank_one_factors(ambient: Ambient) -> list[Factor]:
    """
    Placed rank-one factors of the ambient a circle of an isotropy group can grow into: SU(2) and SO(3) blocks, Sp(1)
    in its standard, diagonal and irreducible placements and the irreducible SO(3) of SO(5).
    """
    size, width = ambient.size, ambient.torus_size
    found = []

    if ambient.is_orthogonal:
        for a in range(1, size - 1, 2):
            found.append(Factor(KindSymbol.so, (3,), StandardBlock(a, a + 2)))
        for a in range(1, size - 2, 2):
            found.append(Factor(KindSymbol.su, (2,), StandardBlock(a, a + 3)))
        if size % 2:
            for i, j in permutations(range(1, width + 1), 2):
                coords = (2 * i - 1, 2 * i, 2 * j - 1, 2 * j, size)
                found.append(Factor(KindSymbol.so, (3,), NamedSpecial(NamedTag.irr3in5, coords)))
        return found

    for a in range(1, size):
        found.append(Factor(KindSymbol.su, (2,), StandardBlock(a, a + 1)))
    for a in range(1, size - 1):
        found.append(Factor(KindSymbol.so, (3,), StandardBlock(a, a + 2)))
    if ambient.kind == KindSymbol.sp:
        for a in range(1, size + 1):
            found.append(Factor(KindSymbol.sp, (1,), StandardBlock(a, a)))
        for i, j in permutations(range(1, size + 1), 2):
            found.append(Factor(KindSymbol.sp, (1,), NamedSpecial(NamedTag.irr3in5, (i, j))))
            if i < j:
                found.append(Factor(KindSymbol.sp, (1,), NamedSpecial(NamedTag.dsp1, (i, j))))
    return found
