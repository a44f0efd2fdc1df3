"""Connected subgroups of maximal rank of the classical simple groups, in standard block structure."""
import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional

from .enums import KindSymbol
from .exceptions import UnsupportedGroupException
from .groups import Ambient, Factor, GroupExpr, StandardBlock, ambient_of, factor_count, format_group

type Block = tuple[KindSymbol, int]

# Block kinds available per ambient, in canonical coordinate order.
_BLOCK_KINDS: dict[KindSymbol, tuple[KindSymbol, ...]] = {
    KindSymbol.su: (KindSymbol.u,),
    KindSymbol.so: (KindSymbol.so, KindSymbol.u),
    KindSymbol.sp: (KindSymbol.u, KindSymbol.sp),
}


@dataclass(frozen=True)
class MaximalRankFamily:
    """
    One maximal rank subgroup in standard block structure.

    ambient (Ambient): The ambient classical group.

    blocks (tuple[Block, ...]): Block kinds with their parameters, e.g. (SO, 4) for SO(4) and (U, 2) for U(2).

    group (GroupExpr): The subgroup with its block embeddings.

    spin_preimage (bool): Whether the subgroup is meant as its preimage in a spin group.
    """
    ambient: Ambient
    blocks: tuple[Block, ...]
    group: GroupExpr
    spin_preimage: bool = False


def _multisets(total: int, kinds: tuple[KindSymbol, ...],
               least: Optional[tuple[int, int]] = None) -> Iterator[list[Block]]:
    """Multisets of blocks with sizes adding up to `total`, each listed in canonical order (kind, descending size)."""
    if total == 0:
        yield []
        return
    for k, kind in enumerate(kinds):
        for size in range(total, 0, -1):
            if least is not None and (k, -size) < least:
                continue
            for rest in _multisets(total - size, kinds, (k, -size)):
                yield [(kind, size)] + rest


def _factor(ambient: Ambient, kind: KindSymbol, size: int, start: int) -> tuple[Factor, int]:
    """Factor for one block starting at `start`, together with the number of coordinates it occupies."""
    length = 2 * size if ambient.is_orthogonal and kind == KindSymbol.u else size
    return Factor(kind, (size,), StandardBlock(start, start + length - 1)), length


def _build(ambient: Ambient, blocks: list[Block]) -> GroupExpr:
    if ambient.kind == KindSymbol.su:
        sizes = tuple(size for _, size in blocks)
        if len(sizes) == 1:
            return GroupExpr((Factor(KindSymbol.su, sizes, StandardBlock(1, ambient.size)),), ambient=ambient)
        return GroupExpr((Factor(KindSymbol.su_composite, sizes, StandardBlock(1, ambient.size)),), ambient=ambient)

    factors, start = [], 1
    for kind, size in blocks:
        f, length = _factor(ambient, kind, size, start)
        factors.append(f)
        start += length
    return GroupExpr(tuple(factors), ambient=ambient)


def _in_parameters(blocks: list[Block]) -> list[Block]:
    """Blocks with SO sizes turned from planes into the parameter of SO(2m)."""
    return [(kind, 2 * size if kind == KindSymbol.so else size) for kind, size in blocks]


def _block_lists(ambient: Ambient) -> Iterator[list[Block]]:
    kinds = _BLOCK_KINDS[ambient.kind]
    if ambient.kind == KindSymbol.so and ambient.size % 2 == 0:
        yield from map(_in_parameters, _multisets(ambient.torus_size, kinds))
        return
    if ambient.kind == KindSymbol.so and ambient.size % 2:
        n = ambient.size // 2
        for k in range(n, -1, -1):
            odd = [(KindSymbol.so, 2 * k + 1)] if k else []
            for rest in _multisets(n - k, kinds):
                # the odd block takes the unpaired last coordinate
                yield _in_parameters(rest) + odd
        return

    yield from _multisets(ambient.torus_size, kinds)


def _is_whole(ambient: Ambient, blocks: list[Block]) -> bool:
    if len(blocks) != 1:
        return False
    kind, size = blocks[0]
    if ambient.kind == KindSymbol.so:
        return kind == KindSymbol.so and size == ambient.size
    return kind == ambient.kind or (ambient.kind == KindSymbol.su and kind == KindSymbol.u)


def maximal_rank_families(G: GroupExpr, max_factors: int = 4, proper_only: bool = True) -> list[MaximalRankFamily]:
    """
    Connected subgroups of maximal rank of a classical simple group, one per conjugacy class of block structures.

    :param GroupExpr G: SU(n), SO(n), Spin(n) or Sp(n).
    :param int max_factors: Largest number of factors to keep.
    :param bool proper_only: Whether to leave out G itself.
    :return: The families, with block coordinates assigned in canonical order.
    :raises UnsupportedGroupException: when G is not a classical simple group.
    """
    ambient = ambient_of(G)
    spin = ambient.kind == KindSymbol.spin
    if spin:
        ambient = Ambient(KindSymbol.so, ambient.size)
    if ambient.kind not in _BLOCK_KINDS:
        raise UnsupportedGroupException(message=f'No block structures for {ambient.text}.')

    families, seen = [], set()
    for blocks in _block_lists(ambient):
        if proper_only and _is_whole(ambient, blocks):
            continue
        group = _build(ambient, blocks)
        key = tuple(sorted(blocks))
        if key in seen or factor_count(group) > max_factors:
            continue
        seen.add(key)
        families.append(MaximalRankFamily(ambient, tuple(blocks), group, spin))

    logging.debug(f'{len(families)} maximal rank subgroups of {format_group(G)} with at most {max_factors} factors')
    return families


def maximal_rank_subgroups(G: GroupExpr, max_factors: int = 4, proper_only: bool = True) -> list[GroupExpr]:
    """
    The groups of :func:`maximal_rank_families`. For a spin group these are subgroups of SO(n), standing for their
    preimages.
    """
    return [family.group for family in maximal_rank_families(G, max_factors, proper_only)]


def ordered_placements(family: MaximalRankFamily) -> list[GroupExpr]:
    """
    The subgroup of a family placed with its blocks in every distinct order, the odd SO block of an odd orthogonal
    ambient staying on the last coordinates.

    :param MaximalRankFamily family: The family.
    :return: One group per distinct block order, the canonical order first.
    """
    ambient = family.ambient
    fixed = [b for b in family.blocks if ambient.is_orthogonal and b[0] == KindSymbol.so and b[1] % 2]
    movable = [b for b in family.blocks if b not in fixed]

    orders = list(dict.fromkeys(permutations(movable)))
    return [_build(ambient, list(order) + fixed) for order in orders]
