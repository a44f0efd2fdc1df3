"""Singular isotropy groups K- grown from a principal isotropy group H."""
import logging
from typing import Iterator, Optional

from cohomone.dataclasses import EnumConfig
from cohomone.diagrams import SphereWitness, check_inclusion, sphere_witness
from cohomone.enums import KindSymbol, NamedTag
from cohomone.exceptions import CohomoneException
from cohomone.groups import (Ambient, DiagonalCircle, Factor, GroupExpr, NamedSpecial, StandardBlock, dim,
                             format_group, realize)
from cohomone.spheres import in_span
from .embeddings import fits, rank_one_factors
from .isotropy import free_torus
from .kplus import enumerate_Kplus
from .support import Vector, circle, circles_of, occupied, placed_group, primitive_forms


def _pairing(form: Vector, weights: Vector) -> int:
    return sum(a * b for a, b in zip(form, weights))


def _replaced(H: GroupExpr, old: Optional[Factor], new: Factor) -> Optional[GroupExpr]:
    """
    H with `old` replaced by `new`. Circles of H inside the torus of `new` are absorbed by it, the others must commute
    with it.
    """
    ambient, width = H.ambient, H.ambient.torus_size
    # realized next to the circles of H so that their weights and the torus of `new` share coordinates
    try:
        grown = realize(GroupExpr((new,) + tuple(c for c in circles_of(H) if c != old), ambient=ambient)).factors[0]
    except CohomoneException:
        return None
    forms = [form for a in grown.atoms for form in a.commutant]
    directions = [d for a in grown.atoms for d in a.directions] + list(grown.abelian)

    factors = []
    for f in H.factors:
        if f == old:
            continue
        if isinstance(f.embedding, DiagonalCircle):
            weights = f.embedding.weights
            if in_span([weights], directions, width):
                continue
            if any(_pairing(form, weights) for form in forms):
                return None
        factors.append(f)

    return placed_group(factors + [new], ambient)


def _block(kind: KindSymbol, n: int, start: int, end: int) -> Optional[Factor]:
    try:
        return Factor(kind, (n,), StandardBlock(start, end))
    except CohomoneException:
        return None


def _grown_blocks(f: Factor, ambient: Ambient) -> Iterator[Factor]:
    """The block factor one unit larger, on either side, and U(m) for SU(m) outside unitary ambients."""
    if not isinstance(f.embedding, StandardBlock) or f.kind == KindSymbol.su_composite:
        return
    start, end = f.embedding.start, f.embedding.end
    unit = {KindSymbol.so: 1, KindSymbol.sp: 1}.get(f.kind, 2 if ambient.is_orthogonal else 1)

    if f.kind in (KindSymbol.so, KindSymbol.su, KindSymbol.sp, KindSymbol.u):
        yield from filter(None, (_block(f.kind, f.n + 1, start, end + unit),
                                 _block(f.kind, f.n + 1, start - unit, end)))
    if f.kind == KindSymbol.su and ambient.kind != KindSymbol.su:
        yield from filter(None, (_block(KindSymbol.u, f.n, start, end),))


def _moved(factors: list[Factor], ambient: Ambient) -> set[int]:
    """Defining coordinates rotated by the circles among `factors`."""
    moved = set()
    for f in circles_of(GroupExpr(tuple(factors))):
        for i, w in enumerate(f.embedding.weights, start=1):
            if w:
                moved |= {2 * i - 1, 2 * i} if ambient.is_orthogonal else {i}
    return moved


def _named(H: GroupExpr, f: Factor) -> Optional[Factor]:
    """G2 around an SU(3) on six coordinates, or Spin(7) around an SU(4) on eight, in orthogonal ambients."""
    ambient = H.ambient
    if not ambient.is_orthogonal or f.kind != KindSymbol.su or not isinstance(f.embedding, StandardBlock):
        return None
    block = list(range(f.embedding.start, f.embedding.end + 1))

    if f.n == 4 and len(block) == 8:
        return Factor(KindSymbol.spin, (7,), NamedSpecial(NamedTag.spin7so8, tuple(block)))
    if f.n != 3 or len(block) != 6 or ambient.size < 7:
        return None

    others = [g for g in H.factors if g != f]
    taken = occupied(others, ambient) | _moved(others, ambient) | set(block)
    free = sorted(set(range(1, ambient.size + 1)) - taken)
    if not free:
        return None
    return Factor(KindSymbol.g2, (), NamedSpecial(NamedTag.g2so7, tuple(block + free[:1])))


def _containing(H: GroupExpr, kplus_list: list[GroupExpr]) -> Iterator[GroupExpr]:
    for L in kplus_list:
        if L.ambient == H.ambient and dim(L) > dim(H) and check_inclusion(H, L).contained:
            yield L


def _circles_grown(H: GroupExpr) -> Iterator[GroupExpr]:
    """A circle of H replaced by a rank-one factor whose torus contains it."""
    ambient, width = H.ambient, H.ambient.torus_size
    for c in circles_of(H):
        taken = occupied([f for f in H.factors if f != c], ambient)
        for R in rank_one_factors(ambient):
            try:
                placed = realize(GroupExpr((R,), ambient=ambient))
            except CohomoneException:
                continue
            if taken & placed.factors[0].coordinates or not in_span([c.embedding.weights], placed.directions, width):
                continue
            K = _replaced(H, c, R)
            if K is not None:
                yield K


def _circle_added(H: GroupExpr) -> Iterator[GroupExpr]:
    """H times a circle commuting with it, with unit coefficients in the torus commuting with its simple parts."""
    ambient, width = H.ambient, H.ambient.torus_size
    parts = [f for f in H.factors if not isinstance(f.embedding, DiagonalCircle)]
    basis = free_torus(parts, ambient)
    directions = realize(H).directions

    for coefficients in primitive_forms(len(basis), 1):
        v = tuple(sum(c * b[i] for c, b in zip(coefficients, basis)) for i in range(width))
        if in_span([v], directions, width):
            continue
        K = placed_group(H.factors + (circle(v),), ambient)
        if K is not None:
            yield K


def _blocks_grown(H: GroupExpr) -> Iterator[GroupExpr]:
    for f in H.factors:
        for new in _grown_blocks(f, H.ambient):
            K = _replaced(H, f, new)
            if K is not None:
                yield K
        special = _named(H, f)
        if special is not None:
            K = _replaced(H, f, special)
            if K is not None:
                yield K


def enumerate_Kminus(H: GroupExpr, G: GroupExpr, cfg: Optional[EnumConfig] = None,
                     kplus_list: Optional[list[GroupExpr]] = None,
                     projective: bool = False) -> list[tuple[GroupExpr, SphereWitness]]:
    """
    Candidates for the second singular isotropy group, grown from H: the maximal rank candidates containing H, H with a
    circle grown into a rank-one group, H times a circle, H with a block grown by one coordinate, and G2 or Spin(7)
    around an SU(3) or SU(4) block.

    :param GroupExpr H: A placed principal isotropy group.
    :param GroupExpr G: The group acting; H refers to its ambient.
    :param EnumConfig cfg: Enumeration bounds, the defaults when omitted.
    :param list[GroupExpr] kplus_list: Maximal rank candidates of G, enumerated from `cfg` when omitted.
    :param bool projective: Whether real projective quotients are admitted.
    :return: Pairs of K- and the recognition of K-/H, for K- that fit into the ambient.
    """
    if kplus_list is None:
        kplus_list = enumerate_Kplus(G, cfg or EnumConfig())
    found: dict[str, tuple[GroupExpr, SphereWitness]] = {}
    try:
        candidates = [*_containing(H, kplus_list), *_circles_grown(H), *_circle_added(H), *_blocks_grown(H)]
    except CohomoneException as e:
        logging.debug(f'No growth from {format_group(H)}: {e.message}')
        return []

    for K in candidates:
        text = format_group(K)
        if text in found or dim(K) <= dim(H) or not fits(K, H.ambient):
            continue
        witness = sphere_witness(K, H)
        if witness.recognized(projective):
            found[text] = K, witness

    logging.debug(f'{len(found)} candidates for K- over {format_group(H)}')
    return list(found.values())
