"""Candidate group diagrams with positive Euler characteristic for a classical simple group."""
import logging
from functools import reduce
from math import gcd
from typing import Iterator, Optional

from cohomone.dataclasses import EnumConfig
from cohomone.diagrams import (Diagram, SphereWitness, dim_M, euler_char_M, format_diagram, necessary_filters,
                               normalize_diagram, validate_diagram)
from cohomone.enums import KindSymbol
from cohomone.exceptions import CohomoneException
from cohomone.groups import GroupExpr, Realization, ambient_of, format_group, lie_type, rank, realize
from .growth import enumerate_Kminus
from .isotropy import enumerate_H
from .kplus import enumerate_Kplus

# Orders of the component groups tried on diagrams with a circle as one of the spheres.
COMPONENT_ORDERS = (2, 3)

# Placement invariants of a group without embedding data.
UNPLACED = -1

type ShapeKey = tuple[int, tuple[tuple[str, int], ...]]
type PlacementKey = tuple[int, tuple[int, ...]]
type GroupKey = tuple[ShapeKey, PlacementKey]
type DiagramKey = tuple[GroupKey, tuple[GroupKey, ...]]


def shape_key(g: GroupExpr) -> ShapeKey:
    """Number of components and Lie algebra type of a group, forgetting how it is embedded."""
    return g.component_order, lie_type(g)


def _moved(r: Realization) -> int:
    moved = {c for fr in r.factors for c in fr.coordinates}
    for v in r.abelian:
        for i, x in enumerate(v, start=1):
            if x:
                moved |= {2 * i - 1, 2 * i} if r.ambient.is_orthogonal else {i}
    return len(moved)


def _center(r: Realization) -> tuple[int, ...]:
    if len(r.abelian) != 1:
        return (len(r.abelian),)
    v = r.abelian[0]
    g = reduce(gcd, v) or 1
    return (1,) + tuple(sorted(abs(x) // g for x in v))


def placement_key(g: GroupExpr) -> PlacementKey:
    """
    Invariants of the embedding of a group under conjugation in its ambient: the number of defining coordinates it
    moves and its central torus, with the weights up to order and sign when the torus is a circle.

    :return: The invariants, or (UNPLACED, ()) for a group without embedding data.
    """
    try:
        r = realize(g)
    except CohomoneException:
        return UNPLACED, ()
    return _moved(r), _center(r)


def group_key(g: GroupExpr) -> GroupKey:
    return shape_key(g), placement_key(g)


def diagram_key(d: Diagram) -> DiagramKey:
    """Invariants of a diagram: those of H and, unordered, those of K- and K+."""
    return group_key(d.H), tuple(sorted((group_key(d.Kminus), group_key(d.Kplus))))


def _compatible(a: GroupKey, b: GroupKey) -> bool:
    (shape_a, (moved_a, center_a)), (shape_b, (moved_b, center_b)) = a, b
    if shape_a != shape_b:
        return False
    if UNPLACED in (moved_a, moved_b):
        return True
    return moved_a == moved_b and center_a == center_b


def keys_match(a: DiagramKey, b: DiagramKey) -> bool:
    """
    Whether two diagrams have the same invariants, where a group without embedding data matches every placement of
    its Lie algebra type.
    """
    (h_a, (first_a, second_a)), (h_b, (first_b, second_b)) = a, b
    if not _compatible(h_a, h_b):
        return False
    return _compatible(first_a, first_b) and _compatible(second_a, second_b) \
        or _compatible(first_a, second_b) and _compatible(second_a, first_b)


def _admissible(d: Diagram) -> bool:
    try:
        return validate_diagram(d).passed and necessary_filters(d).passed and euler_char_M(d) > 0 \
            and dim_M(d) % 2 == 0
    except CohomoneException as e:
        logging.debug(f'Dropping {d.text}: {e.message}')
        return False


def component_variants(d: Diagram) -> Iterator[Diagram]:
    """
    Disconnected versions of a connected diagram with a circle among its spheres: H and K-, H and K+, or all three
    with a component group of order 2 or 3.
    """
    if not (d.H.is_connected and d.Kminus.is_connected and d.Kplus.is_connected):
        return
    if min(d.wminus.l, d.wplus.l) != 1:
        return

    for m in COMPONENT_ORDERS:
        H = d.H.with_components(m)
        yield Diagram(d.G, d.Kminus.with_components(m), d.Kplus, H, d.spin_level)
        yield Diagram(d.G, d.Kminus, d.Kplus.with_components(m), H, d.spin_level)
        yield Diagram(d.G, d.Kminus.with_components(m), d.Kplus.with_components(m), H, d.spin_level)


def _connected(G: GroupExpr, cfg: EnumConfig, spin: bool) -> Iterator[Diagram]:
    """
    Connected candidates. K+ has maximal rank, so a positive Euler characteristic needs H of corank one in G: with H
    of maximal rank the parity filter fails, and K+/H is not a sphere for smaller H.
    """
    projective = spin and cfg.include_projective
    kplus_list = enumerate_Kplus(G, cfg)
    grown: dict[GroupExpr, list[tuple[GroupExpr, SphereWitness]]] = {}

    for Kplus in kplus_list:
        for H, _ in enumerate_H(Kplus, cfg, projective):
            if rank(H) != rank(G) - 1:
                continue
            if H not in grown:
                grown[H] = enumerate_Kminus(H, G, cfg, kplus_list, projective)
            for Kminus, _ in grown[H]:
                yield Diagram(G, Kminus, Kplus, H, spin)

    logging.debug(f'K- grown from {len(grown)} principal isotropy groups of {format_group(G)}')


def enumerate_candidates(G: GroupExpr, cfg: Optional[EnumConfig] = None) -> list[Diagram]:
    """
    Enumerate candidate diagrams of cohomogeneity one actions of G with positive Euler characteristic.

    K+ runs through the proper subgroups of maximal rank, H through the isotropy groups of sphere actions of K+ and K-
    through the groups grown from H. A candidate is kept when it is a valid diagram that passes the necessary filters
    and has even dimension and positive Euler characteristic. The candidates are a superset search: they contain the
    known diagrams up to the bounds of `cfg`, along with diagrams that are not primitive or not effective.

    :param GroupExpr G: SU(n), SO(n), Spin(n) or Sp(n).
    :param EnumConfig cfg: Enumeration bounds, the defaults when omitted.
    :return: Normalized candidates, sorted by their text; empty when rank(G) is below 2 or above `cfg.rank_bound`.
    """
    cfg = cfg or EnumConfig()
    if rank(G) < 2 or rank(G) > cfg.rank_bound:
        logging.info(f'{format_group(G)} is outside the enumerated ranks.')
        return []
    spin = ambient_of(G).kind == KindSymbol.spin

    kept: list[Diagram] = []
    seen: set[str] = set()

    def keep(d: Diagram):
        d = normalize_diagram(d)
        text = format_diagram(d)
        if cfg.dedupe and text in seen:
            return
        seen.add(text)
        kept.append(d)

    for d in _connected(G, cfg, spin):
        if _admissible(d):
            keep(d)
    for d in list(kept):
        for variant in component_variants(d):
            if _admissible(variant):
                keep(variant)

    candidates = sorted(kept, key=format_diagram)
    logging.info(f'{len(candidates)} candidate diagrams for {format_group(G)}')
    return candidates
