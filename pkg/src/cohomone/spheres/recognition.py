"""Recognition of quotients K/H as spheres, real projective spaces or lens-type quotients."""
import logging
from dataclasses import dataclass
from typing import Iterator, Optional

from cohomone.dataclasses import QuotientId
from cohomone.enums import KindSymbol, NamedTag, QuotientType
from cohomone.exceptions import InconsistentDescriptorException, UnsupportedGroupException
from cohomone.groups import Atom, Factor, GroupExpr, Realization, dim, format_group, locally_isomorphic, parse_group, \
    realize_together
from .lattice import in_span, lattice_index, saturate, span_rank
from .patterns import transitive_pairs_on_sphere

NOT_RECOGNIZED = QuotientId(QuotientType.not_recognized)


@dataclass(frozen=True)
class _Shape:
    """A matched pattern: its name, the dimension of its sphere and whether it fixes the quotient without lattices."""
    witness: str
    sphere_dim: int
    fixed: bool


def _is(atom: Atom, kind: KindSymbol, n: Optional[int] = None, tag: Optional[NamedTag] = None) -> bool:
    return atom.kind == kind and (n is None or atom.n == n) and atom.tag == tag


def _inside(inner: Atom, outer: Atom) -> bool:
    return inner.coordinates <= outer.coordinates


def _residual(K: Realization, H: Realization) -> tuple[list[Atom], list[Atom]]:
    """Atoms of K and H after removing the atoms they have in common."""
    k_atoms = list(K.atoms)
    h_atoms = []
    for atom in H.atoms:
        if atom in k_atoms:
            k_atoms.remove(atom)
        else:
            h_atoms.append(atom)
    return k_atoms, h_atoms


def _match_atoms(ka: list[Atom], ha: list[Atom], delta: int, circles: bool) -> Optional[_Shape]:
    """
    Match the atoms K and H do not share against the transitive actions on spheres.

    :param ka: Remaining atoms of K.
    :param ha: Remaining atoms of H.
    :param int delta: rank(K) - rank(H).
    :param bool circles: Whether K and H differ in their central circles.
    """
    if not ka and not ha:
        return _Shape('S1', 1, True) if delta == 1 else None

    if delta == 0:
        if len(ka) == 1 and not ha and ka[0].rank == 1:
            return _Shape('SO', 2, True)
        if len(ka) == 1 and len(ha) == 1:
            k, h = ka[0], ha[0]
            if _is(k, KindSymbol.so, 4) and _is(h, KindSymbol.su, 2) and h.coordinates == k.coordinates:
                return _Shape('SO', 2, True)
            if _is(k, KindSymbol.so) and _is(h, KindSymbol.so, k.n - 1) and k.n % 2 == 1 and _inside(h, k):
                return _Shape('SO', k.n - 1, True)
            if k.kind == KindSymbol.g2 and _is(h, KindSymbol.su, 3) and _inside(h, k):
                return _Shape('G2', 6, True)
            if k.kind == KindSymbol.spin and k.n == 7 and _is(h, KindSymbol.su, 4) and _inside(h, k):
                return _Shape('SO', 6, True)
        return None

    if delta != 1:
        return None

    if len(ka) == 1 and not ha and ka[0].rank == 1:
        return _Shape('U' if circles else 'SU', 3, False)

    if len(ka) == 1 and len(ha) == 1:
        k, h = ka[0], ha[0]
        if not _inside(h, k):
            return None
        if _is(k, KindSymbol.so) and _is(h, KindSymbol.so, k.n - 1) and k.n % 2 == 0:
            return _Shape('SO', k.n - 1, False)
        if _is(k, KindSymbol.so, 4) and _is(h, KindSymbol.su, 2):
            return _Shape('SU', 3, False)
        if _is(k, KindSymbol.so, 6) and _is(h, KindSymbol.su, 3):
            return _Shape('SU', 7, False)
        if _is(k, KindSymbol.su) and _is(h, KindSymbol.su, k.n - 1):
            return _Shape('U' if circles else 'SU', 2 * k.n - 1, False)
        if _is(k, KindSymbol.sp) and _is(h, KindSymbol.sp, k.n - 1):
            return _Shape('SpU1' if circles else 'Sp', 4 * k.n - 1, False)
        if _is(k, KindSymbol.so, 5) and _is(h, KindSymbol.su, 2):
            return _Shape('Sp', 7, False)
        if k.kind == KindSymbol.spin and k.n == 7 and h.kind == KindSymbol.g2:
            return _Shape('Spin7', 7, False)
        if _is(k, KindSymbol.so, 7) and h.kind == KindSymbol.g2:
            return _Shape('Spin7', 7, False)
        if _is(k, KindSymbol.so, 8) and h.kind == KindSymbol.spin and h.n == 7:
            return _Shape('Spin7', 7, False)
        if _is(k, KindSymbol.spin, 9) and _is(h, KindSymbol.spin, 7):
            return _Shape('Spin9', 15, False)

    if len(ka) == 2 and all(_is(a, KindSymbol.sp) for a in ka) and 1 <= len(ha) <= 2:
        diagonal = [a for a in ha if _is(a, KindSymbol.sp, 1, NamedTag.dsp1)]
        rest = [a for a in ha if a not in diagonal]
        if len(diagonal) != 1:
            return None
        big, small = sorted(ka, key=lambda a: -a.n)
        if small.n != 1 or not diagonal[0].coordinates & small.coordinates:
            return None
        if rest and not (_is(rest[0], KindSymbol.sp, big.n - 1) and _inside(rest[0], big)):
            return None
        if not rest and big.n != 1:
            return None
        return _Shape('SpSp1', 4 * big.n - 1, False)

    return None


def _with_components(result: QuotientId, K: GroupExpr, H: GroupExpr) -> QuotientId:
    """Pass from K0/H0 to K/H, for H with at least as many components as K."""
    if result.type == QuotientType.not_recognized or H.component_order == K.component_order:
        return result

    ratio, remainder = divmod(H.component_order, K.component_order)
    if remainder:
        return NOT_RECOGNIZED
    if result.is_sphere and result.dim == 1:
        return result
    if result.is_sphere and ratio == 2:
        return QuotientId(QuotientType.projective, result.dim, 2, result.witness)

    return NOT_RECOGNIZED


def _from_index(index: Optional[int], l: int, witness: str) -> QuotientId:
    match index:
        case None:
            return NOT_RECOGNIZED
        case 1:
            return QuotientId(QuotientType.sphere, l, 1, witness)
        case 2:
            return QuotientId(QuotientType.projective, l, 2, witness)

    return QuotientId(QuotientType.lens, None, index, witness)


def _classify_embedded(K: Realization, H: Realization, l: int) -> QuotientId:
    width = K.ambient.torus_size
    if not in_span(H.directions, K.directions, width):
        logging.debug('Torus of the isotropy group is not inside the one of the acting group.')
        return NOT_RECOGNIZED

    delta = span_rank(K.directions, width) - span_rank(H.directions, width)
    ka, ha = _residual(K, H)
    circles = set(K.abelian) != set(H.abelian)
    shape = _match_atoms(ka, ha, delta, circles)

    if shape is None:
        return NOT_RECOGNIZED
    if shape.sphere_dim != l:
        raise InconsistentDescriptorException(
            message=f"Pattern '{shape.witness}' acts on a sphere of dimension {shape.sphere_dim}, not {l}.")
    if shape.fixed:
        return QuotientId(QuotientType.sphere, l, 1, shape.witness)

    # fundamental group of K/H: saturated lattice of K modulo the saturated lattice of H plus the coroots of K
    outer = saturate(K.directions, width)
    inner = list(saturate(H.directions, width)) + K.coroots
    return _from_index(lattice_index(outer, inner, width), l, shape.witness)


def _literal(g: GroupExpr, kind: KindSymbol, n: int) -> bool:
    return len(g.factors) == 1 and g.factors[0].kind == kind and g.factors[0].n == n


def _stripped(K: GroupExpr, H: GroupExpr) -> Iterator[tuple[GroupExpr, GroupExpr]]:
    """(K, H) itself, then with the factors they have in common removed."""
    yield K, H

    k_factors = [(f.kind, f.params) for f in K.factors]
    h_rest: list[Factor] = []
    for f in H.factors:
        if (f.kind, f.params) in k_factors:
            k_factors.remove((f.kind, f.params))
        else:
            h_rest.append(f)
    if len(h_rest) < len(H.factors):
        yield GroupExpr(tuple(Factor(kind, params) for kind, params in k_factors)), GroupExpr(tuple(h_rest))


def _classify_abstract(K: GroupExpr, H: GroupExpr, l: int) -> QuotientId:
    """Recognition at the level of Lie algebras, for groups without embedding data."""
    K, H = K.identity_component(), H.identity_component()

    for k_rest, h_rest in _stripped(K, H):
        if _literal(k_rest, KindSymbol.so, 5) and _literal(h_rest, KindSymbol.su, 2):
            return QuotientId(QuotientType.projective, 7, 2, 'Sp')
        if _literal(k_rest, KindSymbol.so, 3) and not h_rest.factors:
            return QuotientId(QuotientType.projective, 3, 2, 'SU')
        for action in transitive_pairs_on_sphere(l):
            acting, isotropy = parse_group(action.acting), parse_group(action.isotropy)
            if locally_isomorphic(k_rest, acting) and locally_isomorphic(h_rest, isotropy):
                return QuotientId(QuotientType.sphere, l, 1, action.pattern.name)

    return NOT_RECOGNIZED


def classify_quotient(K: GroupExpr, H: GroupExpr) -> QuotientId:
    """
    Recognize K/H as a sphere, a real projective space or a lens-type quotient.

    With embedding data in a common ambient, the factors K and H share are taken as ineffective kernel and the
    remaining ones are matched against the transitive actions on spheres. The fundamental group of the quotient then
    follows from the index of the image of the cocharacter lattice of H, together with the coroots of K, in the one of
    K. Without embedding data the match is made at the level of Lie algebras.

    :param GroupExpr K: The acting group.
    :param GroupExpr H: The isotropy group.
    :return: The recognized quotient, or a not-recognized result.
    :raises InconsistentDescriptorException: when dim(H) >= dim(K) or a matched pattern has the wrong dimension.
    """
    l = dim(K) - dim(H)
    if l < 1:
        raise InconsistentDescriptorException(
            message=f'{format_group(H)} must have smaller dimension than {format_group(K)}.')

    result = None
    if K.ambient is not None and K.ambient == H.ambient:
        try:
            result = _classify_embedded(*realize_together(K, H), l)
        except UnsupportedGroupException:
            logging.debug('Falling back to recognition without embedding data.')

    if result is None:
        result = _classify_abstract(K, H, l)

    result = _with_components(result, K, H)
    logging.debug(f'{format_group(K)} / {format_group(H)}: {result.text}')
    return result
