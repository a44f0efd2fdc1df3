"""Principal isotropy groups H of the action of K+ on a sphere K+/H."""
import logging
from typing import Iterator, Optional

from cohomone.dataclasses import EnumConfig
from cohomone.diagrams import SphereWitness, sphere_witness
from cohomone.enums import KindSymbol, NamedTag
from cohomone.groups import Ambient, Factor, GroupExpr, NamedSpecial, StandardBlock, dim, format_group, realize
from cohomone.spheres import integer_kernel, reduced_basis
from .support import circle, placed_group, primitive_forms


def _block(kind: KindSymbol, n: int, start: int, end: int) -> Factor:
    return Factor(kind, (n,), StandardBlock(start, end))


def _semisimple(f: Factor, ambient: Ambient) -> list[Factor]:
    """Simple parts of a block factor of K+, as block factors."""
    if not isinstance(f.embedding, StandardBlock):
        return [f]
    start, end = f.embedding.start, f.embedding.end
    unit = 2 if ambient.is_orthogonal else 1

    match f.kind:
        case KindSymbol.u:
            return [_block(KindSymbol.su, f.n, start, end)] if f.n >= 2 else []
        case KindSymbol.su_composite:
            parts = []
            for p in f.params:
                if p >= 2:
                    parts.append(_block(KindSymbol.su, p, start, start + unit * p - 1))
                start += unit * p
            return parts
        case KindSymbol.so if f.n == 2:
            return []
        case KindSymbol.torus:
            return []

    return [f]


def _shrunk(f: Factor, ambient: Ambient) -> Optional[list[Factor]]:
    """The isotropy group of the standard action of a simple block factor on its sphere."""
    if not isinstance(f.embedding, StandardBlock):
        return None
    start, end = f.embedding.start, f.embedding.end
    unit = 2 if ambient.is_orthogonal else 1

    match f.kind:
        case KindSymbol.su:
            return [_block(KindSymbol.su, f.n - 1, start + unit, end)] if f.n > 2 else []
        case KindSymbol.so:
            return [_block(KindSymbol.so, f.n - 1, start, end - 1)] if f.n > 3 else []
        case KindSymbol.sp:
            return [_block(KindSymbol.sp, f.n - 1, start + 1, end)] if f.n > 1 else []

    return None


def _diagonal(small: Factor, big: Factor) -> Optional[list[Factor]]:
    """Sp(1) x Sp(m) acting on S^(4m-1) with isotropy the diagonal Sp(1) times Sp(m-1)."""
    if small.kind != KindSymbol.sp or big.kind != KindSymbol.sp or small.n != 1:
        return None
    if not isinstance(small.embedding, StandardBlock) or not isinstance(big.embedding, StandardBlock):
        return None
    start, end = big.embedding.start, big.embedding.end
    diagonal = Factor(KindSymbol.sp, (1,), NamedSpecial(NamedTag.dsp1, (small.embedding.start, start)))
    return [diagonal] + ([_block(KindSymbol.sp, big.n - 1, start + 1, end)] if big.n > 1 else [])


def semisimple_parts(Kplus: GroupExpr) -> Iterator[list[Factor]]:
    """
    Semisimple parts of candidate isotropy groups: that of K+, and that of K+ with one simple factor, or one pair
    Sp(1) x Sp(m), replaced by the isotropy group of its action on a sphere.
    """
    ambient = Kplus.ambient
    parts = [p for f in Kplus.factors for p in _semisimple(f, ambient)]
    yield parts

    for i, f in enumerate(parts):
        shrunk = _shrunk(f, ambient)
        if shrunk is not None:
            yield parts[:i] + shrunk + parts[i + 1:]
        for j, g in enumerate(parts):
            pair = _diagonal(f, g) if i != j else None
            if pair is not None:
                yield [p for k, p in enumerate(parts) if k not in (i, j)] + pair


def free_torus(parts: list[Factor], ambient: Ambient) -> tuple[tuple[int, ...], ...]:
    """Basis of the torus of the ambient commuting with the given simple factors."""
    width = ambient.torus_size
    forms = [form for a in realize(GroupExpr(tuple(parts), ambient=ambient)).atoms for form in a.commutant] \
        if parts else []
    if ambient.kind == KindSymbol.su:
        forms.append((1,) * width)
    return reduced_basis(integer_kernel(forms, width), width)


def torus_choices(basis: tuple[tuple[int, ...], ...], width: int, kmax: int,
                  wide_kmax: Optional[int] = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """
    The whole free torus and its corank one subtori, given by primitive forms with coefficients up to `kmax`, or up to
    `wide_kmax` when it is smaller and the torus has more than two dimensions.
    """
    yield basis

    t = len(basis)
    if not t:
        return
    bound = kmax if t <= 2 or wide_kmax is None else min(kmax, wide_kmax)
    for form in primitive_forms(t, bound):
        vectors = [tuple(sum(c * b[i] for c, b in zip(coefficients, basis)) for i in range(width))
                   for coefficients in integer_kernel([form], t)]
        yield reduced_basis(vectors, width) if vectors else ()


def enumerate_H(Kplus: GroupExpr, cfg: EnumConfig, projective: bool = False) -> list[tuple[GroupExpr, SphereWitness]]:
    """
    Candidates for the principal isotropy group inside K+.

    The semisimple part is that of K+ or shrunk in one factor as for the transitive actions on spheres; the torus part
    is the free torus commuting with it, or a corank one subtorus of it, which covers the circle families up to
    `cfg.kmax`, or `cfg.wide_kmax` in free tori of more than two dimensions. A candidate is kept when K+/H is
    recognized as a sphere.

    :param GroupExpr Kplus: A placed subgroup.
    :param EnumConfig cfg: Enumeration bounds.
    :param bool projective: Whether real projective quotients are admitted, for diagrams of spin groups.
    :return: Pairs of H and the recognition of K+/H.
    """
    ambient, width = Kplus.ambient, Kplus.ambient.torus_size
    found: dict[str, tuple[GroupExpr, SphereWitness]] = {}

    for parts in semisimple_parts(Kplus):
        basis = free_torus(parts, ambient)
        for torus in torus_choices(basis, width, cfg.kmax, cfg.wide_kmax):
            H = placed_group(parts + [circle(v) for v in torus], ambient)
            if H is None or dim(H) >= dim(Kplus):
                continue
            text = format_group(H)
            if text in found:
                continue
            witness = sphere_witness(Kplus, H)
            if witness.recognized(projective):
                found[text] = H, witness

    logging.debug(f'{len(found)} candidates for H in {format_group(Kplus)}')
    return list(found.values())
