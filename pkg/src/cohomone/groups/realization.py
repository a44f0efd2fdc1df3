"""
Placement of factors in the coordinates of their ambient group.

Every factor with embedding data is realized as a list of atoms (its simple parts) and abelian directions, all written
as integer vectors in the coordinates of the diagonal torus of the ambient: one coordinate per complex (SU) or
quaternionic (Sp) coordinate, and one per standard plane (1,2), (3,4), ... of an orthogonal ambient.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional

from cohomone.enums import FieldTag, KindSymbol, NamedTag
from cohomone.exceptions import GroupSemanticException, UnsupportedGroupException
from .model import Abstract, Ambient, DiagonalCircle, Factor, GroupExpr, NamedSpecial, StandardBlock

type Vector = tuple[int, ...]


@dataclass(frozen=True)
class Atom:
    """
    A simple factor placed in the ambient.

    kind (KindSymbol): Abstract kind of the simple factor (SU, SO, Spin, Sp or G2).

    n (int): Parameter of the kind, 0 for G2.

    tag (NamedTag, optional): Named embedding the atom comes from, if any.

    coordinates (frozenset[int]): Defining coordinates of the ambient the atom acts on.

    directions (tuple[Vector, ...]): Generators of the (visible part of the) cocharacter lattice of its maximal torus.

    coroots (tuple[Vector, ...]): Generators of its coroot lattice.

    commutant (tuple[Vector, ...]): Linear forms that vanish on exactly the torus directions commuting with the atom.

    surjective (bool, optional): Fixed answer for the fundamental group test in orthogonal ambients, if any.
    """
    kind: KindSymbol
    n: int
    tag: Optional[NamedTag]
    coordinates: frozenset[int]
    directions: tuple[Vector, ...]
    coroots: tuple[Vector, ...]
    commutant: tuple[Vector, ...]
    surjective: Optional[bool] = None

    @property
    def rank(self) -> int:
        match self.kind:
            case KindSymbol.su:
                return self.n - 1
            case KindSymbol.so | KindSymbol.spin:
                return self.n // 2
            case KindSymbol.g2:
                return 2

        return self.n

    @property
    def signature(self) -> tuple[str, int, str]:
        return self.kind.value, self.n, self.tag.value if self.tag else ''


@dataclass(frozen=True)
class FactorRealization:
    atoms: tuple[Atom, ...]
    abelian: tuple[Vector, ...]
    coordinates: frozenset[int]
    surjective: Optional[bool] = None
    quaternionic_circle: bool = False


@dataclass(frozen=True)
class Realization:
    """
    A group realized in the coordinates of its ambient.

    ambient (Ambient): The ambient group.

    atoms (tuple[Atom, ...]): The simple parts of all factors.

    abelian (tuple[Vector, ...]): Directions of the central torus.

    factors (tuple[FactorRealization, ...]): Per-factor realizations, in the order of the factors.

    relabeling (tuple[int, ...]): New position of every defining coordinate when SO blocks had to be moved onto
        standard planes, empty when the coordinates are the given ones.
    """
    ambient: Ambient
    atoms: tuple[Atom, ...]
    abelian: tuple[Vector, ...]
    factors: tuple[FactorRealization, ...]
    relabeling: tuple[int, ...] = ()

    @property
    def directions(self) -> list[Vector]:
        """Generators of the cocharacter lattice of the maximal torus, up to saturation."""
        return [d for a in self.atoms for d in a.directions] + list(self.abelian)

    @property
    def coroots(self) -> list[Vector]:
        return [c for a in self.atoms for c in a.coroots]

    def original(self, c: int) -> int:
        """The given coordinate that was moved to position `c`."""
        if not self.relabeling:
            return c
        return self.relabeling.index(c) + 1


def _unit(size: int, i: int, value: int = 1) -> Vector:
    v = [0] * size
    v[i - 1] = value
    return tuple(v)


def _add(*vectors: Vector) -> Vector:
    return tuple(sum(xs) for xs in zip(*vectors))


def _scale(v: Vector, c: int) -> Vector:
    return tuple(c * x for x in v)


def _primitive(v: Vector) -> Vector:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g > 1 else v


def _chain(size: int, coords: list[int], signs: Optional[list[int]] = None) -> list[Vector]:
    """The vectors s_i e_{c_i} - s_{i+1} e_{c_{i+1}}: coroots of SU on the coordinates `coords`."""
    signs = signs or [1] * len(coords)
    return [_add(_unit(size, coords[i], signs[i]), _unit(size, coords[i + 1], -signs[i + 1]))
            for i in range(len(coords) - 1)]


def _even_sum_generators(size: int, planes: list[int]) -> list[Vector]:
    """Generators of the lattice of vectors with even coordinate sum supported on `planes`."""
    if not planes:
        return []
    return [_unit(size, planes[0], 2)] + _chain(size, planes)


def _plane(c: int) -> int:
    return (c + 1) // 2


class _Placer:
    """Realizes factors of one ambient group."""

    def __init__(self, ambient: Ambient):
        self.ambient = ambient
        self.size = ambient.torus_size
        self.orthogonal = ambient.is_orthogonal

    def plane_of_pair(self, x: int, y: int) -> Optional[tuple[int, int]]:
        """Plane and orientation sign of the signed real coordinate pair (x, y), if it is a standard plane."""
        a, b = abs(x), abs(y)
        if min(a, b) % 2 == 0 or abs(a - b) != 1 or max(a, b) > 2 * self.size:
            return None
        orientation = 1 if a < b else -1
        return _plane(a), orientation * (1 if x > 0 else -1) * (1 if y > 0 else -1)

    def touched_planes(self, coordinates) -> list[int]:
        return sorted({_plane(c) for c in coordinates if c <= 2 * self.size})

    def paired_planes(self, coords: list[int], what: str) -> tuple[list[int], list[int]]:
        planes, signs = [], []
        for i in range(0, len(coords) - 1, 2):
            found = self.plane_of_pair(coords[i], coords[i + 1])
            if found is None:
                raise GroupSemanticException(
                    message=f'{what} needs coordinates ({abs(coords[i])},{abs(coords[i + 1])}) '
                            'to form a standard plane.')
            planes.append(found[0])
            signs.append(found[1])
        return planes, signs

    def zero_on(self, planes) -> tuple[Vector, ...]:
        return tuple(_unit(self.size, p) for p in planes)

    # Factors placed on an ordered list of (signed) defining coordinates

    def place(self, f: Factor, coords: list[int], block: bool) -> FactorRealization:
        occupied = frozenset(abs(c) for c in coords)
        if max(occupied) > self.ambient.size:
            raise GroupSemanticException(message=f'{f.symbol} exceeds the coordinates of {self.ambient.text}.')

        if self.orthogonal:
            return self._place_real(f, coords, occupied, block)

        return self._place_unitary(f, [abs(c) for c in coords], occupied)

    def _place_unitary(self, f: Factor, coords: list[int], occupied: frozenset[int]) -> FactorRealization:
        size = self.size
        quaternionic = self.ambient.kind == KindSymbol.sp

        match f.kind:
            case KindSymbol.su | KindSymbol.u:
                if f.kind == KindSymbol.u and not quaternionic:
                    raise GroupSemanticException(
                        message=f'U({f.n}) is not a subgroup of {self.ambient.text}; write SU{{1,{f.n - 1}}} instead.')
                atoms = (self._su_atom(f.n, coords, None, None),) if f.n >= 2 else ()
                abelian = (_add(*[_unit(size, c) for c in coords]),) if f.kind == KindSymbol.u else ()
                return FactorRealization(atoms, abelian, occupied)
            case KindSymbol.su_composite:
                return self._place_composite(f, coords, None, occupied)
            case KindSymbol.so:
                d = [_add(_unit(size, coords[2 * j]), _unit(size, coords[2 * j + 1], -1)) for j in range(f.n // 2)]
                if f.n == 2:
                    return FactorRealization((), (d[0],), occupied)
                coroots = _even_sum_over(d)
                atom = Atom(KindSymbol.so, f.n, None, occupied, tuple(d), tuple(coroots),
                            tuple(_chain(size, coords)))
                return FactorRealization((atom,), (), occupied)
            case KindSymbol.sp if quaternionic:
                d = tuple(_unit(size, c) for c in coords)
                return FactorRealization((Atom(KindSymbol.sp, f.n, None, occupied, d, d, d),), (), occupied)
            case KindSymbol.sp:
                d = tuple(_add(_unit(size, coords[2 * j]), _unit(size, coords[2 * j + 1], -1)) for j in range(f.n))
                atom = Atom(KindSymbol.sp, f.n, None, occupied, d, d, tuple(_chain(size, coords)))
                return FactorRealization((atom,), (), occupied)

        raise UnsupportedGroupException(message=f'{f.symbol} cannot be placed in {self.ambient.text}.')

    def _place_real(self, f: Factor, coords: list[int], occupied: frozenset[int], block: bool) -> FactorRealization:
        size = self.size

        match f.kind:
            case KindSymbol.so:
                if block:
                    planes = [p for p in self.touched_planes(occupied) if {2 * p - 1, 2 * p} <= occupied]
                    signs = [1] * len(planes)
                else:
                    planes, signs = self.paired_planes(coords[:2 * (f.n // 2)], f.symbol)
                d = [_unit(size, p, s) for p, s in zip(planes, signs)]
                if f.n == 2:
                    if not d:
                        raise GroupSemanticException(message='SO(2) must act on a standard plane.')
                    return FactorRealization((), (d[0],), occupied, surjective=True)
                atom = Atom(KindSymbol.so, f.n, None, occupied, tuple(d), tuple(_even_sum_generators(size, planes)),
                            self.zero_on(self.touched_planes(occupied)))
                return FactorRealization((atom,), (), occupied, surjective=True)
            case KindSymbol.su | KindSymbol.u | KindSymbol.su_composite:
                planes, signs = self.paired_planes(coords, f.symbol)
                if f.kind == KindSymbol.su_composite:
                    return self._place_composite(f, planes, signs, occupied)
                atoms = (self._su_atom(f.n, planes, signs, None),) if f.n >= 2 else ()
                abelian = ()
                if f.kind == KindSymbol.u:
                    abelian = (_add(*[_unit(size, p, s) for p, s in zip(planes, signs)]),)
                return FactorRealization(atoms, abelian, occupied, surjective=True if abelian else None)

        raise UnsupportedGroupException(message=f'{f.symbol} cannot be placed in {self.ambient.text}.')

    def _su_atom(self, n: int, coords: list[int], signs: Optional[list[int]], tag: Optional[NamedTag]) -> Atom:
        chain = tuple(_chain(self.size, coords, signs))
        occupied = frozenset(coords) if not self.orthogonal else frozenset(
            c for p in coords for c in (2 * p - 1, 2 * p))
        return Atom(KindSymbol.su, n, tag, occupied, chain, chain, chain)

    def _place_composite(self, f: Factor, coords: list[int], signs: Optional[list[int]],
                         occupied: frozenset[int]) -> FactorRealization:
        if len(coords) != sum(f.params):
            raise GroupSemanticException(message=f'{f.symbol} does not fit its coordinates.')
        signs = signs or [1] * len(coords)
        atoms, indicators, start = [], [], 0
        for p in f.params:
            part, part_signs = coords[start:start + p], signs[start:start + p]
            if p >= 2:
                atoms.append(self._su_atom(p, part, part_signs, None))
            indicators.append(_add(*[_unit(self.size, c, s) for c, s in zip(part, part_signs)]))
            start += p
        abelian = tuple(
            _primitive(_add(_scale(indicators[i], f.params[i + 1]), _scale(indicators[i + 1], -f.params[i])))
            for i in range(len(f.params) - 1))
        return FactorRealization(tuple(atoms), abelian, occupied, surjective=True if self.orthogonal else None)

    # Named special embeddings

    def named(self, f: Factor, emb: NamedSpecial) -> FactorRealization:
        size = self.size
        args = list(emb.args)

        match emb.tag:
            case NamedTag.g2so7 | NamedTag.spin7so8:
                expected = (KindSymbol.g2, 7) if emb.tag == NamedTag.g2so7 else (KindSymbol.spin, 8)
                if not self.orthogonal or f.kind != expected[0] or (f.kind == KindSymbol.spin and f.n != 7):
                    raise GroupSemanticException(message=f'#{emb.tag.value} does not apply to {f.symbol} here.')
                coords = args or list(range(1, expected[1] + 1))
                self._check_coordinates(coords, expected[1], emb.tag)
                planes, signs = self.paired_planes(coords[:6] if expected[1] == 7 else coords, f.symbol)
                chain = tuple(_chain(size, planes, signs))
                occupied = frozenset(coords)
                atom = Atom(f.kind, f.n if f.kind == KindSymbol.spin else 0, emb.tag, occupied, chain, chain,
                            self.zero_on(self.touched_planes(occupied)), surjective=False)
                return FactorRealization((atom,), (), occupied, surjective=False)
            case NamedTag.irr3in5 if self.orthogonal and f.kind == KindSymbol.so and f.n == 3:
                coords = args or [1, 2, 3, 4, 5]
                self._check_coordinates(coords, 5, emb.tag)
                planes, signs = self.paired_planes(coords[:4], f.symbol)
                d = _add(_unit(size, planes[0], signs[0]), _unit(size, planes[1], 2 * signs[1]))
                occupied = frozenset(coords)
                atom = Atom(KindSymbol.so, 3, emb.tag, occupied, (d,), (_scale(d, 2),),
                            self.zero_on(self.touched_planes(occupied)), surjective=True)
                return FactorRealization((atom,), (), occupied, surjective=True)
            case NamedTag.irr3in5 if self.ambient.kind == KindSymbol.sp and f.kind == KindSymbol.sp and f.n == 1:
                coords = args or [1, 2]
                self._check_coordinates(coords, 2, emb.tag)
                d = _add(_unit(size, coords[0]), _unit(size, coords[1], 3))
                atom = Atom(KindSymbol.sp, 1, emb.tag, frozenset(coords), (d,), (d,), self.zero_on(coords))
                return FactorRealization((atom,), (), frozenset(coords))
            case NamedTag.irr3in3c if self.ambient.kind == KindSymbol.su and f.kind == KindSymbol.so and f.n == 3:
                coords = args or [1, 2, 3]
                self._check_coordinates(coords, 3, emb.tag)
                d = _add(_unit(size, coords[0]), _unit(size, coords[1], -1))
                atom = Atom(KindSymbol.so, 3, emb.tag, frozenset(coords), (d,), (_scale(d, 2),),
                            tuple(_chain(size, coords)))
                return FactorRealization((atom,), (), frozenset(coords))
            case NamedTag.dsp1 if self.ambient.kind == KindSymbol.sp and f.kind == KindSymbol.sp and f.n == 1:
                coords = args or [1, 2]
                self._check_coordinates(coords, 2, emb.tag)
                d = _add(_unit(size, coords[0]), _unit(size, coords[1]))
                atom = Atom(KindSymbol.sp, 1, emb.tag, frozenset(coords), (d,), (d,), (d,))
                return FactorRealization((atom,), (), frozenset(coords))
            case NamedTag.du1 if self.ambient.kind == KindSymbol.sp and f.is_circle:
                if len(args) not in (2, 3):
                    raise GroupSemanticException(message='#du1 takes the arguments (a, b) or (a, b, l).')
                self._check_coordinates(args[:2], 2, emb.tag)
                d = _add(_unit(size, args[0]), _unit(size, args[1], args[2] if len(args) == 3 else 1))
                return FactorRealization((), (d,), frozenset())
            case NamedTag.sigma:
                return self._sigma(f, args)

        raise GroupSemanticException(message=f'#{emb.tag.value} does not apply to {f.symbol} in {self.ambient.text}.')

    def _check_coordinates(self, coords: list[int], count: int, tag: NamedTag):
        if len(coords) != count or len(set(coords)) != count or min(coords) < 1 or max(coords) > self.ambient.size:
            raise GroupSemanticException(message=f'#{tag.value} needs {count} distinct coordinates of '
                                                 f'{self.ambient.text}, got {tuple(coords)}.')

    def _sigma(self, f: Factor, perm: list[int]) -> FactorRealization:
        m = self.ambient.size
        if sorted(abs(x) for x in perm) != list(range(1, m + 1)):
            raise GroupSemanticException(message=f'#sigma needs a signed permutation of 1..{m}, got {tuple(perm)}.')
        length = natural_size(f, self.ambient)
        return self.place(f, perm[:length], block=False)


def _even_sum_over(directions: list[Vector]) -> list[Vector]:
    """Coroots of SO(k), k >= 3, in terms of the generators of its cocharacter lattice."""
    if not directions:
        return []
    return [_scale(directions[0], 2)] + [_add(directions[i], _scale(directions[i + 1], -1))
                                         for i in range(len(directions) - 1)]


def natural_size(f: Factor, ambient: Ambient) -> int:
    """Number of defining coordinates of `ambient` a standard placement of `f` occupies."""
    match f.kind:
        case KindSymbol.su | KindSymbol.u:
            return 2 * f.n if ambient.is_orthogonal else f.n
        case KindSymbol.su_composite:
            return 2 * sum(f.params) if ambient.is_orthogonal else sum(f.params)
        case KindSymbol.so | KindSymbol.spin:
            return f.n
        case KindSymbol.sp:
            return 2 * f.n if ambient.kind == KindSymbol.su else (4 * f.n if ambient.is_orthogonal else f.n)
        case KindSymbol.g2:
            return 7

    raise UnsupportedGroupException(message=f'{f.symbol} has no standard placement.')


def _so_interval(f: Factor, ambient: Ambient) -> Optional[tuple[int, int]]:
    """Coordinates [a..b] of an SO factor acting on consecutive coordinates of an orthogonal ambient."""
    if not ambient.is_orthogonal or f.kind != KindSymbol.so:
        return None
    match f.embedding:
        case StandardBlock():
            return f.embedding.start, f.embedding.end
        case Abstract() if f.n == ambient.size:
            return 1, ambient.size

    return None


class _Alignment:
    """
    A permutation of the defining coordinates of an orthogonal ambient that moves the maximal tori of SO blocks onto
    standard planes.

    An SO(k) block starting at an even coordinate meets no standard plane in the right way. Its coordinates are paired
    inside the block, smaller blocks first so that larger blocks extend the pairs of the blocks they contain, and the
    pairs are then moved onto free standard planes. Coordinates of all other factors stay where they are. Conjugation
    by a permutation is an automorphism of the ambient, so groups realized with the same alignment stay comparable.
    """

    def __init__(self, factors: list[Factor], ambient: Ambient):
        self.ambient = ambient
        size = ambient.size

        kept: set[int] = set()
        intervals: set[tuple[int, int]] = set()
        for f in factors:
            interval = _so_interval(f, ambient)
            if interval is not None:
                intervals.add(interval)
                continue
            fr = realize_factor(f, ambient)
            kept |= fr.coordinates
            for v in fr.abelian:
                kept |= {c for i, x in enumerate(v, start=1) if x for c in (2 * i - 1, 2 * i)}

        partner: dict[int, int] = {}
        for p in range(1, ambient.torus_size + 1):
            if {2 * p - 1, 2 * p} <= kept:
                partner[2 * p - 1], partner[2 * p] = 2 * p, 2 * p - 1

        for a, b in sorted(intervals, key=lambda i: (i[1] - i[0], i[0])):
            if b > size:
                raise GroupSemanticException(
                    message=f'SO block on [{a}..{b}] exceeds the coordinates of {ambient.text}.')
            inside = set(range(a, b + 1))
            if any(partner[c] not in inside for c in inside if c in partner):
                raise GroupSemanticException(
                    message=f'SO block on [{a}..{b}] does not share a maximal torus with the other factors.')
            free = sorted(c for c in inside if c not in partner and c not in kept)
            for x, y in zip(free[0::2], free[1::2]):
                partner[x], partner[y] = y, x
            if sum(1 for c in inside if c in partner) != 2 * ((b - a + 1) // 2):
                raise GroupSemanticException(message=f'SO block on [{a}..{b}] cannot be moved onto standard planes.')

        stay = set(kept) | {c for c, d in partner.items() if min(c, d) % 2 == 1 and abs(c - d) == 1}
        moved_pairs = sorted({(min(c, d), max(c, d)) for c, d in partner.items() if c not in stay})
        planes = [p for p in range(1, ambient.torus_size + 1) if not {2 * p - 1, 2 * p} & stay]
        if len(planes) < len(moved_pairs):
            raise GroupSemanticException(message=f'No free standard planes left in {ambient.text} for the SO blocks.')

        position = {c: c for c in stay}
        for (x, y), p in zip(moved_pairs, planes):
            position[x], position[y] = 2 * p - 1, 2 * p
        rest = sorted(set(range(1, size + 1)) - set(position))
        targets = sorted(set(range(1, size + 1)) - set(position.values()))
        position.update(zip(rest, targets))

        self.relabeling = tuple(position[c] for c in range(1, size + 1))
        self.blocks = {}
        for a, b in intervals:
            inside = range(a, b + 1)
            pairs = sorted({(position[min(c, partner[c])], position[max(c, partner[c])])
                            for c in inside if c in partner})
            leftover = sorted(position[c] for c in inside if c not in partner)
            self.blocks[(a, b)] = [c for pair in pairs for c in pair] + leftover
        logging.debug(f'Coordinates of {ambient.text} relabeled as {self.relabeling}')

    @classmethod
    def needed(cls, factors: list[Factor], ambient: Ambient) -> Optional['_Alignment']:
        """The alignment of `factors`, or None when every SO block already starts at an odd coordinate."""
        intervals = [_so_interval(f, ambient) for f in factors]
        if not any(i is not None and i[0] % 2 == 0 and i[1] > i[0] for i in intervals):
            return None
        return cls(factors, ambient)


def realize_factor(f: Factor, ambient: Ambient, alignment: Optional[_Alignment] = None) -> FactorRealization:
    placer = _Placer(ambient)
    emb = f.embedding

    match emb:
        case DiagonalCircle():
            if not f.is_circle:
                raise GroupSemanticException(message=f'Only circles carry weight vectors, not {f.symbol}.')
            if len(emb.weights) != ambient.torus_size:
                raise GroupSemanticException(
                    message=f'Weight vector {emb.weights} should have {ambient.torus_size} entries for {ambient.text}.')
            if ambient.kind == KindSymbol.su and sum(emb.weights):
                raise GroupSemanticException(message=f'Circle weights {emb.weights} in SU must sum to zero.')
            quaternionic = ambient.is_orthogonal and emb.field == FieldTag.quaternionic
            return FactorRealization((), (emb.weights,), frozenset(), quaternionic_circle=quaternionic)
        case StandardBlock():
            if emb.length != natural_size(f, ambient):
                raise GroupSemanticException(
                    message=f'{f.symbol} needs {natural_size(f, ambient)} coordinates, got [{emb.start}..{emb.end}].')
            if ambient.is_orthogonal and f.kind != KindSymbol.so and emb.start % 2 == 0:
                raise GroupSemanticException(message=f'{f.symbol} blocks must start at an odd coordinate.')
            if f.kind == KindSymbol.so:
                alignment = alignment or _Alignment.needed([f], ambient)
            if alignment is not None and f.kind == KindSymbol.so:
                return placer.place(f, alignment.blocks[(emb.start, emb.end)], block=False)
            return placer.place(f, list(range(emb.start, emb.end + 1)), block=True)
        case NamedSpecial():
            return placer.named(f, emb)
        case Abstract():
            if f.kind != KindSymbol.torus and natural_size(f, ambient) == ambient.size:
                if alignment is not None and f.kind == KindSymbol.so:
                    return placer.place(f, alignment.blocks[(1, ambient.size)], block=False)
                return placer.place(f, list(range(1, ambient.size + 1)), block=True)

    raise UnsupportedGroupException(message=f'{f.symbol} carries no embedding data in {ambient.text}.')


def _realized(g: GroupExpr, alignment: Optional[_Alignment]) -> Realization:
    factors = tuple(realize_factor(f, g.ambient, alignment) for f in g.factors)
    seen: set[int] = set()
    for fr in factors:
        if seen & fr.coordinates:
            raise GroupSemanticException(message=f'Overlapping blocks on coordinates {sorted(seen & fr.coordinates)}.')
        seen |= fr.coordinates

    return Realization(
        ambient=g.ambient,
        atoms=tuple(a for fr in factors for a in fr.atoms),
        abelian=tuple(v for fr in factors for v in fr.abelian),
        factors=factors,
        relabeling=alignment.relabeling if alignment else (),
    )


@lru_cache(maxsize=65536)
def realize_together(*groups: GroupExpr) -> tuple[Realization, ...]:
    """
    Realize groups of one ambient in common coordinates.

    SO blocks starting at an even coordinate are first moved onto standard planes by one permutation of the
    coordinates for all groups, which keeps tori and inclusions between the groups intact.

    :param GroupExpr groups: Groups with the same ambient.
    :return: One realization per group, in the given order.
    :raises UnsupportedGroupException: when a group has no ambient or a factor lacks embedding data.
    :raises GroupSemanticException: when the embedding data is inconsistent, e.g. overlapping blocks, or the SO blocks
        of the groups cannot be moved onto standard planes together.
    """
    if any(g.ambient is None for g in groups):
        raise UnsupportedGroupException(message='Group has no ambient group to realize it in.')
    ambient = groups[0].ambient
    if any(g.ambient != ambient for g in groups):
        raise GroupSemanticException(message='Groups realized together must share their ambient group.')

    alignment = _Alignment.needed([f for g in groups for f in g.factors], ambient)
    return tuple(_realized(g, alignment) for g in groups)


@lru_cache(maxsize=65536)
def realize(g: GroupExpr) -> Realization:
    """
    Realize all factors of `g` in its ambient group.

    :param GroupExpr g: Group with an ambient.
    :return: The realization.
    :raises UnsupportedGroupException: when `g` has no ambient or a factor lacks embedding data.
    :raises GroupSemanticException: when the embedding data is inconsistent, e.g. overlapping blocks.
    """
    return realize_together(g)[0]
