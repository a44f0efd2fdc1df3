from dataclasses import dataclass, field
from typing import Optional

from cohomone.enums import FieldTag, KindSymbol, NamedTag
from cohomone.exceptions import GroupSemanticException, UnsupportedGroupException

AMBIENT_KINDS = (KindSymbol.su, KindSymbol.so, KindSymbol.spin, KindSymbol.sp)

_MIN_PARAMETER = {
    KindSymbol.su: 2,
    KindSymbol.so: 2,
    KindSymbol.spin: 3,
    KindSymbol.sp: 1,
    KindSymbol.u: 1,
    KindSymbol.torus: 1,
}

_MIN_AMBIENT = {
    KindSymbol.su: 2,
    KindSymbol.so: 3,
    KindSymbol.spin: 3,
    KindSymbol.sp: 1,
}


@dataclass(frozen=True)
class Ambient:
    """
    The classical group whose defining representation gives the coordinates that embeddings refer to.

    kind (KindSymbol): One of SU, SO, Spin or Sp. Spin ambients use the coordinates of their SO image.

    size (int): Matrix size, i.e. the number of complex (SU), real (SO, Spin) or quaternionic (Sp) coordinates.
    """
    kind: KindSymbol
    size: int

    def __post_init__(self):
        if self.kind not in AMBIENT_KINDS:
            raise GroupSemanticException(message=f"'{self.kind.value}' cannot be used as an ambient group.")
        if self.size < _MIN_AMBIENT[self.kind]:
            raise GroupSemanticException(message=f"Ambient {self.text} is below the supported size.")

    @property
    def text(self) -> str:
        return f'{self.kind.value}({self.size})'

    @property
    def is_orthogonal(self) -> bool:
        return self.kind in (KindSymbol.so, KindSymbol.spin)

    @property
    def canonical_field(self) -> FieldTag:
        if self.is_orthogonal:
            return FieldTag.real
        if self.kind == KindSymbol.sp:
            return FieldTag.quaternionic

        return FieldTag.complex

    @property
    def torus_size(self) -> int:
        """Number of coordinates of the diagonal torus: one per complex or quaternionic coordinate, or per plane."""
        return self.size // 2 if self.is_orthogonal else self.size


@dataclass(frozen=True)
class StandardBlock:
    """Factor acting on the consecutive (1-based, inclusive) coordinates `start` up to `end`."""
    start: int
    end: int

    def __post_init__(self):
        if self.start < 1 or self.end < self.start:
            raise GroupSemanticException(message=f'Invalid coordinate range [{self.start}..{self.end}].')

    @property
    def length(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class DiagonalCircle:
    """
    A circle z -> diag(z^w1, ..., z^wm), one weight per torus coordinate of the ambient. The field tag is None when it
    is the canonical one of the ambient (real for SO, complex for SU, quaternionic for Sp).

    NB: the weights are kept as given, i.e. they are not divided by their greatest common divisor.
    """
    weights: tuple[int, ...]
    field: Optional[FieldTag] = None

    def __post_init__(self):
        if not any(self.weights):
            raise GroupSemanticException(message='A circle weight vector must be nonzero.')


@dataclass(frozen=True)
class NamedSpecial:
    """
    A named special embedding.

    tag (NamedTag): Which embedding.

    args (tuple[int, ...]): Optional coordinate list for the placement, the arguments (a, b, l) of `du1`, or the signed
                            coordinate permutation of `sigma`. Empty means the default placement.
    """
    tag: NamedTag
    args: tuple[int, ...] = ()


@dataclass(frozen=True)
class Abstract:
    """No embedding data."""


type Embedding = StandardBlock | DiagonalCircle | NamedSpecial | Abstract


@dataclass(frozen=True)
class Factor:
    """
    One simple or torus factor of a compact group.

    kind (KindSymbol): Group symbol of the factor.

    params (tuple[int, ...]): `(n,)` for SU(n), SO(n), Spin(n), Sp(n), U(n) and the torus T^n, the block sizes for the
                              composite S(U(n1)...U(nk)) and empty for G2.

    embedding (Embedding): How the factor sits in the ambient group.
    """
    kind: KindSymbol
    params: tuple[int, ...] = ()
    embedding: Embedding = field(default_factory=Abstract)

    def __post_init__(self):
        if self.kind == KindSymbol.g2:
            if self.params:
                raise GroupSemanticException(message='G2 takes no parameter.')
        elif self.kind == KindSymbol.su_composite:
            if len(self.params) < 2 or min(self.params) < 1:
                raise GroupSemanticException(message=f'Invalid composite S(U...) block sizes {self.params}.')
        elif len(self.params) != 1 or self.params[0] < _MIN_PARAMETER[self.kind]:
            raise GroupSemanticException(message=f'Invalid parameter {self.params} for {self.kind.value}.')

    @property
    def n(self) -> int:
        return self.params[0]

    @property
    def symbol(self) -> str:
        match self.kind:
            case KindSymbol.g2:
                return 'G2'
            case KindSymbol.su_composite:
                return f"SU{{{','.join(map(str, self.params))}}}"
            case KindSymbol.torus:
                return 'S1' if self.n == 1 else f'T{self.n}'

        return f'{self.kind.value}({self.n})'

    @property
    def is_circle(self) -> bool:
        return self.kind == KindSymbol.torus and self.n == 1


@dataclass(frozen=True)
class GroupExpr:
    """
    A compact group given as a product of factors, the order of its component group and optionally its ambient group.

    factors (tuple[Factor, ...]): The factors of the identity component.

    component_order (int): Size of the component group; 1 means connected.

    ambient (Ambient, optional): The classical group the embeddings of the factors refer to.
    """
    factors: tuple[Factor, ...]
    component_order: int = 1
    ambient: Optional[Ambient] = None

    def __post_init__(self):
        if self.component_order < 1:
            raise GroupSemanticException(message='The component order must be a positive integer.')

    @property
    def is_connected(self) -> bool:
        return self.component_order == 1

    def identity_component(self) -> 'GroupExpr':
        return GroupExpr(self.factors, 1, self.ambient)

    def with_components(self, component_order: int) -> 'GroupExpr':
        return GroupExpr(self.factors, component_order, self.ambient)


def ambient_of(g: GroupExpr) -> Ambient:
    """
    The ambient that subgroups of the simple classical group `g` refer to.

    :param GroupExpr g: A connected group with a single SU, SO, Spin or Sp factor.
    :return: The corresponding ambient.
    :raises UnsupportedGroupException: when `g` is not a simple classical group.
    """
    if len(g.factors) != 1 or g.factors[0].kind not in AMBIENT_KINDS or not g.is_connected:
        raise UnsupportedGroupException(message='Expected a connected simple classical group SU, SO, Spin or Sp.')
    return Ambient(g.factors[0].kind, g.factors[0].n)


def ambient_group(ambient: Ambient) -> GroupExpr:
    return GroupExpr((Factor(ambient.kind, (ambient.size,)),))
