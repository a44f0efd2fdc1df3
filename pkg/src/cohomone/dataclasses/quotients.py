from dataclasses import dataclass
from typing import Optional

from cohomone.enums import QuotientType


@dataclass(frozen=True)
class QuotientInvariants:
    """
    Invariants of a homogeneous space G/K.

    dim_quotient (int): dim(G) - dim(K).

    corank (int): rank(G) - rank(K).

    euler (int): Euler characteristic of G/K, positive exactly when the corank is zero.
    """
    dim_quotient: int
    corank: int
    euler: int


@dataclass(frozen=True)
class QuotientId:
    """
    Recognition result for a quotient K/H.

    type (QuotientType): Sphere, real projective space, lens-type quotient or not recognized.

    dim (int, optional): Dimension of the quotient for spheres and projective spaces.

    index (int, optional): Index of the image of the fundamental group for circle families; 1 for spheres, 2 for
                           projective spaces and at least 3 for lens-type quotients.

    witness (str, optional): Name of the pattern that matched.
    """
    type: QuotientType
    dim: Optional[int] = None
    index: Optional[int] = None
    witness: Optional[str] = None

    @property
    def is_sphere(self) -> bool:
        return self.type == QuotientType.sphere

    @property
    def text(self) -> str:
        match self.type:
            case QuotientType.sphere:
                return f'S^{self.dim}'
            case QuotientType.projective:
                return f'RP^{self.dim}'
            case QuotientType.lens:
                return f'lens(index {self.index})'

        return 'not recognized'
