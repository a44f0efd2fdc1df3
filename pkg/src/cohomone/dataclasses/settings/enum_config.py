import os
from dataclasses import dataclass
from typing import Optional

DEFAULT_KMAX = 8


@dataclass(kw_only=True)
class EnumConfig:
    """
    Bounds of the candidate enumeration.

    max_factors (int): Largest number of factors a subgroup K+ of maximal rank may have.

    kmax (int): Bound on the parameters of circle families. Falls back to the environment variable `C1_KMAX`.

    wide_kmax (int): Bound on the coefficients of circle families inside a free torus of more than two dimensions, where
        the number of families grows with the power of the dimension. kmax still applies when it is smaller.

    rank_bound (int): Largest rank of the group G that is enumerated.

    include_projective (bool): Whether projective quotients are admitted as K+/H, for diagrams of Spin groups.

    dedupe (bool): Whether equal normalized candidates are merged.
    """
    max_factors: int = 4
    kmax: Optional[int] = None
    wide_kmax: int = 2
    rank_bound: int = 8
    include_projective: bool = False
    dedupe: bool = True

    def __post_init__(self):
        self.kmax = self.kmax or int(os.environ.get('C1_KMAX', DEFAULT_KMAX))

        for key in ('max_factors', 'kmax', 'wide_kmax', 'rank_bound'):
            if self[key] < 1:
                raise ValueError(f'{key} must be positive, got {self[key]}.')

    def __getitem__(self, key):
        return super().__getattribute__(key)
