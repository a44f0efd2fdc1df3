from dataclasses import dataclass
from typing import Optional


@dataclass(kw_only=True)
class VerifySettings:
    """
    Sampling grid of catalog verification.

    generic_n (int): Parameter value sampled besides the two smallest ones of every parameterized entry.

    samples (list[int], optional): Explicit parameter values; overrides the default grid.

    workers (int): Number of processes verifying entries side by side; 1 verifies in the calling process.
    """
    generic_n: int = 8
    samples: Optional[list[int]] = None
    workers: int = 1

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError(f'workers must be positive, got {self.workers}.')

    def sample(self, n_min: int, n_max: Optional[int]) -> list[int]:
        """
        Parameter values to verify an entry with range [n_min, n_max] at.

        :param int n_min: Smallest parameter value of the entry.
        :param int n_max: Largest parameter value, None when unbounded.
        :return: Sorted values within the range.
        """
        if self.samples is not None:
            return sorted(n for n in set(self.samples) if n >= n_min and (n_max is None or n <= n_max))

        upper = n_max if n_max is not None else max(self.generic_n, n_min)

        return sorted({n for n in (n_min, n_min + 1, min(self.generic_n, upper)) if n_min <= n <= upper})

    def __getitem__(self, key):
        return super().__getattribute__(key)
