"""Transitive effective actions on spheres, as an embedded table of parameterized patterns."""
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from sympy import Eq, Integer, Symbol, solve, sympify

from cohomone.exceptions import GroupSemanticException

N = Symbol('n', integer=True)

_PLACEHOLDER = re.compile(r'\{([^{}]+)\}')
_TRIVIAL = re.compile(r'^(SO\(1\)|SU\(1\)|Sp\(0\))$')


def _expr(text: str):
    return sympify(text, locals={'n': N})


@dataclass(frozen=True)
class SpherePattern:
    """
    One row of the table of transitive actions on spheres.

    name (str): Identifier of the pattern.

    acting (str): Template of the acting group K, in the group grammar with `{expr}` placeholders in `n`.

    isotropy (str): Template of the isotropy group H, written abstractly.

    label (str): Isotropy group as usually written, e.g. `Sp(n)ΔSp(1)`.

    sphere_dim (str): Dimension of the sphere as an expression in `n`.

    kernel_factors (int): Number of factors of the isotropy group, i.e. the most factors of an ineffective kernel
                          that can sit in it.

    representation (str): Isotropy representation, informational only.

    n_min (int): Smallest admissible value of `n`.
    """
    name: str
    acting: str
    isotropy: str
    label: str
    sphere_dim: str
    kernel_factors: int
    representation: str
    n_min: int = 1

    @property
    def is_fixed(self) -> bool:
        return N not in _expr(self.sphere_dim).free_symbols

    def dimension(self, n: Optional[int] = None) -> int:
        return int(_expr(self.sphere_dim).subs(N, n if n is not None else 0))

    def parameter_for(self, m: int) -> Optional[int]:
        """Value of `n` for which the pattern acts on the sphere of dimension `m`, if any."""
        expr = _expr(self.sphere_dim)
        if self.is_fixed:
            return 0 if int(expr) == m else None
        for n in solve(Eq(expr, m), N):
            if isinstance(n, Integer) and n >= self.n_min:
                return int(n)
        return None

    def instantiate(self, n: int) -> 'SphereAction':
        return SphereAction(self, n, render(self.acting, n), render(self.isotropy, n))

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'acting': self.acting,
            'isotropy': self.label,
            'sphere_dim': self.sphere_dim,
            'kernel_factors': self.kernel_factors,
            'representation': self.representation,
        }


@dataclass(frozen=True)
class SphereAction:
    """A pattern instantiated at the parameter `n`, with the acting and isotropy groups as group expressions."""
    pattern: SpherePattern
    n: int
    acting: str
    isotropy: str

    @property
    def pair(self) -> tuple[str, str]:
        return self.acting, self.isotropy

    @property
    def sphere_dim(self) -> int:
        return self.pattern.dimension(self.n)


def render(template: str, n: int) -> str:
    """Fill the `{expr}` placeholders of a template; a trivial factor leaves the trivial group `1`."""
    text = _PLACEHOLDER.sub(lambda m: str(_expr(m.group(1)).subs(N, n)), template)
    factors = [f for f in text.split('x') if not _TRIVIAL.match(f)]
    return 'x'.join(factors) or '1'


SPHERE_PATTERNS: tuple[SpherePattern, ...] = (
    SpherePattern('SO', 'SO({n+1})', 'SO({n})', 'SO(n)', 'n', 1, 'ρ_n'),
    SpherePattern('SU', 'SU({n+1})', 'SU({n})', 'SU(n)', '2*n+1', 1, 'μ_n ⊕ id'),
    SpherePattern('U', 'U({n+1})', 'U({n})', 'U(n)', '2*n+1', 2, 'μ_n ⊕ id'),
    SpherePattern('Sp', 'Sp({n+1})', 'Sp({n})', 'Sp(n)', '4*n+3', 1, 'ν_n ⊕ 3id', n_min=0),
    SpherePattern('SpSp1', 'Sp({n+1})xSp(1)', 'Sp({n})xSp(1)', 'Sp(n)ΔSp(1)', '4*n+3', 2, 'ν_n ⊗ ν_1 ⊕ id ⊗ ρ_3'),
    SpherePattern('SpU1', 'Sp({n+1})xS1', 'Sp({n})xS1', 'Sp(n)ΔU(1)', '4*n+3', 2, 'ν_n ⊗ φ ⊕ id ⊗ φ ⊕ id'),
    SpherePattern('Spin9', 'Spin(9)', 'Spin(7)', 'Spin(7)', '15', 1, 'ρ_7 ⊕ Δ_8', n_min=0),
    SpherePattern('Spin7', 'Spin(7)', 'G2', 'G_2', '7', 1, 'φ_7', n_min=0),
    SpherePattern('G2', 'G2', 'SU(3)', 'SU(3)', '6', 1, 'μ_3', n_min=0),
    SpherePattern('S1', 'S1', '1', '1', '1', 0, 'id', n_min=0),
)


@lru_cache(maxsize=1024)
def transitive_pairs_on_sphere(m: int) -> tuple[SphereAction, ...]:
    """
    All transitive effective actions on the sphere of dimension `m` from the table of patterns.

    :param int m: Dimension of the sphere, at least 1.
    :return: The instantiated patterns, in table order.
    :raises GroupSemanticException: for m below 1.
    """
    if m < 1:
        raise GroupSemanticException(message=f'Sphere dimension must be at least 1, got {m}.')

    actions = []
    for pattern in SPHERE_PATTERNS:
        n = pattern.parameter_for(m)
        if n is not None:
            actions.append(pattern.instantiate(n))

    return tuple(actions)


def pattern_by_name(name: str) -> SpherePattern:
    return next(p for p in SPHERE_PATTERNS if p.name == name)
