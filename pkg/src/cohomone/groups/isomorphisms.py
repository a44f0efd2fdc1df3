"""Fixed table of low-rank isomorphisms between compact groups."""
from collections import Counter

from cohomone.enums import KindSymbol
from .model import Factor, GroupExpr

type AbstractFactor = tuple[str, tuple[int, ...]]

# Each key is identified with the product of the factors it maps to.
LOW_RANK_IDENTIFICATIONS: dict[AbstractFactor, tuple[AbstractFactor, ...]] = {
    ('Spin', (3,)): (('Sp', (1,)),),
    ('SU', (2,)): (('Sp', (1,)),),
    ('Spin', (4,)): (('Sp', (1,)), ('Sp', (1,))),
    ('Spin', (5,)): (('Sp', (2,)),),
    ('Spin', (6,)): (('SU', (4,)),),
    ('SO', (2,)): (('T', (1,)),),
    ('U', (1,)): (('T', (1,)),),
}

# Isomorphic only up to a finite quotient; listed for reference and never applied.
FLAGGED_IDENTIFICATIONS: dict[AbstractFactor, str] = {
    ('SO', (4,)): '(Sp(1)xSp(1))/Z2',
    ('SO', (3,)): 'Sp(1)/Z2',
    ('SO', (6,)): 'SU(4)/Z2',
}


def _expand(f: Factor) -> list[AbstractFactor]:
    key: AbstractFactor = (f.kind.value, f.params)
    if f.kind == KindSymbol.torus:
        return [('T', (1,))] * f.n
    if f.kind == KindSymbol.su_composite and len(f.params) == 2 and 1 in f.params:
        # S(U(1)U(n)) is isomorphic to U(n)
        return _expand(Factor(KindSymbol.u, (max(f.params),)))

    return list(LOW_RANK_IDENTIFICATIONS.get(key, (key,)))


def abstractly_isomorphic(a: GroupExpr, b: GroupExpr) -> bool:
    """Whether the two groups are isomorphic by the fixed identification table, ignoring embeddings."""
    if a.component_order != b.component_order:
        return False

    def expand(g: GroupExpr) -> Counter:
        return Counter(x for f in g.factors for x in _expand(f))

    return expand(a) == expand(b)


def _cartan_types(f: Factor) -> list[tuple[str, int]]:
    """Cartan types of the simple ideals of the Lie algebra of `f`, with ('T', 1) for each central circle."""
    if f.kind == KindSymbol.g2:
        return [('G', 2)]
    n = f.params[0]
    match f.kind:
        case KindSymbol.torus:
            return [('T', 1)] * n
        case KindSymbol.u:
            return [('T', 1)] + _cartan_types(Factor(KindSymbol.su, (n,))) if n >= 2 else [('T', 1)]
        case KindSymbol.su_composite:
            return ([('T', 1)] * (len(f.params) - 1)
                    + [t for p in f.params if p >= 2 for t in _cartan_types(Factor(KindSymbol.su, (p,)))])
        case KindSymbol.su:
            return [('A', n - 1)]
        case KindSymbol.sp:
            return [('A', 1)] if n == 1 else ([('B', 2)] if n == 2 else [('C', n)])

    # SO and Spin
    if n == 2:
        return [('T', 1)]
    if n == 3:
        return [('A', 1)]
    if n == 4:
        return [('A', 1), ('A', 1)]
    if n == 6:
        return [('A', 3)]
    return [('B', n // 2)] if n % 2 else [('D', n // 2)]


def lie_type(g: GroupExpr) -> tuple[tuple[str, int], ...]:
    """Sorted Cartan types of the Lie algebra of `g`, with ('T', 1) for each dimension of the center."""
    return tuple(sorted(t for f in g.factors for t in _cartan_types(f)))


def locally_isomorphic(a: GroupExpr, b: GroupExpr) -> bool:
    """Whether the identity components of the two groups have isomorphic Lie algebras."""
    return lie_type(a) == lie_type(b)
