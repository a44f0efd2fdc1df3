"""Abstract invariants of compact groups: rank, dimension, Weyl group order, number of factors and center order."""
from math import factorial, prod
from typing import Iterable

from cohomone.enums import KindSymbol, Marker
from cohomone.exceptions import UnsupportedGroupException
from .model import Factor, GroupExpr

type SignedPermutation = tuple[int, ...]


def factor_rank(f: Factor) -> int:
    match f.kind:
        case KindSymbol.su:
            return f.n - 1
        case KindSymbol.so | KindSymbol.spin:
            return f.n // 2
        case KindSymbol.su_composite:
            return sum(f.params) - 1
        case KindSymbol.g2:
            return 2

    return f.n


def factor_dim(f: Factor) -> int:
    match f.kind:
        case KindSymbol.su:
            return f.n ** 2 - 1
        case KindSymbol.so | KindSymbol.spin:
            return f.n * (f.n - 1) // 2
        case KindSymbol.sp:
            return f.n * (2 * f.n + 1)
        case KindSymbol.u:
            return f.n ** 2
        case KindSymbol.su_composite:
            return sum(p ** 2 for p in f.params) - 1
        case KindSymbol.g2:
            return 14

    return f.n


def factor_weyl_order(f: Factor) -> int:
    match f.kind:
        case KindSymbol.su | KindSymbol.u:
            return factorial(f.n)
        case KindSymbol.so | KindSymbol.spin:
            m = f.n // 2
            if f.n % 2:
                return 2 ** m * factorial(m)
            return 2 ** (m - 1) * factorial(m)
        case KindSymbol.sp:
            return 2 ** f.n * factorial(f.n)
        case KindSymbol.su_composite:
            return prod(factorial(p) for p in f.params)
        case KindSymbol.g2:
            return 12

    return 1


def factor_factor_count(f: Factor) -> int:
    """Torus rank plus number of simple factors of the finite cover of the factor."""
    match f.kind:
        case KindSymbol.so | KindSymbol.spin:
            return 2 if f.n == 4 else 1
        case KindSymbol.u:
            return 2 if f.n >= 2 else 1
        case KindSymbol.su_composite:
            return len(f.params) - 1 + sum(1 for p in f.params if p >= 2)
        case KindSymbol.torus:
            return f.n

    return 1


def rank(g: GroupExpr) -> int:
    return sum(factor_rank(f) for f in g.factors)


def dim(g: GroupExpr) -> int:
    return sum(factor_dim(f) for f in g.factors)


def weyl_order(g: GroupExpr) -> int:
    """
    Order of the Weyl group of the identity component of `g`.

    :param GroupExpr g: The group.
    :return: Product of the Weyl group orders of the factors.
    """
    return prod(factor_weyl_order(f) for f in g.factors)


def factor_count(g: GroupExpr) -> int:
    return sum(factor_factor_count(f) for f in g.factors)


def is_abelian_factor(f: Factor) -> bool:
    """Whether the factor is a torus: circles, tori, U(1) and SO(2)."""
    return (f.kind == KindSymbol.torus or (f.kind == KindSymbol.u and f.n == 1)
            or (f.kind == KindSymbol.so and f.n == 2))


def center_order(g: GroupExpr) -> int | Marker:
    """
    Order of the center of a group with a single simple factor.

    :param GroupExpr g: Group consisting of one classical simple factor or G2.
    :return: The order of the center, or `Marker.infinite` when the center is positive-dimensional.
    :raises UnsupportedGroupException: when `g` has several simple factors.
    """
    if any(is_abelian_factor(f) or f.kind in (KindSymbol.u, KindSymbol.su_composite) for f in g.factors):
        return Marker.infinite
    if len(g.factors) != 1:
        raise UnsupportedGroupException(message='The center order is only defined for a single simple factor.')

    f = g.factors[0]
    match f.kind:
        case KindSymbol.su:
            return f.n
        case KindSymbol.sp:
            return 2
        case KindSymbol.so:
            return 1 if f.n % 2 else 2
        case KindSymbol.spin:
            return 2 if f.n % 2 else 4

    return 1


def _transposition(n: int, i: int, j: int, negate: bool = False) -> SignedPermutation:
    image = list(range(1, n + 1))
    image[i], image[j] = (-(j + 1), -(i + 1)) if negate else (j + 1, i + 1)
    return tuple(image)


def _negation(n: int, i: int) -> SignedPermutation:
    image = list(range(1, n + 1))
    image[i] = -image[i]
    return tuple(image)


def _compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """The signed permutation `a` applied after `b`."""
    return tuple((1 if x > 0 else -1) * a[abs(x) - 1] for x in b)


def _reflection_generators(f: Factor) -> tuple[int, list[SignedPermutation]]:
    """Simple reflections of the root system of `f`, as signed permutations of the root-system coordinates."""
    match f.kind:
        case KindSymbol.su | KindSymbol.u:
            n = f.n
            return n, [_transposition(n, i, i + 1) for i in range(n - 1)]
        case KindSymbol.sp:
            n = f.n
            return n, [_transposition(n, i, i + 1) for i in range(n - 1)] + [_negation(n, n - 1)]
        case KindSymbol.so | KindSymbol.spin:
            n = f.n // 2
            gens = [_transposition(n, i, i + 1) for i in range(n - 1)]
            if f.n % 2:
                return n, gens + [_negation(n, n - 1)]
            if n >= 2:
                gens.append(_transposition(n, n - 2, n - 1, negate=True))
            return n, gens
        case KindSymbol.g2:
            # G2 acts on the sum-zero plane of R^3 as the permutations together with -Id
            return 3, [_transposition(3, 0, 1), _transposition(3, 1, 2), (-1, -2, -3)]

    raise UnsupportedGroupException(message=f'No root system model for {f.symbol}.')


def _closure(n: int, generators: Iterable[SignedPermutation]) -> set[SignedPermutation]:
    identity = tuple(range(1, n + 1))
    elements = {identity}
    frontier = [identity]
    generators = list(generators)

    while frontier:
        new = []
        for element in frontier:
            for gen in generators:
                candidate = _compose(gen, element)
                if candidate not in elements:
                    elements.add(candidate)
                    new.append(candidate)
        frontier = new

    return elements


def weyl_group_elements(f: Factor) -> list[SignedPermutation]:
    """
    Brute-force enumeration of the Weyl group of a simple (or unitary) factor: the closure of its simple reflections in
    the signed-permutation model of the root system.

    :param Factor f: A factor of kind SU, U, SO, Spin, Sp or G2.
    :return: All group elements, sorted.
    """
    n, generators = _reflection_generators(f)
    return sorted(_closure(n, generators))


def weyl_order_brute_force(f: Factor) -> int:
    return len(weyl_group_elements(f))
