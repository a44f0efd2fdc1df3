"""Circle families S1_k and S1_{l,k} inside U(n) and the fundamental group index of their quotients."""
from fractions import Fraction
from math import gcd

from cohomone.exceptions import GroupSemanticException, InconsistentDescriptorException


def sphere_isotropy_circle(n: int, k: int) -> tuple[int, ...]:
    """
    Weights of the circle S1_k in U(n) through which A in U(n-1) acts by (det A)^k A, i.e. the circle with
    S1_k SU(n-1) the isotropy group of a transitive action of U(n) on the sphere.

    :param int n: Size of the unitary group, at least 2.
    :param int k: Twist exponent.
    :return: The weights ((k+1)(n-1), -k, ..., -k).
    """
    if n < 2:
        raise GroupSemanticException(message=f'S1_k needs U(n) with n >= 2, got n={n}.')
    return ((k + 1) * (n - 1),) + (-k,) * (n - 1)


def weighted_circle(l: int, k: int, n: int) -> tuple[int, ...]:
    """Weights (l, -k, ..., -k) of the circle S1_{l,k} in U(n)."""
    return (l,) + (-k,) * (n - 1)


def _validate(l: int, k: int, n: int):
    if n < 2:
        raise GroupSemanticException(message=f'S1_{{l,k}} needs U(n) with n >= 2, got n={n}.')
    if gcd(l, k) != 1:
        raise GroupSemanticException(message=f'S1_{{l,k}} needs gcd(l, k) = 1, got l={l}, k={k}.')
    if l == k * (n - 1):
        raise InconsistentDescriptorException(
            message=f'S1_{{{l},{k}}} SU({n - 1}) lies in SU({n}) and does not act with a sphere quotient.')


def pi1_index_circle(l: int, k: int, n: int) -> int:
    """
    Index of the image of the fundamental group of S1_{l,k} SU(n-1) in the one of U(n).

    The quotient U(n) / S1_{l,k} SU(n-1) is the sphere of dimension 2n-1 for index 1, the real projective space for
    index 2 and a lens-type quotient otherwise.

    :param int l: Weight of the circle on the first coordinate.
    :param int k: Negated weight on each of the remaining coordinates, with gcd(l, k) = 1.
    :param int n: Size of the unitary group.
    :return: |l - k(n-1)| / gcd(l, n-1).
    :raises GroupSemanticException: when gcd(l, k) is not 1.
    """
    _validate(l, k, n)
    return abs(l - k * (n - 1)) // gcd(l, n - 1)


def pi1_index_brute_force(l: int, k: int, n: int) -> int:
    """
    The index of :func:`pi1_index_circle` found by enumerating loops.

    A loop in S1_{l,k} SU(n-1) runs along the circle from the identity to the parameter t = p/q and closes up inside
    SU(n-1), which is possible exactly when z^l = 1 and z^{-k(n-1)} = 1 at z = exp(2 pi i t). The determinant winding
    of such a loop is t (l - k(n-1)); the index is the greatest common divisor of all windings.
    """
    _validate(l, k, n)
    bound = abs(l) + abs(k) * (n - 1) + 1
    index = 0
    for q in range(1, bound + 1):
        for p in range(1, q + 1):
            t = Fraction(p, q)
            if (t * l).denominator != 1 or (t * k * (n - 1)).denominator != 1:
                continue
            winding = t * (l - k * (n - 1))
            index = gcd(index, int(winding))
    return abs(index)
