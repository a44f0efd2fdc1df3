"""Invariants of the manifold of a group diagram: Euler characteristic, dimension and ineffective kernel."""
import logging
from fractions import Fraction

from cohomone.enums import KindSymbol, Marker
from cohomone.exceptions import CohomoneException, InconsistentDescriptorException
from cohomone.groups import GroupExpr, ambient_of, dim, format_group, realize
from cohomone.homogeneous import euler_char
from cohomone.spheres import integer_kernel, pi1_surjective_in_SO
from .model import Diagram


def _covering_factor(d: Diagram, K: GroupExpr) -> int:
    """2 when the preimage of K in the spin group is disconnected, so that G/K0 doubly covers SO(n)/K."""
    if not d.spin_level or pi1_surjective_in_SO(K):
        return 1
    return 2


def chi_terms(d: Diagram, covering_correction: bool = True) -> tuple[int, int, int]:
    """
    The Euler characteristics of G/K-, G/K+ and G/H.

    For a spin level diagram each nonzero term is doubled when the preimage of the isotropy group in the spin group is
    disconnected, since the diagram then consists of the identity components of the preimages.
    """
    terms = []
    for K in (d.Kminus, d.Kplus, d.H):
        chi = euler_char(d.G, K)
        if chi and covering_correction:
            chi *= _covering_factor(d, K)
        terms.append(chi)
    return terms[0], terms[1], terms[2]


def euler_char_M(d: Diagram, covering_correction: bool = True) -> int:
    """
    Euler characteristic chi(G/K-) + chi(G/K+) - chi(G/H) of the manifold.

    :param Diagram d: A valid diagram.
    :param bool covering_correction: Whether to correct spin level diagrams for disconnected preimages.
    :return: chi(M).
    """
    minus, plus, principal = chi_terms(d, covering_correction)
    chi = minus + plus - principal
    logging.debug(f'chi({d.text}) = {minus} + {plus} - {principal} = {chi}')
    return chi


def dim_M(d: Diagram) -> int:
    """
    Dimension dim(G/H) + 1 of the manifold.

    :raises InconsistentDescriptorException: when the dimension is odd while chi(M) is positive.
    """
    value = dim(d.G) - dim(d.H) + 1
    if value % 2 and euler_char_M(d) > 0:
        raise InconsistentDescriptorException(
            message=f'Odd dimensional manifold {value} with positive Euler characteristic for {d.text}.')
    return value


def _center(d: Diagram) -> list[tuple[Fraction, ...]] | None:
    """Central elements of G in logarithmic coordinates of the torus of the ambient, None if not available."""
    ambient = ambient_of(d.G)
    size = d.ambient.torus_size
    match ambient.kind:
        case KindSymbol.su:
            return [(Fraction(j, size),) * size for j in range(size)]
        case KindSymbol.sp:
            return [(Fraction(0),) * size, (Fraction(1, 2),) * size]
        case KindSymbol.so if ambient.size % 2 == 0:
            return [(Fraction(0),) * size, (Fraction(1, 2),) * size]
        case KindSymbol.so:
            return [(Fraction(0),) * size]

    return None


def action_kernel_order(d: Diagram) -> int | Marker:
    """
    Number of central elements of G contained in H, the ineffective kernel of the action on the manifold.

    A central element lies in the identity component of H exactly when it lies in its maximal torus, i.e. when every
    integer linear form vanishing on the torus of H takes an integer value on it.

    :param Diagram d: Diagram with a simple G.
    :return: The order, or `Marker.unknown` when membership cannot be decided, e.g. for spin groups, groups without
             embedding data or central elements possibly in other components of H.
    """
    center = _center(d)
    if center is None:
        return Marker.unknown
    try:
        directions = realize(d.H).directions if d.H.factors else []
    except CohomoneException:
        return Marker.unknown

    forms = integer_kernel(directions, d.ambient.torus_size)
    inside = [x for x in center if all(sum(f_i * x_i for f_i, x_i in zip(f, x)).denominator == 1 for f in forms)]

    if len(inside) < len(center) and not d.H.is_connected:
        return Marker.unknown
    logging.debug(f'{len(inside)} central elements of {format_group(d.G)} in {format_group(d.H)}')
    return len(inside)
