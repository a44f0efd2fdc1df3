from cohomone.groups import format_group, normalize_group, rank
from .model import Diagram


def normalize_diagram(d: Diagram) -> Diagram:
    """
    Canonical form of a diagram: all groups normalized and K+ the singular isotropy group of maximal rank when exactly
    one of them is, otherwise the one with the larger canonical text. Idempotent.
    """
    G, minus, plus, H = (normalize_group(g) for g in (d.G, d.Kminus, d.Kplus, d.H))

    full_minus, full_plus = rank(minus) == rank(G), rank(plus) == rank(G)
    if full_minus != full_plus:
        swap = full_minus
    else:
        swap = format_group(minus) > format_group(plus)

    if swap:
        minus, plus = plus, minus
    return Diagram(G, minus, plus, H, d.spin_level)
