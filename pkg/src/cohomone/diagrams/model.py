"""Group diagrams G > K-, K+ > H of cohomogeneity one manifolds and their text form."""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from cohomone.dataclasses import QuotientId
from cohomone.enums import KindSymbol, QuotientType
from cohomone.exceptions import CohomoneException, GroupSyntaxException
from cohomone.groups import Ambient, GroupExpr, ambient_of, dim, factor_count, format_group, parse_group
from cohomone.spheres import NOT_RECOGNIZED, classify_quotient


@dataclass(frozen=True)
class SphereWitness:
    """
    Recognition of a quotient K/H of a diagram.

    quotient (QuotientId): The recognized quotient.

    l (int): dim(K) - dim(H).

    kernel_factor_count (int): Number of factors of K that H contains identically, i.e. that act trivially on K/H.

    error (str, optional): Message of the error raised by the recognition, if any.
    """
    quotient: QuotientId
    l: int
    kernel_factor_count: int = 0
    error: str = ''

    def recognized(self, projective: bool = False) -> bool:
        return self.quotient.is_sphere or (projective and self.quotient.type == QuotientType.projective)


@lru_cache(maxsize=65536)
def sphere_witness(K: GroupExpr, H: GroupExpr) -> SphereWitness:
    """Recognize K/H, turning descriptor errors into a not-recognized witness."""
    l = dim(K) - dim(H)
    kernel = sum(factor_count(GroupExpr((f,))) for f in K.factors if f in H.factors)
    try:
        return SphereWitness(classify_quotient(K, H), l, kernel)
    except CohomoneException as e:
        logging.debug(f'No witness for {format_group(K)} / {format_group(H)}: {e}')
        return SphereWitness(NOT_RECOGNIZED, l, kernel, str(e))


@dataclass(frozen=True)
class Diagram:
    """
    A group diagram: H inside both K- and K+, which sit inside G.

    G (GroupExpr): A connected simple classical group.

    Kminus (GroupExpr): Singular isotropy group K-.

    Kplus (GroupExpr): Singular isotropy group K+, by convention the one of maximal rank if only one is.

    H (GroupExpr): Principal isotropy group.

    spin_level (bool): Whether G is a spin group and K-, K+, H are given by their images in SO(n).
    """
    G: GroupExpr
    Kminus: GroupExpr
    Kplus: GroupExpr
    H: GroupExpr
    spin_level: bool = False

    @cached_property
    def wminus(self) -> SphereWitness:
        return sphere_witness(self.Kminus, self.H)

    @cached_property
    def wplus(self) -> SphereWitness:
        return sphere_witness(self.Kplus, self.H)

    @property
    def ambient(self) -> Ambient:
        """The ambient of K-, K+ and H: that of G, or SO(n) for a diagram of a spin group."""
        ambient = ambient_of(self.G)
        return Ambient(KindSymbol.so, ambient.size) if ambient.kind == KindSymbol.spin else ambient

    def swapped(self) -> 'Diagram':
        return Diagram(self.G, self.Kplus, self.Kminus, self.H, self.spin_level)

    @property
    def text(self) -> str:
        return format_diagram(self)


def _component_text(g: GroupExpr) -> str:
    text = format_group(g)
    if g.ambient is not None:
        text = text.removesuffix(f' in {g.ambient.text}')
    return text


def format_diagram(d: Diagram) -> str:
    """Text form `H < K-, K+ < G`, the subgroups written without their ambient."""
    return f'{_component_text(d.H)} < {_component_text(d.Kminus)}, {_component_text(d.Kplus)} < {format_group(d.G)}'


def _split_top_level(text: str, separator: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, c in enumerate(text):
        if c in '([{':
            depth += 1
        elif c in ')]}':
            depth -= 1
        elif c == separator and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def parse_diagram(text: str) -> Diagram:
    """
    Parse the text form `H < K-, K+ < G` of a diagram.

    Subgroups without an ambient refer to G; for G = Spin(n) they refer to SO(n) and the diagram is spin level.

    :param str text: The diagram.
    :return: The diagram.
    :raises GroupSyntaxException: when the text is not of the form `H < K-, K+ < G` or a group does not parse.
    """
    parts = text.split('<')
    singular = _split_top_level(parts[1], ',') if len(parts) == 3 else []
    if len(singular) != 2:
        raise GroupSyntaxException(message="Expected a diagram of the form 'H < K-, K+ < G'.", text=text)

    G = parse_group(parts[2])
    ambient = ambient_of(G)
    spin_level = ambient.kind == KindSymbol.spin
    if spin_level:
        ambient = Ambient(KindSymbol.so, ambient.size)

    def component(part: str) -> GroupExpr:
        part = part.strip()
        return parse_group(part if ' in ' in part else f'{part} in {ambient.text}')

    return Diagram(G, component(singular[0]), component(singular[1]), component(parts[0]), spin_level)
