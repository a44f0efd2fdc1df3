from dataclasses import replace
from functools import lru_cache
from typing import Optional

from cohomone.enums import KindSymbol
from .model import Abstract, Ambient, DiagonalCircle, Embedding, Factor, GroupExpr, NamedSpecial, StandardBlock


def sign_normalized(weights: tuple[int, ...]) -> tuple[int, ...]:
    """Flip the sign of a weight vector so that its leading nonzero entry is positive (z -> z^-1)."""
    for w in weights:
        if w:
            return weights if w > 0 else tuple(-x for x in weights)
    return weights


def embedding_key(emb: Embedding) -> tuple:
    match emb:
        case StandardBlock():
            return 0, (emb.start, emb.end), '', ()
        case DiagonalCircle():
            return 1, emb.weights, emb.field.value if emb.field else '', ()
        case NamedSpecial():
            return 2, (), emb.tag.value, emb.args

    return 3, (), '', ()


def factor_key(f: Factor) -> tuple:
    """
    Canonical order of factors: tori and circles first, then composite S(U...) kinds, then the simple kinds
    alphabetically by symbol with the parameter descending; ties are broken by the embedding.
    """
    if f.kind == KindSymbol.torus:
        group = 0
    elif f.kind == KindSymbol.su_composite:
        group = 1
    else:
        group = 2

    return group, f.kind.value, tuple(-p for p in f.params), embedding_key(f.embedding)


def normalize_factor(f: Factor, ambient: Optional[Ambient] = None) -> Factor:
    if isinstance(f.embedding, DiagonalCircle):
        field = f.embedding.field
        if ambient is not None and field == ambient.canonical_field:
            field = None
        return replace(f, embedding=DiagonalCircle(sign_normalized(f.embedding.weights), field))
    return f


@lru_cache(maxsize=65536)
def normalize_group(g: GroupExpr) -> GroupExpr:
    """
    Canonical form of a group expression: circle weights sign-normalized, abstract tori merged into a single T^r and
    factors sorted by :func:`factor_key`. Idempotent.

    :param GroupExpr g: The group.
    :return: The normalized group.
    """
    factors = [normalize_factor(f, g.ambient) for f in g.factors]
    abstract_tori = [f for f in factors if f.kind == KindSymbol.torus and isinstance(f.embedding, Abstract)]

    if len(abstract_tori) > 1:
        factors = [f for f in factors if not (f.kind == KindSymbol.torus and isinstance(f.embedding, Abstract))]
        factors.append(Factor(KindSymbol.torus, (sum(f.n for f in abstract_tori),)))

    return GroupExpr(tuple(sorted(factors, key=factor_key)), g.component_order, g.ambient)
