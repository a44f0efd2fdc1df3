"""Integer lattice arithmetic on torus cocharacter lattices, via Smith normal forms."""
from functools import lru_cache, reduce
from math import prod
from typing import Iterable, Optional

from sympy import ZZ, QQ, ilcm
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors, smith_normal_decomp

type Vector = tuple[int, ...]


def _matrix(vectors: tuple[Vector, ...], width: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(x) for x in v] for v in vectors], (len(vectors), width), ZZ)


def _rows(m: DomainMatrix) -> list[Vector]:
    return [tuple(int(x) for x in row) for row in m.to_list()]


def _key(vectors: Iterable[Vector]) -> tuple[Vector, ...]:
    return tuple(tuple(v) for v in vectors if any(v))


@lru_cache(maxsize=65536)
def _saturate(vectors: tuple[Vector, ...], width: int) -> tuple[Vector, ...]:
    if not vectors:
        return ()
    a, _, t = smith_normal_decomp(_matrix(vectors, width))
    t_inv = t.convert_to(QQ).inv().convert_to(ZZ)
    diagonal = min(a.shape)
    keep = [i for i in range(diagonal) if a[i, i].element != 0]
    rows = _rows(t_inv)
    return tuple(rows[i] for i in keep)


def saturate(vectors: Iterable[Vector], width: int) -> tuple[Vector, ...]:
    """
    Basis of the saturation of the lattice spanned by `vectors`: all integer vectors in their rational span.

    :param vectors: Generators, each of length `width`.
    :param int width: Dimension of the ambient lattice.
    :return: A basis of the saturated lattice.
    """
    return _saturate(_key(vectors), width)


@lru_cache(maxsize=65536)
def _rank(vectors: tuple[Vector, ...], width: int) -> int:
    return _matrix(vectors, width).rank() if vectors else 0


def span_rank(vectors: Iterable[Vector], width: int) -> int:
    return _rank(_key(vectors), width)


def in_span(small: Iterable[Vector], big: Iterable[Vector], width: int) -> bool:
    """Whether every vector of `small` lies in the rational span of `big`."""
    big = _key(big)
    return _rank(big + _key(small), width) == _rank(big, width)


@lru_cache(maxsize=65536)
def _torsion_product(vectors: tuple[Vector, ...], width: int) -> int:
    if not vectors:
        return 1
    return prod(abs(int(x)) for x in invariant_factors(_matrix(vectors, width)) if x != 0)


def lattice_index(outer: Iterable[Vector], inner: Iterable[Vector], width: int) -> Optional[int]:
    """
    Index of the lattice spanned by `inner` in the lattice spanned by `outer`, assuming `inner` lies in `outer`.

    :return: The index, or None when the two lattices do not have the same rank (infinite index).
    """
    outer, inner = _key(outer), _key(inner)
    if _rank(outer, width) != _rank(inner, width) or not in_span(inner, outer, width):
        return None
    return _torsion_product(inner, width) // _torsion_product(outer, width)


def integer_kernel(forms: Iterable[Vector], width: int) -> tuple[Vector, ...]:
    """Basis of the integer vectors on which every linear form of `forms` vanishes."""
    forms = _key(forms)
    if not forms:
        return tuple(tuple(1 if i == j else 0 for i in range(width)) for j in range(width))
    null = _matrix(forms, width).to_field().nullspace().to_Matrix()
    vectors = []
    for i in range(null.rows):
        row = list(null.row(i))
        scale = reduce(ilcm, (x.q for x in row), 1)
        vectors.append(tuple(int(x * scale) for x in row))
    return saturate(vectors, width)


def reduced_basis(vectors: Iterable[Vector], width: int) -> tuple[Vector, ...]:
    """LLL-reduced basis of the saturation of the span of `vectors`, with sign-normalized rows, sorted."""
    basis = saturate(vectors, width)
    if not basis:
        return ()
    rows = _rows(_matrix(basis, width).lll())
    normalized = []
    for row in rows:
        lead = next(x for x in row if x)
        normalized.append(row if lead > 0 else tuple(-x for x in row))
    return tuple(sorted(normalized, key=lambda r: (sum(abs(x) for x in r), [-x for x in r])))
