"""Loading and instantiation of catalog records."""
import logging
from functools import lru_cache
from typing import Optional

from cohomone.collections import CatalogCollection
from cohomone.diagrams import Diagram, parse_diagram
from cohomone.enums import GroupFamily
from cohomone.exceptions import CohomoneException, OutOfRangeException
from cohomone.models import CatalogRecord
from .data import CATALOG_DOCUMENT
from .templates import render


@lru_cache(maxsize=1)
def _load() -> CatalogCollection:
    records = CatalogRecord.Schema().load(CATALOG_DOCUMENT, many=True)
    logging.debug(f'Loaded {len(records)} catalog entries.')
    return CatalogCollection(records)


def catalog_entries(family: Optional[GroupFamily] = None) -> CatalogCollection:
    """
    The embedded catalog, in canonical order.

    :param GroupFamily family: Restrict to the entries of this family.
    :return: Collection of catalog records.
    """
    entries = _load()
    return entries if family is None else entries.where_family(family)


def entry_by_id(entry_id: str) -> CatalogRecord:
    """
    :raises CohomoneException: when there is no entry with the given identifier.
    """
    entry = _load().find_by_id(entry_id)
    if entry is None:
        raise CohomoneException(message=f"Unknown catalog entry '{entry_id}'.", error_code='Unknown Entry')
    return entry


def entry_text(e: CatalogRecord, n: int) -> str:
    """Text form `H < K-, K+ < G` of the instantiation of `e` at n."""
    if not e.in_range(n):
        raise OutOfRangeException(entry_id=e.id, n=n)
    return f'{render(e.h, n)} < {render(e.kminus, n)}, {render(e.kplus, n)} < {e.family.group_text(n)}'


def instantiate_entry(e: CatalogRecord, n: int) -> Diagram:
    """
    Instantiate a catalog entry at n.

    The parameter is substituted into all four templates; the subgroups are then placed in the ambient of G, or in
    SO(2n+1) for the spin level entries of Spin(2n+1).

    :param CatalogRecord e: The entry.
    :param int n: The family parameter.
    :return: The diagram.
    :raises OutOfRangeException: when n lies outside the range of the entry.
    :raises GroupSyntaxException: when an instantiated template does not parse.
    :raises GroupSemanticException: when an instantiated group is invalid in the ambient.
    """
    d = parse_diagram(entry_text(e, n))
    if e.spin_level != d.spin_level:
        raise CohomoneException(message=f"Entry '{e.id}' is marked spin level {e.spin_level} in family "
                                        f"{e.family.value}.", error_code='Inconsistent Entry')
    return d
