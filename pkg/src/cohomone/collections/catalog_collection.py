from typing import Optional

from cohomone.enums import GroupFamily
from cohomone.models import CatalogRecord
from .base_collection import Collection


class CatalogCollection(Collection[CatalogRecord]):
    def find_by_id(self, entry_id: str) -> Optional[CatalogRecord]:
        return self.first(id=entry_id)

    def where_family(self, family: GroupFamily) -> 'CatalogCollection':
        return self.where(family=GroupFamily(family))

    def where_in_range(self, n: int) -> 'CatalogCollection':
        """
        Filter the collection on entries that can be instantiated at n.

        :param int n: The family parameter.
        :return: Collection of entries whose range contains n.
        :rtype: CatalogCollection
        """
        return CatalogCollection(e for e in self if e.in_range(n))

    def where_printed(self, printed=True) -> 'CatalogCollection':
        return CatalogCollection(e for e in self if (e.printed_chi is not None) == printed)
