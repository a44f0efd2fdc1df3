from abc import ABCMeta
from collections.abc import Sequence
from typing import Any, Optional, TypeVar

T = TypeVar('T')


class Collection(Sequence[T], metaclass=ABCMeta):
    """Immutable list of records, filtered on attribute values."""

    def __init__(self, items):
        self._items = tuple(items)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} of {len(self._items)}>"

    def __len__(self) -> int:
        return len(self._items)

    def __getitem__(self, ii):
        if isinstance(ii, slice):
            return type(self)(self._items[ii])
        return self._items[ii]

    def _matches(self, item: T, conditions: dict[str, Any]) -> bool:
        return all(getattr(item, prop) == value for prop, value in conditions.items())

    def pluck(self, prop: str) -> list:
        """
        Get a list with the values of the given prop.

        :param str prop: Attribute to pluck from the items.
        :return: List of values, in collection order.
        """
        return [getattr(v, prop) for v in self._items]

    def where(self, **conditions) -> 'Collection[T]':
        """The items whose attributes equal all given values, as a collection of the same type."""
        return type(self)(v for v in self._items if self._matches(v, conditions))

    def first(self, **conditions) -> Optional[T]:
        return next((v for v in self._items if self._matches(v, conditions)), None)
