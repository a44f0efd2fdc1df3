from dataclasses import field
from typing import Optional

from marshmallow import EXCLUDE
from marshmallow.fields import Enum
from marshmallow_dataclass import dataclass

from .namespaced_schema import NamespacedSchema
from ..enums import GroupFamily


@dataclass(base_schema=NamespacedSchema, frozen=True)
class CatalogRecord:
    """
    One parameterized row of the classification: a diagram `h < kminus, kplus < G` for every G of `family` with
    parameter n in [n_min, n_max].

    The four group templates are group expressions in which `{expr}` is replaced by the value of a sympy expression in
    n, `<v^expr>` by expr comma separated copies of v and `<a..b>` by the comma separated integers from a to b.
    """
    id: str = field(compare=True)
    family: GroupFamily = field(compare=False, metadata={'marshmallow_field': Enum(GroupFamily, by_value=True)})
    n_min: int = field(compare=False)
    n_max: Optional[int] = field(compare=False)
    h: str = field(compare=False)
    kminus: str = field(compare=False)
    kplus: str = field(compare=False)
    printed_chi: Optional[str] = field(compare=False)
    source: str = field(compare=False)
    spin_level: bool = field(compare=False, default=False)
    notes: str = field(compare=False, default='')

    class Meta:
        name = "entry"
        plural_name = "entries"
        unknown = EXCLUDE

    def in_range(self, n: int) -> bool:
        return n >= self.n_min and (self.n_max is None or n <= self.n_max)
