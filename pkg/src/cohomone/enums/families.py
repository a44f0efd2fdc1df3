from enum import Enum


class GroupFamily(str, Enum):
    """Families of simple groups G the catalog and the enumerator are organised by."""
    su = "SU"
    so_odd = "SO-odd"
    so_even = "SO-even"
    spin_odd = "Spin-odd"
    sp = "Sp"

    def group_text(self, n: int) -> str:
        """Group-expression text of the member of this family with parameter `n`."""
        match self:
            case GroupFamily.su:
                return f'SU({n})'
            case GroupFamily.so_odd:
                return f'SO({2 * n + 1})'
            case GroupFamily.so_even:
                return f'SO({2 * n})'
            case GroupFamily.spin_odd:
                return f'Spin({2 * n + 1})'
            case GroupFamily.sp:
                return f'Sp({n})'
