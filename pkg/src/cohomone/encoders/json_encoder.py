import dataclasses
from enum import Enum
from fractions import Fraction
from json import JSONEncoder
from typing import Any

from sympy import Integer

type _Primitives = None | dict | list | str | int | float | bool | set | frozenset
type JsonSerializable = _Primitives | Enum | Integer | Fraction | Any


class CohomoneJsonEncoder(JSONEncoder):
    """
    JSON encoder for results: dataclass instances become objects, enums their values, sets sorted lists, sympy integers
    ints and fractions strings such as '1/2'.
    """

    def default(self, obj: JsonSerializable):
        if isinstance(obj, (set, frozenset)):
            return sorted(obj, key=str)
        elif dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return dataclasses.asdict(obj)
        elif isinstance(obj, Enum):
            return obj.value
        elif isinstance(obj, Integer):
            return int(obj)
        elif isinstance(obj, Fraction):
            return str(obj)

        return super().default(obj)
