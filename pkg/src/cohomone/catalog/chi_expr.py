"""Printed Euler characteristic expressions such as `2*n`, `n*(n+1)/2` or `2^{n+1}`."""
from functools import lru_cache

from sympy import Expr, Integer, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from cohomone.exceptions import CohomoneException

N = Symbol('n', integer=True, positive=True)

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


@lru_cache(maxsize=1024)
def parse_chi(text: str) -> Expr:
    """
    Parse a printed expression in the parameter n.

    `^` is exponentiation and braces group like parentheses.

    :param str text: The expression, e.g. `n*2^{n-1}`.
    :return: The sympy expression.
    :raises CohomoneException: when the text is no expression in n.
    """
    source = text.replace('{', '(').replace('}', ')').replace(' ', '')
    try:
        expr = parse_expr(source, local_dict={'n': N}, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError) as e:
        raise CohomoneException(message=f"Cannot read the Euler characteristic '{text}': {e}")
    if not isinstance(expr, Expr) or expr.free_symbols - {N}:
        raise CohomoneException(message=f"Euler characteristic '{text}' is no expression in n.")
    return expr


def evaluate_chi(text: str, n: int) -> int:
    """
    Value of a printed expression at n.

    :raises CohomoneException: when the value is not an integer.
    """
    value = parse_chi(text).subs(N, n)
    if not isinstance(value, Integer):
        raise CohomoneException(message=f"Euler characteristic '{text}' is not an integer at n={n}: {value}.")
    return int(value)
