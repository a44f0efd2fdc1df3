"""Group templates of catalog records: group expressions with placeholders for the family parameter n."""
import re

from sympy import Integer, Symbol, sympify

from cohomone.exceptions import GroupSyntaxException

N = Symbol('n', integer=True)

_REPETITION = re.compile(r'<([^<>]*)>')
_PLACEHOLDER = re.compile(r'(?<!SU)\{([^{}]*)\}')
_TRIVIAL = re.compile(r'^(?:(?:SU|SO|Spin)\([01]\)|(?:Sp|U)\(0\)|T0)(?:@\[\d+\.\.\d+\]|#\w+(?:\([^)]*\))?)?$')


def _value(text: str, n: int, template: str) -> int:
    try:
        value = sympify(text, locals={'n': N}).subs(N, n)
    except (SyntaxError, TypeError, ValueError) as e:
        raise GroupSyntaxException(message=f"Cannot evaluate '{text}': {e}", text=template)
    if not isinstance(value, Integer):
        raise GroupSyntaxException(message=f"'{text}' is not an integer at n={n}.", text=template)
    return int(value)


def _expand(match: re.Match, n: int, template: str) -> str:
    body = match.group(1)
    if '..' in body:
        first, last = body.split('..', 1)
        return ','.join(str(i) for i in range(_value(first, n, template), _value(last, n, template) + 1))

    item, _, count = body.rpartition('^')
    if not item:
        raise GroupSyntaxException(message=f"Expected '<v^count>' or '<a..b>', found '<{body}>'.", text=template)
    return ','.join([str(_value(item, n, template))] * max(_value(count, n, template), 0))


def _split_factors(product: str) -> list[str]:
    factors, depth, start = [], 0, 0
    for i, c in enumerate(product):
        if c in '([{':
            depth += 1
        elif c in ')]}':
            depth -= 1
        elif c == 'x' and depth == 0:
            factors.append(product[start:i])
            start = i + 1
    factors.append(product[start:])
    return factors


def render(template: str, n: int) -> str:
    """
    Instantiate a group template at n.

    Every `{expr}` is replaced by its value, except the braces of composite groups `SU{..}`. Then `<a..b>` becomes the
    comma separated integers a, ..., b and `<v^c>` becomes c comma separated copies of v. Empty lists collapse, and
    factors that are trivial groups, e.g. SU(1) or Sp(0), are dropped; a product without factors becomes `1`.

    :param str template: The template, e.g. `S1[w(1,-2,<0^{n-2}>)]xSp({n-2})@[3..{n}]`.
    :param int n: The family parameter.
    :return: A group expression.
    :raises GroupSyntaxException: when a placeholder is no integer expression in n.
    """
    text = _PLACEHOLDER.sub(lambda m: str(_value(m.group(1), n, template)), template)
    text = _REPETITION.sub(lambda m: _expand(m, n, template), text)

    previous = None
    while previous != text:
        previous = text
        text = text.replace(',,', ',').replace('(,', '(').replace(',)', ')')

    prefix, product = '', text.strip()
    if re.match(r'^Z\d+\.', product):
        prefix, product = product.split('.', 1)
        prefix += '.'

    factors = [f.strip() for f in _split_factors(product) if not _TRIVIAL.match(f.strip())]
    return prefix + ('x'.join(factors) or '1')
