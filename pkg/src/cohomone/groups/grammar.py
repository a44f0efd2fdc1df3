"""
Text grammar for group expressions.

    group    := [ "Z" INT "." ] product [ "in" ambient ]
    product  := "1" | term { "x" term }
    term     := simple [ embed ]
    simple   := "SU(" INT ")" | "SO(" INT ")" | "Spin(" INT ")" | "Sp(" INT ")" | "U(" INT ")"
              | "SU{" INT { "," INT } "}" | "G2" | "T" INT | "S1"
    embed    := "@[" INT ".." INT "]"
              | [ "[" ] "w(" SIGNEDINT { "," SIGNEDINT } ")" [ ":" ( "R" | "C" | "H" ) ] [ "]" ]
              | "#" TAG [ "(" SIGNEDINT { "," SIGNEDINT } ")" ]
    ambient  := "SU(" INT ")" | "SO(" INT ")" | "Spin(" INT ")" | "Sp(" INT ")"

Whitespace is ignored everywhere. Offsets in syntax errors are byte offsets into the UTF-8 encoded input.
"""
from functools import lru_cache
from typing import Optional

from cohomone.enums import FieldTag, KindSymbol, NamedTag
from cohomone.exceptions import GroupSemanticException, GroupSyntaxException, UnsupportedGroupException
from .model import (Abstract, Ambient, DiagonalCircle, Embedding, Factor, GroupExpr, NamedSpecial, StandardBlock,
                    ambient_group)
from .normalize import normalize_group
from .invariants import dim, rank
from .realization import realize_factor

_SIMPLE_PREFIXES = (
    ('Spin(', KindSymbol.spin),
    ('Sp(', KindSymbol.sp),
    ('SU{', KindSymbol.su_composite),
    ('SU(', KindSymbol.su),
    ('SO(', KindSymbol.so),
    ('U(', KindSymbol.u),
    ('G2', KindSymbol.g2),
    ('S1', KindSymbol.torus),
    ('T', KindSymbol.torus),
)

_AMBIENT_PREFIXES = (
    ('Spin(', KindSymbol.spin),
    ('Sp(', KindSymbol.sp),
    ('SU(', KindSymbol.su),
    ('SO(', KindSymbol.so),
)

_TAGS = sorted(NamedTag, key=lambda t: -len(t.value))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: Optional[int] = None) -> GroupSyntaxException:
        offset = len(self.text[:self.pos if pos is None else pos].encode('utf-8'))
        return GroupSyntaxException(message=message, offset=offset, text=self.text)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def accept(self, literal: str) -> bool:
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str):
        if not self.accept(literal):
            found = self.text[self.pos:self.pos + 8] or 'end of input'
            raise self.error(f"Expected '{literal}' but found '{found}'.")

    def integer(self, signed: bool = False) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in '+-':
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise self.error('Expected an integer.', start)
        return int(self.text[start:self.pos])

    def integer_list(self, close: str) -> tuple[int, ...]:
        values = [self.integer(signed=True)]
        while self.accept(','):
            values.append(self.integer(signed=True))
        self.expect(close)
        return tuple(values)

    def group(self) -> GroupExpr:
        component_order = 1
        self.skip_ws()
        if self.peek('Z'):
            self.pos += 1
            component_order = self.integer()
            if component_order < 1:
                raise self.error('The component order must be positive.')
            self.expect('.')

        factors = []
        if not self.accept('1'):
            factors.append(self.term())
            while self.accept('x'):
                factors.append(self.term())

        ambient = None
        if self.accept('in'):
            ambient = self.ambient()

        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"Unexpected trailing input '{self.text[self.pos:self.pos + 8]}'.")

        return GroupExpr(tuple(factors), component_order, ambient)

    def simple(self) -> tuple[KindSymbol, tuple[int, ...]]:
        start = self.pos
        for prefix, kind in _SIMPLE_PREFIXES:
            if not self.accept(prefix):
                continue
            match prefix:
                case 'G2':
                    return kind, ()
                case 'S1':
                    return kind, (1,)
                case 'T':
                    return kind, (self.integer(),)
                case 'SU{':
                    values = self.integer_list('}')
                    return kind, values
            value = self.integer()
            self.expect(')')
            return kind, (value,)

        raise self.error('Expected a group symbol such as SU(n), SO(n), Spin(n), Sp(n), U(n), SU{..}, G2, Tn or S1.',
                         start)

    def term(self) -> Factor:
        self.skip_ws()
        start = self.pos
        kind, params = self.simple()
        embedding = self.embed()
        try:
            return Factor(kind, params, embedding)
        except GroupSemanticException as e:
            e.offset = len(self.text[:start].encode('utf-8'))
            raise e

    def embed(self) -> Embedding:
        if self.accept('@['):
            first = self.integer()
            self.expect('..')
            last = self.integer()
            self.expect(']')
            return StandardBlock(first, last)

        bracketed = self.accept('[')
        if bracketed or self.peek('w('):
            self.expect('w(')
            weights = self.integer_list(')')
            field = None
            if self.accept(':'):
                self.skip_ws()
                letter = self.text[self.pos:self.pos + 1]
                if letter not in ('R', 'C', 'H'):
                    raise self.error('Expected a field tag R, C or H.')
                self.pos += 1
                field = FieldTag(letter)
            if bracketed:
                self.expect(']')
            return DiagonalCircle(weights, field)

        if self.accept('#'):
            self.skip_ws()
            start = self.pos
            # longest tag first, the factor separator 'x' may follow a tag directly
            tag = next((t for t in _TAGS if self.text.startswith(t.value, start)), None)
            if tag is None:
                end = start
                while end < len(self.text) and self.text[end].isalnum():
                    end += 1
                raise self.error(f"Unknown embedding tag '{self.text[start:end]}'.", start)
            self.pos += len(tag.value)
            args = self.integer_list(')') if self.accept('(') else ()
            return NamedSpecial(tag, args)

        return Abstract()

    def ambient(self) -> Ambient:
        start = self.pos
        for prefix, kind in _AMBIENT_PREFIXES:
            if self.accept(prefix):
                size = self.integer()
                self.expect(')')
                try:
                    return Ambient(kind, size)
                except GroupSemanticException as e:
                    e.offset = len(self.text[:start].encode('utf-8'))
                    raise e

        raise self.error('Expected an ambient group SU(n), SO(n), Spin(n) or Sp(n).', start)


@lru_cache(maxsize=65536)
def parse_group(text: str) -> GroupExpr:
    """
    Parse a group expression.

    :param str text: Expression in the group grammar, e.g. `Z2.S1[w(1,-1,0,0)]xSU(2)@[3..4] in SU(4)`.
    :return: The group, with its embedding data checked against the ambient when one is given.
    :raises GroupSyntaxException: when the text does not conform to the grammar.
    :raises GroupSemanticException: when the text denotes no valid group, e.g. overlapping blocks.
    """
    g = _Parser(text).group()
    if g.ambient is not None:
        _check_against_ambient(g)
    return g


def _check_against_ambient(g: GroupExpr):
    ambient = ambient_group(g.ambient)

    if rank(g) > rank(ambient) or dim(g) > dim(ambient):
        raise GroupSemanticException(message=f'{format_group(g)} does not fit into {g.ambient.text}.')
    seen: set[int] = set()
    for f in g.factors:
        try:
            placed = realize_factor(f, g.ambient)
        except UnsupportedGroupException:
            # abstract factors without a standard placement stay abstract
            continue
        # blocks are compared on their given coordinates, which realization may move
        coordinates = frozenset(range(f.embedding.start, f.embedding.end + 1)) \
            if isinstance(f.embedding, StandardBlock) else placed.coordinates
        if seen & coordinates:
            raise GroupSemanticException(message=f"Overlapping blocks on coordinates {sorted(seen & coordinates)}.")
        seen |= coordinates


def format_embedding(emb: Embedding) -> str:
    match emb:
        case StandardBlock():
            return f'@[{emb.start}..{emb.end}]'
        case DiagonalCircle():
            suffix = f':{emb.field.value}' if emb.field else ''
            return f"[w({','.join(map(str, emb.weights))}){suffix}]"
        case NamedSpecial():
            args = f"({','.join(map(str, emb.args))})" if emb.args else ''
            return f'#{emb.tag.value}{args}'

    return ''


def format_factor(f: Factor) -> str:
    return f.symbol + format_embedding(f.embedding)


@lru_cache(maxsize=65536)
def format_group(g: GroupExpr) -> str:
    """
    Canonical text of a group: the normalized group in the grammar of :func:`parse_group`.

    :param GroupExpr g: The group.
    :return: Deterministic text that parses back to `normalize_group(g)`.
    """
    g = normalize_group(g)
    text = 'x'.join(format_factor(f) for f in g.factors) or '1'

    if g.component_order > 1:
        text = f'Z{g.component_order}.{text}'
    if g.ambient is not None:
        text = f'{text} in {g.ambient.text}'

    return text
