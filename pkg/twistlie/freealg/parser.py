"""
Recursive descent parser for free-algebra expressions.

Grammar (whitespace is insignificant)::

    expr   := ["+"|"-"] term { ("+"|"-") term } ;
    term   := factor { ["*"|"/"] factor } ;
    factor := atom [ "^" ["-"] uint ] ;
    atom   := "A" | "B" | "C" | "I" | "m" | "b" | uint
            | "(" expr ")" | "[" expr "," expr "]" ;

Juxtaposition multiplies, so ``AB`` reads as ``A*B``. Division and negative
exponents are only defined for scalars, i.e. elements supported on `I`.
Parentheses and brackets nest at most `MAX_NESTING` levels deep.
"""

import re
import typing

from twistlie.engine.exceptions import ParseError
from twistlie.freealg.nc_poly import NcPoly, bracket
from twistlie.scalars import TwistParams, scalar_inv, is_zero

_TOKEN = re.compile(r'\s*(?:(?P<num>\d+)|(?P<name>[ABCImb])|'
                    r'(?P<op>[-+*/^()\[\],]))')
_END = 'end of input'
MAX_NESTING = 100

ATOM_START = ("'A'", "'B'", "'C'", "'I'", "'m'", "'b'", 'number',
              "'('", "'['")
_TERM_CONTINUE = ("'*'", "'/'", "'^'") + ATOM_START
_EXPR_CONTINUE = ("'+'", "'-'") + _TERM_CONTINUE


class _Token(typing.NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> typing.List[_Token]:
    """
    Split `text` into tokens, closing with an end marker.

    :raises ParseError: on a character outside the grammar.
    """
    tokens = []
    position = 0
    while True:
        match = _TOKEN.match(text, position)
        if not match:
            tail = text[position:]
            rest = position + len(tail) - len(tail.lstrip())
            if rest >= len(text):
                tokens.append(_Token('end', '', len(text)))
                return tokens
            raise ParseError(rest, ATOM_START,
                             f"unexpected character {text[rest]!r}")
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()


class _Parser(object):
    def __init__(self, text: str, params: TwistParams):
        self._tokens = tokenize(text)
        self._index = 0
        self._params = params
        self._depth = 0

    def _peek(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _at_op(self, *ops: str) -> bool:
        token = self._peek()
        return token.kind == 'op' and token.text in ops

    def _at_atom(self) -> bool:
        token = self._peek()
        return token.kind in ('num', 'name') or \
            (token.kind == 'op' and token.text in '([')

    def _open(self, token: _Token):
        if self._depth >= MAX_NESTING:
            raise ParseError(token.position, (),
                             f"nesting deeper than {MAX_NESTING} levels")
        self._depth += 1
        self._advance()

    def _expect(self, op: str, continuation: typing.Sequence[str]):
        if not self._at_op(op):
            raise ParseError(self._peek().position,
                             (repr(op),) + tuple(continuation))
        self._advance()

    def parse(self) -> NcPoly:
        value = self._expr()
        token = self._peek()
        if token.kind != 'end':
            raise ParseError(token.position, _EXPR_CONTINUE + (_END,))
        return value

    def _expr(self) -> NcPoly:
        negate = False
        if self._at_op('+', '-'):
            negate = self._advance().text == '-'
        value = self._term()
        if negate:
            value = -value
        while self._at_op('+', '-'):
            op = self._advance().text
            rhs = self._term()
            value = value + rhs if op == '+' else value - rhs
        return value

    def _term(self) -> NcPoly:
        value = self._factor()
        while True:
            if self._at_op('*'):
                self._advance()
                value = value * self._factor()
            elif self._at_op('/'):
                position = self._advance().position
                value = value * self._scalar_inverse(self._factor(), position)
            elif self._at_atom():
                value = value * self._factor()
            else:
                return value

    def _factor(self) -> NcPoly:
        base = self._atom()
        if not self._at_op('^'):
            return base
        position = self._advance().position
        negative = False
        if self._at_op('-'):
            self._advance()
            negative = True
        token = self._peek()
        if token.kind != 'num':
            raise ParseError(token.position, ('number', "'-'"))
        exponent = int(self._advance().text)
        if negative:
            base = self._scalar_inverse(base, position)
        return base ** exponent

    def _atom(self) -> NcPoly:
        token = self._peek()
        if token.kind == 'name':
            self._advance()
            if token.text == 'I':
                return NcPoly.one()
            if token.text == 'm':
                return NcPoly.scalar(self._params.m_scalar)
            if token.text == 'b':
                return NcPoly.scalar(self._params.b_scalar)
            return NcPoly.word(token.text)
        if token.kind == 'num':
            self._advance()
            return NcPoly.scalar(int(token.text))
        if self._at_op('('):
            self._open(token)
            value = self._expr()
            self._expect(')', _EXPR_CONTINUE)
            self._depth -= 1
            return value
        if self._at_op('['):
            self._open(token)
            left = self._expr()
            self._expect(',', _EXPR_CONTINUE)
            right = self._expr()
            self._expect(']', _EXPR_CONTINUE)
            self._depth -= 1
            return bracket(left, right)
        raise ParseError(token.position, ATOM_START)

    @classmethod
    def _scalar_inverse(cls, value: NcPoly, position: int) -> NcPoly:
        if not value.is_scalar():
            raise ParseError(position, (),
                             "only scalars can be divided by or raised "
                             "to negative powers")
        coeff = value.coefficient('')
        if is_zero(coeff):
            raise ParseError(position, (), "division by zero")
        return NcPoly.scalar(scalar_inv(coeff))


def parse(text: str, params: typing.Optional[TwistParams] = None) -> NcPoly:
    """
    Parse `text` into an element of the free algebra on A, B, C.

    The symbols `m`, `b` stand for the twist parameters: indeterminates in
    symbolic mode, rationals in concrete mode.

    Examples:
        >>> print(parse('[A,B]'))
        A*B - B*A
        >>> print(parse('m*A^2 - (1/(m-1))*I'))
        m*A^2 - (1/(m-1))*I
        >>> try:
        ...     parse('A*(B')
        ... except ParseError as error:
        ...     print(error.position)
        4

    :param text: Expression text.
    :param params: Twist parameters, symbolic when omitted.
    :raises ParseError: with the offending offset and the expected tokens.
    """
    return _Parser(text, params or TwistParams.symbolic()).parse()
