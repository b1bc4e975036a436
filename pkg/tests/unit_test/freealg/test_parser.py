import pytest

from twistlie.engine.exceptions import ParseError
from twistlie.freealg import NcPoly, parse
from twistlie.freealg.parser import MAX_NESTING
from twistlie.scalars import TwistParams, SYMBOL_M


@pytest.mark.parametrize('text,expected', [
    ('AB', 'A*B'),
    ('A B', 'A*B'),
    ('[A,B]', 'A*B - B*A'),
    ('[A,[A,B]]', 'A^2*B - 2*A*B*A + B*A^2'),
    ('-A + 2*B', '-A + 2*B'),
    ('(A + B)^2', 'A^2 + A*B + B*A + B^2'),
    ('C^0', 'I'),
    ('m^-1 * m * A', 'A'),
    ('A/2', '(1/2)*A'),
    ('A/(m-1)', '(1/(m-1))*A'),
    ('3 - 3', '0'),
])
def test_parse(text, expected):
    assert str(parse(text)) == expected


def test_parse_concrete():
    params = TwistParams.concrete('1/2', 3)
    assert parse('m*A + b', params) == parse('(1/2)*A + 3*I')


def test_parse_symbolic_scalar():
    assert parse('m') == NcPoly.scalar(SYMBOL_M)


@pytest.mark.parametrize('text,position', [
    ('A*', 2),
    ('A + + B', 4),
    ('A*(B', 4),
    ('[A B]', 4),
    ('A & B', 2),
    ('', 0),
    ('A)', 1),
    ('A^B', 2),
])
def test_parse_error_position(text, position):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == position
    assert 'parse error at offset' in str(info.value)


def test_parse_error_expected():
    with pytest.raises(ParseError) as info:
        parse('A*(B')
    assert "')'" in info.value.expected


@pytest.mark.parametrize('text', ['A/B', 'A^-1', '1/0', '(m-m)^-1'])
def test_parse_division(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_nesting_limit():
    deepest = '(' * MAX_NESTING + 'A' + ')' * MAX_NESTING
    assert str(parse(deepest)) == 'A'
    with pytest.raises(ParseError) as info:
        parse('(' * (MAX_NESTING + 1) + 'A' + ')' * (MAX_NESTING + 1))
    assert info.value.position == MAX_NESTING
    with pytest.raises(ParseError) as info:
        parse('[A,' * 5000 + 'B' + ']' * 5000)
    assert info.value.position == 3 * MAX_NESTING
