"""
Words over the alphabet {A, B, C}.

A word is a plain `str` over ``'ABC'``; the empty string is the unity `I`.
"""

import itertools
import re
import typing

LETTERS = 'ABC'
UNITY = ''

_RUN = re.compile(r'A+|B+|C+')


def is_word(text: str) -> bool:
    """:return: `True` if `text` only uses the letters A, B, C."""
    return all(letter in LETTERS for letter in text)


def filtration_degree(word: str) -> int:
    """
    Letter count with `C` weighted twice.

    Example:
        >>> filtration_degree('CCA')
        5
        >>> filtration_degree('')
        0

    """
    return len(word) + word.count('C')


def word_sort_key(word: str) -> tuple:
    """
    Key of the canonical printing order.

    Higher filtration degree first, then longer words, then the
    lexicographic order with A < B < C.

    Example:
        >>> sorted(['', 'BA', 'C', 'AB'], key=word_sort_key)
        ['AB', 'BA', 'C', '']

    """
    return -filtration_degree(word), -len(word), word


def letter_power(letter: str, exponent: int) -> str:
    """
    The word `letter^exponent`.

    Example:
        >>> letter_power('C', 3)
        'CCC'
        >>> letter_power('A', 0)
        ''

    """
    if letter not in LETTERS or len(letter) != 1:
        raise ValueError(f'{letter!r} is not one of {LETTERS}.')
    if exponent < 0:
        raise ValueError(f'Exponent must be nonnegative, got {exponent}.')
    return letter * exponent


def render_word(word: str) -> str:
    """
    Text of a word with runs written as powers.

    Example:
        >>> render_word('CCAAA')
        'C^2*A^3'
        >>> render_word('AB')
        'A*B'
        >>> render_word('')
        'I'

    """
    if not word:
        return 'I'
    parts = []
    for run in _RUN.findall(word):
        parts.append(run[0] if len(run) == 1 else f'{run[0]}^{len(run)}')
    return '*'.join(parts)


def all_words(max_length: int,
              letters: str = LETTERS) -> typing.Iterator[str]:
    """:return: Every word of length at most `max_length`, shortest first."""
    for length in range(max_length + 1):
        for letters_ in itertools.product(letters, repeat=length):
            yield ''.join(letters_)
