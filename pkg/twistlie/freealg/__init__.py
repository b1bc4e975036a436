from .words import LETTERS, UNITY, is_word, filtration_degree, \
    word_sort_key, letter_power, render_word, all_words
from .nc_poly import NcPoly, bracket, render_term
from .parser import parse, tokenize
