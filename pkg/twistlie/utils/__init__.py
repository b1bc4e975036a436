from .echelon import EchelonSpan, Certificate
from .sampling import random_scalar, random_word, random_poly
