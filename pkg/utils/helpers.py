from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Tuple

from .errors import ExpressionError

IntVector = Tuple[int, ...]


def format_fraction(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def lcm_of_denominators(values: Iterable) -> int:
    result = 1
    for value in values:
        result = lcm(result, Fraction(value).denominator)
    return result


def ceil_div(numerator: int, denominator: int) -> int:
    return -(-numerator // denominator)


def add_vectors(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a + b for a, b in zip(u, v))


def unit_vector(n: int, index: int) -> IntVector:
    return tuple(1 if i == index else 0 for i in range(n))


def is_positive_root_vector(v: Sequence) -> bool:
    """Roots are sign-coherent, so any nonzero vector with no negative entry counts as positive."""
    return all(x >= 0 for x in v) and any(x != 0 for x in v)


def parse_int_list(text: str) -> IntVector:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ExpressionError(f"Invalid coordinate list: [{text}]")
