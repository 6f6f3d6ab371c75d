"""
Fibonacci bounds

A fragment of length l has at most Fib_{l+2} weights. Two alternating shapes
(and their A/B flips) reach the bound; moving the AB to the other row costs
exactly one weight.
"""

from functools import lru_cache
from typing import List

from src.core.exceptions import InvalidFragment
from src.genes import Fragment, Letter, validate_fragment


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_bound(ell: int) -> int:
    """Fib_{l+2}."""
    if ell < 1:
        raise InvalidFragment(f"fragment length must be >= 1, got {ell}")
    return fibonacci(ell + 2)


def _alternating(ell: int, ab_in_top: bool, flipped: bool) -> Fragment:
    # top: O A B A B ...   bottom: B A B A ...
    top: List[Letter] = [Letter.O] + [Letter.A if i % 2 else Letter.B for i in range(1, ell)]
    bottom: List[Letter] = [Letter.B if i % 2 == 0 else Letter.A for i in range(ell)]
    if ab_in_top:
        top[-1] = Letter.AB
    else:
        bottom[-1] = Letter.AB
    F = validate_fragment(zip(top, bottom))
    return F.flip() if flipped else F


def extremal_fragment(ell: int, flipped: bool = False) -> Fragment:
    """The fragment of length l >= 2 with exactly Fib_{l+2} weights."""
    if ell < 2:
        raise InvalidFragment(f"extremal fragments have length >= 2, got {ell}")
    return _alternating(ell, ab_in_top=(ell % 2 == 0), flipped=flipped)


def near_extremal_fragment(ell: int, flipped: bool = False) -> Fragment:
    """The fragment of length l >= 2 with Fib_{l+2} - 1 weights."""
    if ell < 2:
        raise InvalidFragment(f"near-extremal fragments have length >= 2, got {ell}")
    return _alternating(ell, ab_in_top=(ell % 2 == 1), flipped=flipped)
