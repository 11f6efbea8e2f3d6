"""Minimum number of perfect squares summing to an integer.

Classical characterisation:
    1  n is a positive square
    2  every prime p = 3 (mod 4) divides n to an even power
    3  n is not of the form 4^a (8b + 7)
    4  otherwise (Lagrange)
"""
from __future__ import annotations

from math import isqrt


def factorize(n: int) -> dict[int, int]:
    """Trial division; fine for the coefficient sizes that show up here."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    while n % 2 == 0:
        out[2] = out.get(2, 0) + 1
        n //= 2
    p = 3
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_sum_of_two_squares(n: int) -> bool:
    if n < 0:
        return False
    if n == 0:
        return True
    return all(k % 2 == 0 for p, k in factorize(n).items() if p % 4 == 3)


def min_squares(n: int) -> int:
    if n < 0:
        raise ValueError("min_squares needs n >= 0")
    if n == 0:
        return 0
    if is_square(n):
        return 1
    if is_sum_of_two_squares(n):
        return 2
    m = n
    while m % 4 == 0:
        m //= 4
    return 4 if m % 8 == 7 else 3


def sum_of_squares_feasible(c: int, n: int) -> bool:
    """Can ``c`` be written as a sum of at most ``n`` perfect squares?"""
    if c == 0:
        return True
    return c > 0 and min_squares(c) <= n
