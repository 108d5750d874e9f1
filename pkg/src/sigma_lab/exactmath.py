"""Arbitrary-precision integer building blocks.

Python's ``int`` is the big integer type and :class:`fractions.Fraction` the
reduced rational; nothing here ever touches floating point.
"""

from fractions import Fraction
from math import comb

from .errors import DimensionError

__all__ = ["Fraction", "factorial", "binomial", "big_det", "FACTORIAL_CACHE_CAP"]

FACTORIAL_CACHE_CAP = 512

_factorials = [1]


def factorial(n, cap=FACTORIAL_CACHE_CAP):
    """Return ``n!`` exactly; values up to ``cap`` are memoized."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n < len(_factorials):
        return _factorials[n]
    if n > cap:
        acc = _factorials[-1]
        for k in range(len(_factorials), n + 1):
            acc *= k
        return acc
    acc = _factorials[-1]
    for k in range(len(_factorials), n + 1):
        acc *= k
        _factorials.append(acc)
    return acc


def binomial(n, k):
    """C(n, k), taken to be 0 when k < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def big_det(matrix):
    """Exact determinant of a square integer matrix (Bareiss elimination).

    Every division in the elimination is exact, so intermediate values stay
    integral and no rounding can occur.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DimensionError(f"big_det needs a non-empty square matrix, got {n} rows "
                             f"of lengths {[len(r) for r in rows]}")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            lead = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]
