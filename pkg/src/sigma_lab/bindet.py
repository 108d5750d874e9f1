"""Binomial determinants (minors of Pascal's triangle) and the D_{d,i} family.

``D(d, i)`` has top row ``d-1, d, ..., 2d-1`` with the single entry ``d-1+i``
removed and bottom row ``0, 2, ..., 2(d-1)``.  Its value is
``2**(d(d-1)/2 - i) * C(d, i) * (d+i) / d``; the normalised value
``D(d, i) / 2**(d(d-1)/2 - i)`` is ``C(d, i) + C(d-1, i-1)``.
"""

from dataclasses import dataclass

from .errors import DomainError, InternalConsistencyError
from .exactmath import Fraction, big_det, binomial


@dataclass(frozen=True)
class BinDet:
    """A pair of equal-length natural tuples naming a binomial determinant.

    Rows of the matrix are indexed by ``a``, columns by ``b``:
    ``M[i][j] = C(a[i], b[j])``.  Tuples need not be increasing.
    """

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != len(self.b) or not self.a:
            raise DomainError(f"row tuples must have the same positive length: {self.a} / {self.b}")
        if min(self.a) < 0 or min(self.b) < 0:
            raise DomainError("binomial determinant entries must be natural numbers")

    @property
    def d(self):
        return len(self.a)

    def matrix(self):
        return [[binomial(x, y) for y in self.b] for x in self.a]


def bindet_eval(spec):
    """Exact value of a binomial determinant."""
    if not isinstance(spec, BinDet):
        spec = BinDet(*spec)
    return big_det(spec.matrix())


def _check_index(d, i):
    if d < 1:
        raise DomainError(f"D family needs d >= 1, got d={d}")
    if not 0 <= i <= d:
        raise IndexError(f"D family index i={i} outside [0, {d}]")


def even_row(d):
    return tuple(range(0, 2 * d, 2))


def d_family_spec(d, i):
    """The tuples of ``D(d, i)``."""
    _check_index(d, i)
    skip = d - 1 + i
    top = tuple(x for x in range(d - 1, 2 * d) if x != skip)
    return BinDet(top, even_row(d))


def _pow2(e):
    return Fraction(2) ** e


def d_closed_form(d, i):
    _check_index(d, i)
    value = _pow2(d * (d - 1) // 2 - i) * binomial(d, i) * Fraction(d + i, d)
    if value.denominator != 1:
        raise InternalConsistencyError(f"closed form for D({d},{i}) is not an integer: {value}")
    return value.numerator


def d_normalized(d, i):
    _check_index(d, i)
    return binomial(d, i) + binomial(d - 1, i - 1)


def d_value(d, i):
    """``bindet_eval(d_family_spec(d, i))``, memo-free convenience."""
    return bindet_eval(d_family_spec(d, i))


def d_recurrence_rhs(d, i):
    """Right-hand side of the two-term recurrence, as an exact rational.

    ``2**(d-1) (d-1)/(d-2+i) D(d-1, i-1) + 2**(d-1) (d-1)/(d-1+i) D(d-1, i)``.

    For ``i == d`` the second determinant ``D(d-1, d)`` is outside the family;
    it is taken as 0, the value the normalised closed form
    ``C(d-1, d) + C(d-2, d-1)`` assigns it.  (At ``i == d`` the top row is
    consecutive and only one determinant survives the column reduction.)
    """
    if d < 2 or not 1 <= i <= d:
        raise DomainError(f"recurrence defined for d >= 2 and 1 <= i <= d, got d={d}, i={i}")
    scale = 2 ** (d - 1) * (d - 1)
    first = Fraction(scale, d - 2 + i) * d_value(d - 1, i - 1)
    second = Fraction(scale, d - 1 + i) * d_value(d - 1, i) if i < d else Fraction(0)
    return first + second


def max_prime_factor(n):
    """Largest prime factor of ``|n|`` by trial division (1 for |n| <= 1)."""
    n = abs(n)
    best = 1
    q = 2
    while q * q <= n:
        while n % q == 0:
            best = q
            n //= q
        q += 1
    return n if n > 1 else best


# Column-reduction identities for binomial determinants.  Each returns the two
# sides as integers so callers can compare (or report) them.

def det1_sides(a, b):
    """Factor-out identity, for ``b[0] != 0``:

    ``(a; b) * prod(b) == prod(a) * (a-1; b-1)``.
    """
    if min(b) < 1 or min(a) < 1:
        raise DomainError("factor-out identity needs every a_i, b_j >= 1")
    prod_a = prod_b = 1
    for x in a:
        prod_a *= x
    for y in b:
        prod_b *= y
    lhs = bindet_eval((a, b)) * prod_b
    rhs = prod_a * bindet_eval(([x - 1 for x in a], [y - 1 for y in b]))
    return lhs, rhs


def det0_sides(x, b):
    """Consecutive top row ``x..x+d-1`` over ``0, b_2, ..., b_d``.

    Equals the (d-1)-determinant ``(x..x+d-2; b_2-1, ..., b_d-1)``.
    """
    d = len(b)
    if d < 2 or b[0] != 0 or min(b[1:]) < 1:
        raise DomainError("needs d >= 2, b_1 = 0 and b_j >= 1 for j >= 2")
    lhs = bindet_eval((range(x, x + d), b))
    rhs = bindet_eval((range(x, x + d - 1), [y - 1 for y in b[1:]]))
    return lhs, rhs


def det0bis_sides(x, gap, b):
    """Top row ``x..x+d`` with ``x+gap`` removed (``1 <= gap <= d-1``), ``b_1 = 0``.

    Splits into ``(x..x+d-1 minus x+gap-1; b-1) + (x..x+d-1 minus x+gap; b-1)``
    where ``b-1`` drops the leading zero.
    """
    d = len(b)
    if d < 2 or b[0] != 0 or min(b[1:]) < 1:
        raise DomainError("needs d >= 2, b_1 = 0 and b_j >= 1 for j >= 2")
    if not 1 <= gap <= d - 1:
        raise DomainError(f"gap must be interior, 1 <= gap <= {d - 1}")
    top = [x + j for j in range(d + 1) if j != gap]
    shifted = [y - 1 for y in b[1:]]
    first = [x + j for j in range(d) if j != gap - 1]
    second = [x + j for j in range(d) if j != gap]
    lhs = bindet_eval((top, b))
    rhs = bindet_eval((first, shifted)) + bindet_eval((second, shifted))
    return lhs, rhs
