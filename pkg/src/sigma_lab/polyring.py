"""Sparse multivariate polynomials over Z/pZ and coefficient extraction.

A polynomial is a dict from exponent tuples to residues in ``[1, p-1]``; zero
coefficients are never stored.  Residues are plain ints.
"""

from dataclasses import dataclass
from itertools import product

from .bindet import bindet_eval, even_row
from .errors import ArityError, DomainError, HypothesisError
from .exactmath import binomial, factorial


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    q = 3
    while q * q <= n:
        if n % q == 0:
            return False
        q += 2
    return True


def check_modulus(p, odd=False):
    """Validate ``p`` as a prime (optionally odd) and return it as an int."""
    p = int(p)
    if not is_prime(p):
        raise DomainError(f"modulus {p} is not prime")
    if odd and p == 2:
        raise DomainError("an odd prime modulus is required")
    return p


def inverse(x, p):
    """Modular inverse by the extended Euclidean algorithm."""
    r0, r1 = x % p, p
    s0, s1 = 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise ZeroDivisionError(f"{x} is not invertible mod {p}")
    return s0 % p


class SparsePoly:
    """Polynomial in ``nvars`` variables over Z/pZ."""

    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p, nvars, terms=None):
        self.p = p
        self.nvars = nvars
        self.terms = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, c in items:
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ArityError(f"exponent vector {exps} has length != {nvars}")
                c = (self.terms.get(exps, 0) + c) % p
                if c:
                    self.terms[exps] = c
                else:
                    self.terms.pop(exps, None)

    @classmethod
    def constant(cls, p, nvars, c=1):
        return cls(p, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, p, nvars, index):
        exps = [0] * nvars
        exps[index] = 1
        return cls(p, nvars, {tuple(exps): 1})

    @classmethod
    def linear_sum(cls, p, nvars):
        """``X_0 + ... + X_{nvars-1}``."""
        return cls(p, nvars, {tuple(int(j == i) for j in range(nvars)): 1 for i in range(nvars)})

    def _check(self, other):
        if self.p != other.p or self.nvars != other.nvars:
            raise ArityError(f"cannot combine polynomials over (p={self.p}, n={self.nvars}) "
                             f"and (p={other.p}, n={other.nvars})")

    def __add__(self, other):
        self._check(other)
        out = SparsePoly(self.p, self.nvars)
        out.terms = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.terms.get(e, 0) + c) % self.p
            if v:
                out.terms[e] = v
            else:
                out.terms.pop(e, None)
        return out

    def __neg__(self):
        out = SparsePoly(self.p, self.nvars)
        out.terms = {e: self.p - c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        p = self.p
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                acc[e] = (acc.get(e, 0) + c1 * c2) % p
        out = SparsePoly(p, self.nvars)
        out.terms = {e: c for e, c in acc.items() if c}
        return out

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative polynomial power")
        result = SparsePoly.constant(self.p, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        return (isinstance(other, SparsePoly) and self.p == other.p
                and self.nvars == other.nvars and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return f"SparsePoly(p={self.p}, 0)"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"X{i}^{k}" if k > 1 else f"X{i}" for i, k in enumerate(e) if k)
            parts.append(f"{self.terms[e]}*{mono}" if mono else str(self.terms[e]))
        return f"SparsePoly(p={self.p}, {' + '.join(parts)})"

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, deg):
        return all(sum(e) == deg for e in self.terms)

    def coefficient(self, exps):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ArityError(f"exponent vector {exps} has length != {self.nvars}")
        return self.terms.get(exps, 0)

    def __call__(self, *point):
        if len(point) != self.nvars:
            raise ArityError(f"expected {self.nvars} arguments, got {len(point)}")
        p = self.p
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * pow(x, k, p) % p
            total += v
        return total % p


def poly_add(f, g):
    return f + g


def poly_mul(f, g):
    return f * g


def poly_pow(f, n):
    return f ** n


def coefficient(poly, exps):
    return poly.coefficient(exps)


def vandermonde(d, p):
    """``prod_{i<j} (X_j - X_i)``."""
    out = SparsePoly.constant(p, d)
    for j in range(d):
        for i in range(j):
            out = out * (SparsePoly.variable(p, d, j) - SparsePoly.variable(p, d, i))
    return out


def vandermonde_squares(d, p):
    """``prod_{0<=i<j<=d-1} (X_j^2 - X_i^2)``; the constant 1 for d = 1."""
    if d < 1:
        raise DomainError("need at least one variable")
    out = SparsePoly.constant(p, d)
    for j in range(d):
        for i in range(j):
            xj = SparsePoly.variable(p, d, j)
            xi = SparsePoly.variable(p, d, i)
            out = out * (xj * xj - xi * xi)
    return out


def expand_L(d, t, p):
    """Expand ``(X_0 + ... + X_{d-1})**t * prod_{i<j}(X_j^2 - X_i^2)`` mod p."""
    if t >= p:
        raise HypothesisError(f"need t < p, got t={t}, p={p}")
    return SparsePoly.linear_sum(p, d) ** t * vandermonde_squares(d, p)


def devlp_rhs_coefficient(d, t, b, p):
    """Predicted coefficient of ``prod X_i^{b_i}`` in :func:`expand_L`.

    ``t! * prod_i (2i)! / prod_i b_i! * (b_0..b_{d-1}; 0, 2, ..., 2(d-1))`` mod p,
    defined when ``sum(b) == t + d(d-1)``, ``max(b) < p`` and ``t < p``.
    """
    b = tuple(b)
    if len(b) != d:
        raise DomainError(f"exponent vector {b} must have length d={d}")
    if t >= p:
        raise HypothesisError(f"need t < p, got t={t}, p={p}")
    if sum(b) != t + d * (d - 1) or min(b) < 0 or max(b) >= p:
        raise DomainError(f"need sum(b) = t + d(d-1) = {t + d * (d - 1)} and 0 <= b_i < p, got {b}")
    num = factorial(t)
    for i in range(d):
        num *= factorial(2 * i)
    den = 1
    for x in b:
        den = den * factorial(x) % p
    det = bindet_eval((b, even_row(d)))
    return num % p * inverse(den, p) % p * (det % p) % p


def compositions(total, parts, cap=None):
    """All tuples of ``parts`` naturals summing to ``total`` (each ``<= cap``)."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    hi = total if cap is None else min(total, cap)
    for first in range(hi, -1, -1):
        for rest in compositions(total - first, parts - 1, cap):
            yield (first,) + rest


@dataclass
class AnrVerdict:
    m: int
    coeff: int
    guaranteed_min: int
    witness_card: int
    holds: bool
    witness: frozenset = frozenset()


def anr_verdict(sets, R, p):
    """Check the polynomial-method bound on one instance.

    With ``k_i = |A_i|`` and ``m = sum(k_i - 1) - deg R``, read the coefficient of
    ``prod X_i^{k_i-1}`` in ``(sum X)^m R``; if it is non-zero the set
    ``{a_0 + ... + a_{d-1} : a_i in A_i, R(a) != 0}`` must have at least
    ``m + 1`` elements.  The set is computed by brute force.
    """
    sets = [sorted({x % p for x in A}) for A in sets]
    d = len(sets)
    if d != R.nvars or R.p != p:
        raise ArityError("polynomial must have one variable per set and the same modulus")
    if any(not A for A in sets):
        raise DomainError("all sets must be non-empty")
    ks = [len(A) for A in sets]
    m = sum(k - 1 for k in ks) - R.degree()
    if m < 0:
        raise HypothesisError(f"degenerate instance: m = {m} < 0")
    full = SparsePoly.linear_sum(p, d) ** m * R
    coeff = full.coefficient([k - 1 for k in ks])
    sums = {sum(t) % p for t in product(*sets) if R(*t)}
    card = len(sums)
    return AnrVerdict(m=m, coeff=coeff, guaranteed_min=m + 1, witness_card=card,
                      holds=(coeff == 0) or card >= m + 1, witness=frozenset(sums))


def monic(coeffs, p):
    """Coefficient list (low to high) of a monic univariate polynomial."""
    coeffs = [c % p for c in coeffs]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs[-1] != 1:
        raise DomainError(f"polynomial {coeffs} is not monic")
    return tuple(coeffs)


def eval_univariate(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


@dataclass
class LiuSunVerdict:
    applicable: bool
    K: int = 0
    card: int = 0
    holds: bool = True
    reason: str = ""


def liu_sun_verdict(sets, polys, p):
    """Brute-force check of the distinct-values restricted sumset bound.

    ``K = (k-1)n - (m+1)C(n,2)``; the set of sums ``a_1 + ... + a_n`` with
    ``P_i(a_i) != P_j(a_j)`` for ``i != j`` must exceed ``K``.  Instances
    violating the hypotheses come back with ``applicable=False``.
    """
    sets = [sorted({x % p for x in A}) for A in sets]
    n = len(sets)
    if n == 0 or len(polys) != n:
        return LiuSunVerdict(False, reason="need one monic polynomial per set")
    try:
        polys = [monic(P, p) for P in polys]
    except DomainError as exc:
        return LiuSunVerdict(False, reason=str(exc))
    degs = {len(P) - 1 for P in polys}
    if len(degs) != 1 or 0 in degs:
        return LiuSunVerdict(False, reason="polynomials must share a positive degree m")
    m = degs.pop()
    k = len(sets[-1])
    if any(len(sets[i + 1]) - len(sets[i]) not in (0, 1) for i in range(n - 1)):
        return LiuSunVerdict(False, reason="consecutive set sizes must differ by 0 or 1")
    if k <= m * (n - 1):
        return LiuSunVerdict(False, reason=f"need k = {k} > m(n-1) = {m * (n - 1)}")
    K = (k - 1) * n - (m + 1) * binomial(n, 2)
    if p <= K:
        return LiuSunVerdict(False, K=K, reason=f"need p > K = {K}")
    values = [{a: eval_univariate(P, a, p) for a in A} for P, A in zip(polys, sets)]
    sums = set()
    for t in product(*sets):
        vals = [values[i][a] for i, a in enumerate(t)]
        if len(set(vals)) == n:
            sums.add(sum(t) % p)
    return LiuSunVerdict(True, K=K, card=len(sums), holds=len(sums) >= K + 1)

