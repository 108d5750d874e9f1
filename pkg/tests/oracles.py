"""Slow, obviously-correct reference implementations used only by the tests.

None of these import the package; they work on plain Python sets and lists.
"""

from itertools import combinations, permutations, product


def det_cofactor(m):
    """Laplace expansion along the first row."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * det_cofactor(minor)
    return total


def binom_pascal(n, k):
    """C(n, k) from Pascal's rule, 0 outside the triangle."""
    if k < 0 or k > n or n < 0:
        return 0
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k]


def subset_sums(A, p, nonempty=False):
    """Sums over all 2^|A| subsets (as index subsets, so multisets work)."""
    A = list(A)
    out = set()
    for r in range(1 if nonempty else 0, len(A) + 1):
        for idx in combinations(range(len(A)), r):
            out.add(sum(A[i] for i in idx) % p)
    return out


def restricted_sums(A, h, p):
    return {sum(c) % p for c in combinations(sorted(set(A)), h)}


def sumset(A, B, p):
    return {(a + b) % p for a in A for b in B}


def is_asymmetric(A, p):
    A = {x % p for x in A}
    return all((-x) % p not in A for x in A)


def asymmetric_sets(p):
    """All 3^((p-1)/2) asymmetric subsets, by direct choice per pair."""
    m = (p - 1) // 2
    for choice in product(range(3), repeat=m):
        yield [(j if c == 1 else p - j) for j, c in zip(range(1, m + 1), choice) if c]


def max_zero_sum_free_brute(p):
    best = 0
    for r in range(1, p):
        found = False
        for A in combinations(range(1, p), r):
            if 0 not in subset_sums(A, p, nonempty=True):
                found = True
                break
        if not found:
            break
        best = r
    return best


def sign(perm):
    s, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def vandermonde_squares_terms(d, p):
    """det(X_j^{2i}) over S_d: prod_{i<j}(X_j^2 - X_i^2) = sum sgn(s) prod X_j^{2 s(j)}."""
    terms = {}
    for perm in permutations(range(d)):
        e = tuple(2 * perm[j] for j in range(d))
        terms[e] = (terms.get(e, 0) + sign(perm)) % p
    return {e: c for e, c in terms.items() if c}


def multinomial(n, ks):
    out = 1
    rem = n
    for k in ks:
        out *= binom_pascal(rem, k)
        rem -= k
    return out if rem == 0 else 0
