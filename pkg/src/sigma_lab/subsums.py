"""Subsum sets over Z/pZ using integers as cyclic bit-vectors.

Bit ``r`` of a bit-vector is set iff the residue ``r`` is in the set.  Python
ints give arbitrary width for free; the one correctness-critical step is the
cyclic rotation, whose wrap-around has to be masked back into ``p`` bits.
"""

from dataclasses import dataclass, field

from .errors import ArityError, DomainError, NotApplicable
from .polyring import check_modulus


def full_mask(p):
    return (1 << p) - 1


def rotate(bits, a, p):
    """Cyclic shift of a ``p``-bit vector: the set ``{x + a mod p}``."""
    a %= p
    if not a:
        return bits
    return ((bits << a) | (bits >> (p - a))) & ((1 << p) - 1)


def negate_bits(bits, p):
    """Bit-vector of ``{-x mod p}``: 0 stays, bits 1..p-1 are reversed."""
    if p == 1:
        return bits & 1
    rest = format(bits >> 1, f"0{p - 1}b")
    return (bits & 1) | (int(rest[::-1], 2) << 1)


def bits_of(elements, p):
    # built in a byte buffer: OR-ing into a growing int is quadratic for large p
    buf = bytearray((p + 7) // 8)
    for x in elements:
        r = x % p
        buf[r >> 3] |= 1 << (r & 7)
    return int.from_bytes(buf, "little")


def elements_of(bits):
    """Sorted residues whose bit is set."""
    digits = bin(bits)[:1:-1]
    out = []
    r = digits.find("1")
    while r >= 0:
        out.append(r)
        r = digits.find("1", r + 1)
    return out


class ResidueSet:
    """An immutable subset of Z/pZ stored as a ``p``-bit integer."""

    __slots__ = ("p", "bits")

    def __init__(self, p, elements=()):
        self.p = p
        self.bits = bits_of(elements, p)

    @classmethod
    def from_bits(cls, p, bits):
        out = cls.__new__(cls)
        out.p = p
        out.bits = bits & full_mask(p)
        return out

    @classmethod
    def full(cls, p):
        return cls.from_bits(p, full_mask(p))

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, x):
        return bool(self.bits >> (x % self.p) & 1)

    def __iter__(self):
        return iter(elements_of(self.bits))

    def __eq__(self, other):
        return isinstance(other, ResidueSet) and self.p == other.p and self.bits == other.bits

    def __hash__(self):
        return hash((self.p, self.bits))

    def __repr__(self):
        return f"ResidueSet(p={self.p}, {{{', '.join(map(str, self))}}})"

    def __or__(self, other):
        _same_modulus(self, other)
        return ResidueSet.from_bits(self.p, self.bits | other.bits)

    def __add__(self, other):
        return sumset(self, other)

    def __neg__(self):
        return ResidueSet.from_bits(self.p, negate_bits(self.bits, self.p))

    def shift(self, a):
        return ResidueSet.from_bits(self.p, rotate(self.bits, a, self.p))

    def scale(self, c):
        return ResidueSet(self.p, (c * x for x in self))

    def is_full(self):
        return self.bits == full_mask(self.p)

    def is_asymmetric(self):
        """True iff ``A`` and ``-A`` are disjoint (so 0 is not in A)."""
        return not (self.bits & negate_bits(self.bits, self.p))


def _same_modulus(A, B):
    if A.p != B.p:
        raise ArityError(f"sets live in Z/{A.p}Z and Z/{B.p}Z")


def sumset(A, B):
    """``A + B`` as the OR of the shifts of ``B`` by each element of ``A``."""
    _same_modulus(A, B)
    p = A.p
    if len(A) > len(B):
        A, B = B, A
    out = 0
    for a in A:
        out |= rotate(B.bits, a, p)
    return ResidueSet.from_bits(p, out)


def iterated_sumset(sets, p):
    out = ResidueSet(p, [0])
    for S in sets:
        out = sumset(out, S)
    return out


def sigma_bits(elements, p):
    """Bit-vector of all subset sums (empty sum included)."""
    full = full_mask(p)
    S = 1
    for a in elements:
        a %= p
        if a:
            S |= ((S << a) | (S >> (p - a))) & full
            if S == full:
                break
    return S


def sigma_star_bits(elements, p):
    """Bit-vector of all non-empty subset sums."""
    full = full_mask(p)
    S, T = 1, 0
    for a in elements:
        a %= p
        T |= ((S << a) | (S >> (p - a))) & full
        S |= T
        if T == full:
            break
    return T


def sigma(A):
    return ResidueSet.from_bits(A.p, sigma_bits(A, A.p))


def sigma_star(A):
    return ResidueSet.from_bits(A.p, sigma_star_bits(A, A.p))


def restricted_layers(A, h=None):
    """Bit-vectors ``L[j]`` of sums of exactly ``j`` distinct elements, ``0 <= j <= h``."""
    p = A.p
    elems = list(A)
    h = len(elems) if h is None else h
    full = full_mask(p)
    layers = [1] + [0] * h
    for count, a in enumerate(elems, start=1):
        for j in range(min(count, h), 0, -1):
            prev = layers[j - 1]
            if prev:
                layers[j] |= ((prev << a) | (prev >> (p - a))) & full
    return layers


def restricted_power(A, h):
    """``h^A``: sums of exactly ``h`` pairwise distinct elements of ``A``.

    Empty when ``h > |A|``.
    """
    if h < 0:
        raise DomainError("h must be a natural number")
    if h > len(A):
        return ResidueSet(A.p)
    return ResidueSet.from_bits(A.p, restricted_layers(A, h)[h])


@dataclass(frozen=True)
class Multiset:
    """A sequence over (Z/pZ)* recorded as residue -> multiplicity."""

    p: int
    mult: dict = field(hash=False)

    def __post_init__(self):
        clean = {}
        for x, k in dict(self.mult).items():
            x %= self.p
            if k < 0:
                raise DomainError(f"negative multiplicity for {x}")
            if k == 0:
                continue
            if x == 0:
                raise DomainError("multisets live in (Z/pZ)*: 0 is not allowed")
            clean[x] = clean.get(x, 0) + k
        object.__setattr__(self, "mult", dict(sorted(clean.items())))

    @classmethod
    def from_sequence(cls, p, seq):
        counts = {}
        for x in seq:
            counts[x % p] = counts.get(x % p, 0) + 1
        return cls(p, counts)

    def __len__(self):
        return sum(self.mult.values())

    def __iter__(self):
        for x, k in self.mult.items():
            for _ in range(k):
                yield x

    def __eq__(self, other):
        return isinstance(other, Multiset) and self.p == other.p and self.mult == other.mult

    def __hash__(self):
        return hash((self.p, tuple(self.mult.items())))

    def scale(self, c):
        return Multiset(self.p, {c * x % self.p: k for x, k in self.mult.items()})

    def max_multiplicity(self):
        return max(self.mult.values(), default=0)


def sigma_multiset(S):
    return ResidueSet.from_bits(S.p, sigma_bits(S, S.p))


def sigma_star_multiset(S):
    return ResidueSet.from_bits(S.p, sigma_star_bits(S, S.p))


def pair_representatives(S):
    """Map each pair ``{x, -x}`` meeting the support to ``(rep, l, k)``.

    ``rep`` is the smaller of x, -x, ``l`` the common multiplicity and ``k`` the
    multiplicity of ``-rep``.
    """
    p = S.p
    out = {}
    for x, k in S.mult.items():
        rep = min(x, p - x)
        r, l, kneg = out.get(rep, (rep, 0, 0))
        out[rep] = (rep, l + k, kneg + (k if x != rep else 0))
    return out


def common_multiplicities(S):
    """Common multiplicities of the pairs ``{x, -x}``, largest first."""
    return sorted((l for _, l, _ in pair_representatives(S).values()), reverse=True)


def is_zero_sum_free(S):
    """True iff 0 is not a non-empty subsum (works for sets and multisets)."""
    return not sigma_star_bits(S, S.p) & 1


@dataclass
class ZeroSumFreeMax:
    k: int
    witness: ResidueSet
    nodes: int = 0


def max_zero_sum_free_size(p, symmetry=False, theorem_bound=False, first_elements=None):
    """Largest zero-sum-free subset of Z/pZ by branch and bound.

    Elements are added in increasing order.  A candidate ``x`` keeps the set
    zero-sum free iff ``-x`` is not already a subsum, so the search tracks
    ``-Sigma(A)`` and counts the admissible candidates left to bound the branch.

    ``symmetry`` restricts to sets containing 1 (every non-empty zero-sum-free
    set has a dilate containing 1).  ``theorem_bound`` additionally stops
    extending at size ``k`` once ``k(k+1)/2 >= p``; that prune presumes the
    lower bound on non-trivial subsums and is off by default so the search
    stays independent of it.  ``first_elements`` restricts the smallest
    element (a work partition; merge with :func:`merge_zero_sum_free`).
    """
    p = check_modulus(p)
    if p == 2:
        return ZeroSumFreeMax(1, ResidueSet(2, [1]), 1)
    full = full_mask(p)
    best = [0, ()]
    nodes = [0]
    chosen = []

    def dfs(S, N, lo):
        # S = Sigma(A), N = -Sigma(A); candidates are y >= lo with y not in N
        nodes[0] += 1
        size = len(chosen)
        if size > best[0]:
            best[0] = size
            best[1] = tuple(chosen)
        if theorem_bound and size * (size + 1) // 2 >= p:
            return
        avail = ~N & full & ~((1 << lo) - 1)
        if size + avail.bit_count() <= best[0]:
            return
        while avail:
            low = avail & -avail
            x = low.bit_length() - 1
            avail ^= low
            if size + 1 + avail.bit_count() <= best[0]:
                return
            chosen.append(x)
            dfs(S | (((S << x) | (S >> (p - x))) & full),
                N | (((N << (p - x)) | (N >> x)) & full),
                x + 1)
            chosen.pop()

    firsts = [1] if symmetry else range(1, p)
    if first_elements is not None:
        firsts = [x for x in firsts if x in set(first_elements)]
    for x in firsts:
        chosen.append(x)
        dfs(1 | (1 << x), 1 | (1 << (p - x)), x + 1)
        chosen.pop()
    return ZeroSumFreeMax(best[0], ResidueSet(p, best[1]), nodes[0])


def merge_zero_sum_free(results):
    """Merge partition results: largest size, then lexicographically first witness."""
    results = list(results)
    k = max(r.k for r in results)
    wit = min(tuple(r.witness) for r in results if r.k == k)
    return ZeroSumFreeMax(k, ResidueSet(results[0].witness.p, wit), sum(r.nodes for r in results))


def acr(p, symmetry=False, jobs=1):
    """Asymmetric critical number of Z/pZ by exhaustion.

    The least ``l`` such that every asymmetric ``A`` with ``|A| >= l`` has
    ``Sigma(A) = Z/pZ``; undefined for ``p < 7``.
    """
    from .sweep import asymmetric_profile

    p = check_modulus(p)
    if p < 7:
        raise NotApplicable(f"the asymmetric critical number of Z/{p}Z is undefined")
    return asymmetric_profile(p, symmetry=symmetry, jobs=jobs).acr()
