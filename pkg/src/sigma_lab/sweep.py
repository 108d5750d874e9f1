"""Exhaustive enumeration of the asymmetric subsets of Z/pZ.

An asymmetric set picks, for each pair ``{j, p-j}`` with ``1 <= j <= (p-1)/2``,
nothing, ``j`` or ``-j``: ``3**((p-1)/2)`` sets in all.  The enumeration is
split into work units by fixing the choices for the first few pairs; each unit
expands the remaining pairs breadth-first over numpy ``uint64`` bit-vectors
(so ``p <= 61``), with a pure-Python depth-first fallback for larger ``p``.

For every size ``d`` the sweep keeps the number of sets and the minimum of
``|Sigma(A)|`` and ``|Sigma*(A)|`` with a witness, which is all the main
bound, Olson's bound and the asymmetric critical number need.  Merging is a
per-size minimum taken in work-unit order, ties going to the lexicographically
first choice vector, so witnesses do not depend on the unit size, the backend
or how units are spread over workers.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .subsums import full_mask

MAX_VECTOR_P = 61
UNIT_LOG3 = 11


@dataclass
class SizeStats:
    count: int = 0
    min_sigma: int = None
    min_sigma_witness: tuple = ()
    min_star: int = None
    min_star_witness: tuple = ()
    zero_sum_free: int = 0

    def absorb(self, other):
        self.count += other.count
        self.zero_sum_free += other.zero_sum_free
        if other.min_sigma is not None and (self.min_sigma is None or other.min_sigma < self.min_sigma):
            self.min_sigma, self.min_sigma_witness = other.min_sigma, other.min_sigma_witness
        if other.min_star is not None and (self.min_star is None or other.min_star < self.min_star):
            self.min_star, self.min_star_witness = other.min_star, other.min_star_witness


@dataclass
class Profile:
    p: int
    symmetry: bool = False
    sizes: dict = field(default_factory=dict)

    def absorb(self, other):
        for d, st in other.sizes.items():
            self.sizes.setdefault(d, SizeStats()).absorb(st)
        return self

    @property
    def instances(self):
        return sum(st.count for st in self.sizes.values())

    def acr(self):
        """``1 + max{|A| : Sigma(A) != Z/pZ}`` over the enumerated sets."""
        return 1 + max(d for d, st in self.sizes.items() if st.min_sigma < self.p)

    def max_zero_sum_free(self):
        return max(d for d, st in self.sizes.items() if st.zero_sum_free)

    def extremes(self):
        """Size -> (min |Sigma|, min |Sigma*|); the symmetry-invariant content."""
        return {d: (st.min_sigma, st.min_star) for d, st in sorted(self.sizes.items())}


def pair_element(j, choice, p):
    return (j, p - j)[choice - 1]


def work_units(p, symmetry=False, unit_log3=UNIT_LOG3):
    """Prefixes of pair choices (0 absent, 1 ``+j``, 2 ``-j``), in merge order.

    With ``symmetry`` the first pair is pinned to ``+1``: every non-empty
    asymmetric set has a dilate containing 1.  The empty set is then its own
    unit ``None``.
    """
    m = (p - 1) // 2
    depth = max(0, m - unit_log3)
    if symmetry and m:
        depth = max(depth, 1)
        units = [None]
        units += [(1,) + rest for rest in product(range(3), repeat=depth - 1)]
        return units
    return list(product(range(3), repeat=depth))


def _prefix_state(p, prefix):
    full = full_mask(p)
    S, T, elems = 1, 0, []
    for j, c in enumerate(prefix, start=1):
        if c:
            a = pair_element(j, c, p)
            elems.append(a)
            T |= ((S << a) | (S >> (p - a))) & full
            S |= T
    return S, T, elems


def _record(stats, d, sig, star, zsf, witness_fn):
    st = stats.setdefault(d, SizeStats())
    st.count += 1
    st.zero_sum_free += zsf
    if st.min_sigma is None or sig < st.min_sigma:
        st.min_sigma, st.min_sigma_witness = sig, witness_fn()
    if st.min_star is None or star < st.min_star:
        st.min_star, st.min_star_witness = star, witness_fn()


def _unit_python(p, prefix):
    """Depth-first reference path (any ``p``)."""
    stats = {}
    m = (p - 1) // 2
    full = full_mask(p)
    if prefix is None:
        _record(stats, 0, 1, 0, 1, tuple)
        return stats
    S0, T0, elems0 = _prefix_state(p, prefix)
    chosen = list(elems0)

    def rec(j, S, T):
        if j > m:
            _record(stats, len(chosen), S.bit_count(), T.bit_count(), int(not T & 1),
                    lambda: tuple(sorted(chosen)))
            return
        rec(j + 1, S, T)
        for a in (j, p - j):
            T2 = T | (((S << a) | (S >> (p - a))) & full)
            chosen.append(a)
            rec(j + 1, S | T2, T2)
            chosen.pop()

    rec(len(prefix) + 1, S0, T0)
    return stats


def _unit_numpy(p, prefix):
    if prefix is None:
        return _unit_python(p, prefix)
    m = (p - 1) // 2
    S0, T0, elems0 = _prefix_state(p, prefix)
    full = np.uint64(full_mask(p))
    S = np.array([S0], dtype=np.uint64)
    T = np.array([T0], dtype=np.uint64)
    n = np.array([len(elems0)], dtype=np.int8)
    js = list(range(len(prefix) + 1, m + 1))
    for j in js:
        # the new choice becomes the least significant base-3 digit, so index
        # order is lexicographic order of the choice vector, as in the DFS path
        parts_S, parts_T = [S], [T]
        for a in (j, p - j):
            rot = ((S << np.uint64(a)) | (S >> np.uint64(p - a))) & full
            parts_S.append(S | rot)
            parts_T.append(T | rot)
        S = np.stack(parts_S, axis=1).reshape(-1)
        T = np.stack(parts_T, axis=1).reshape(-1)
        n = np.stack([n, n + 1, n + 1], axis=1).reshape(-1)
    sig = np.bitwise_count(S)
    star = np.bitwise_count(T)
    zsf = (T & np.uint64(1)) == 0

    def witness(idx):
        elems = list(elems0)
        for k, j in enumerate(reversed(js)):
            c = (idx // 3 ** k) % 3
            if c:
                elems.append(pair_element(j, c, p))
        return tuple(sorted(elems))

    stats = {}
    for d in np.unique(n):
        sel = np.flatnonzero(n == d)
        i_sig = sel[np.argmin(sig[sel])]
        i_star = sel[np.argmin(star[sel])]
        stats[int(d)] = SizeStats(
            count=int(sel.size),
            min_sigma=int(sig[i_sig]), min_sigma_witness=witness(int(i_sig)),
            min_star=int(star[i_star]), min_star_witness=witness(int(i_star)),
            zero_sum_free=int(np.count_nonzero(zsf[sel])),
        )
    return stats


def run_unit(p, prefix, backend="auto"):
    if backend == "python" or (backend == "auto" and p > MAX_VECTOR_P):
        return _unit_python(p, prefix)
    return _unit_numpy(p, prefix)


def _run_unit_args(args):
    return run_unit(*args)


def asymmetric_profile(p, symmetry=False, jobs=1, backend="auto", unit_log3=UNIT_LOG3):
    """Enumerate every asymmetric subset of Z/pZ (one per dilation orbit with
    ``symmetry``) and merge the per-size statistics."""
    if p == 2:
        raise ValueError("Z/2Z has no asymmetric structure to sweep")
    units = work_units(p, symmetry, unit_log3)
    args = [(p, u, backend) for u in units]
    profile = Profile(p, symmetry)
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_unit_args, args))
    else:
        results = [_run_unit_args(a) for a in args]
    for stats in results:
        profile.absorb(Profile(p, symmetry, stats))
    return profile
