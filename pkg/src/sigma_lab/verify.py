"""Bind each theorem statement to an exhaustive or sampled computation.

Every check produces a :class:`Verdict` for one claim at one parameter point.
Violation predicates are plain functions of a single instance so that any
counterexample can be replayed in isolation (:func:`replay`).
"""

import os
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import ceil, comb, isqrt

import numpy as np

from . import bindet
from .errors import BudgetExceeded, DomainError, HypothesisError
from .exactmath import binomial
from .polyring import (SparsePoly, anr_verdict, check_modulus, compositions, devlp_rhs_coefficient,
                       expand_L, is_prime, liu_sun_verdict, vandermonde_squares)
from .subsums import (ResidueSet, Multiset, common_multiplicities, full_mask, is_zero_sum_free,
                      max_zero_sum_free_size, merge_zero_sum_free, restricted_layers, sigma_bits,
                      sigma_star_bits)
from .sweep import asymmetric_profile

DEFAULT_BUDGET = 20_000_000


def default_budget():
    env = os.environ.get("SIGMA_LAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_budget(required, budget):
    budget = default_budget() if budget is None else budget
    if required > budget:
        raise BudgetExceeded(required, budget)


@dataclass
class Verdict:
    claim: str
    params: dict
    holds: bool
    instances_checked: int
    counterexample: dict = None
    elapsed: float = 0.0
    applicable: bool = True
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.holds and self.counterexample is None:
            raise ValueError(f"{self.claim}: a failing verdict needs a counterexample")

    def to_dict(self):
        return asdict(self)


@dataclass
class SweepReport:
    command: str
    params: dict
    verdicts: list = field(default_factory=list)

    @property
    def passed(self):
        return all(v.holds for v in self.verdicts)

    def to_dict(self):
        return {"command": self.command, "params": self.params,
                "verdicts": [v.to_dict() for v in self.verdicts], "pass": self.passed}


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def primes_upto(n, lo=2):
    return [q for q in range(lo, n + 1) if is_prime(q)]


# ---------------------------------------------------------------- main theorem

def triangular(d):
    return d * (d + 1) // 2


def main_bounds(p, d):
    """``(|Sigma| bound, |Sigma*| bound, Olson bound)`` for an asymmetric set of size d."""
    return (min(p, 1 + triangular(d)), min(p, triangular(d)),
            min(Fraction(p + 3, 2), Fraction(triangular(d))))


def main_theorem_violation(p, A):
    """Failing displays for one asymmetric set, or None."""
    A = ResidueSet(p, A)
    if not A.is_asymmetric():
        raise DomainError(f"{sorted(A)} is not asymmetric mod {p}")
    d = len(A)
    sig = sigma_bits(A, p).bit_count()
    star = sigma_star_bits(A, p).bit_count()
    b1, b2, olson = main_bounds(p, d)
    failed = [name for name, ok in (("sigma", sig >= b1), ("sigma_star", star >= b2),
                                    ("olson", sig >= olson)) if not ok]
    if not failed:
        return None
    return {"set": sorted(A), "sigma": sig, "sigma_star": star, "failed": failed}


def verify_main_theorem(p, budget=None, symmetry=False, jobs=1):
    p = check_modulus(p, odd=True)
    m = (p - 1) // 2
    _check_budget(3 ** m, budget)
    with _Timer() as tm:
        prof = asymmetric_profile(p, symmetry=symmetry, jobs=jobs)
    rows, cex = [], None
    slack_sigma = slack_star = slack_olson = None
    for d, st in sorted(prof.sizes.items()):
        b1, b2, olson = main_bounds(p, d)
        rows.append({"d": d, "count": st.count, "min_sigma": st.min_sigma, "bound_sigma": b1,
                     "min_sigma_star": st.min_star, "bound_sigma_star": b2, "olson": str(olson)})
        s1, s2, s3 = st.min_sigma - b1, st.min_star - b2, st.min_sigma - olson
        slack_sigma = s1 if slack_sigma is None else min(slack_sigma, s1)
        slack_star = s2 if slack_star is None else min(slack_star, s2)
        slack_olson = s3 if slack_olson is None else min(slack_olson, s3)
        if cex is None:
            for wit in (st.min_sigma_witness, st.min_star_witness):
                v = main_theorem_violation(p, wit)
                if v:
                    cex = v
                    break
    return Verdict("main_theorem", {"p": p, "symmetry": symmetry}, cex is None, prof.instances,
                   cex, tm.elapsed,
                   details={"min_slack_sigma": slack_sigma, "min_slack_sigma_star": slack_star,
                            "min_slack_olson": str(slack_olson), "by_size": rows})


# ---------------------------------------------------------------- sequences

def sequence_bounds(l):
    s = sum(i * x for i, x in enumerate(sorted(l, reverse=True), start=1))
    return s


def sequence_violation(p, seq):
    S = Multiset.from_sequence(p, seq)
    s = sequence_bounds(common_multiplicities(S))
    sig = sigma_bits(S, p).bit_count()
    star = sigma_star_bits(S, p).bit_count()
    failed = []
    if sig < min(p, 1 + s):
        failed.append("sigma")
    if star < min(p, s):
        failed.append("sigma_star")
    if not failed:
        return None
    return {"multiset": list(S), "sigma": sig, "sigma_star": star, "weighted_sum": s, "failed": failed}


def is_dilation_canonical(seq, p):
    """True iff the sorted tuple is lexicographically least among its dilates."""
    for c in range(2, p):
        if tuple(sorted(c * x % p for x in seq)) < seq:
            return False
    return True


def count_multisets(p, max_len):
    return comb(p - 1 + max_len, max_len)


def verify_sequence_theorem(p, max_len, symmetry=False, budget=None):
    p = check_modulus(p, odd=True)
    _check_budget(count_multisets(p, max_len), budget)
    checked, cex = 0, None
    with _Timer() as tm:
        for n in range(max_len + 1):
            for seq in combinations_with_replacement(range(1, p), n):
                if symmetry and n and not is_dilation_canonical(seq, p):
                    continue
                checked += 1
                v = sequence_violation(p, seq)
                if v and cex is None:
                    cex = v
    return Verdict("sequence_theorem", {"p": p, "max_len": max_len, "symmetry": symmetry},
                   cex is None, checked, cex, tm.elapsed)


def multiplicity_bound(n, k, p):
    """``ceil(2n/k - 2(p-1)/(k(k+1)))`` in exact arithmetic."""
    return ceil(Fraction(2 * n, k) - Fraction(2 * (p - 1), k * (k + 1)))


def structural_violation(p, seq, k):
    S = Multiset.from_sequence(p, seq)
    if not is_zero_sum_free(S):
        raise DomainError("structural bound applies to zero-sum-free sequences only")
    bound = multiplicity_bound(len(S), k, p)
    if S.max_multiplicity() >= bound:
        return None
    return {"multiset": list(S), "k": k, "bound": bound, "max_multiplicity": S.max_multiplicity()}


def zero_sum_free_multisets(p, max_len):
    """Yield every zero-sum-free multiset of length <= max_len as a sorted tuple."""
    full = full_mask(p)
    seq = []

    def rec(lo, S, T):
        yield tuple(seq)
        if len(seq) == max_len:
            return
        for x in range(lo, p):
            T2 = T | (((S << x) | (S >> (p - x))) & full)
            if T2 & 1:
                continue
            seq.append(x)
            yield from rec(x, S | T2, T2)
            seq.pop()

    yield from rec(1, 1, 0)


def verify_structural_multiplicity(p, max_len=None, k_max=3, budget=None):
    p = check_modulus(p, odd=True)
    max_len = p - 1 if max_len is None else max_len
    _check_budget(count_multisets(p, max_len), budget)
    checked, full_length, cex = 0, 0, None
    with _Timer() as tm:
        for seq in zero_sum_free_multisets(p, max_len):
            checked += 1
            for k in range(1, k_max + 1):
                v = structural_violation(p, seq, k)
                if v and cex is None:
                    cex = v
            if len(seq) == p - 1:
                full_length += 1
                if len(set(seq)) != 1 and cex is None:
                    cex = {"multiset": list(seq), "k": 1, "corollary": "length p-1 must be constant"}
    return Verdict("structural_multiplicity", {"p": p, "max_len": max_len, "k_max": k_max},
                   cex is None, checked, cex, tm.elapsed,
                   details={"zero_sum_free_of_length_p_minus_1": full_length})


# ---------------------------------------------------------------- Selfridge, acr

def selfridge_formula(p):
    """Greatest k with k(k+1)/2 < p."""
    k = 0
    while triangular(k + 1) < p:
        k += 1
    return k


def _zsf_partition(args):
    p, firsts, symmetry = args
    return max_zero_sum_free_size(p, symmetry=symmetry, first_elements=firsts)


def verify_selfridge(p, budget=None, symmetry=False, jobs=1):
    p = check_modulus(p)
    _check_budget(3 ** ((p - 1) // 2), budget)
    with _Timer() as tm:
        if jobs > 1 and p > 3 and not symmetry:
            from concurrent.futures import ProcessPoolExecutor
            parts = [(p, list(range(s, p, jobs)), False) for s in range(1, min(jobs, p - 1) + 1)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                res = merge_zero_sum_free(pool.map(_zsf_partition, parts))
        else:
            res = max_zero_sum_free_size(p, symmetry=symmetry)
    expected = selfridge_formula(p)
    ok = res.k == expected and is_zero_sum_free(res.witness) and len(res.witness) == res.k
    cex = None if ok else {"k_search": res.k, "k_formula": expected, "witness": list(res.witness)}
    return Verdict("selfridge", {"p": p, "symmetry": symmetry}, ok, res.nodes, cex, tm.elapsed,
                   details={"k_search": res.k, "k_formula": expected, "witness": list(res.witness)})


def acr_formula(p):
    """Least s with s(s+1)/2 >= p - 1."""
    s = 0
    while triangular(s) < p - 1:
        s += 1
    return s


def acr_closed_form(p):
    """``ceil(-1/2 + sqrt(2p - 7/4)) = ceil((sqrt(8p - 7) - 1) / 2)`` in integers."""
    n = 8 * p - 7
    r = isqrt(n)
    if r * r < n:
        r += 1
    # smallest s with 2s + 1 >= ceil(sqrt(n))
    return r // 2


def verify_acr(p, budget=None, symmetry=False, jobs=1):
    p = check_modulus(p)
    if p < 7:
        return Verdict("acr", {"p": p}, True, 0, applicable=False,
                       details={"reason": f"acr(Z/{p}Z) is undefined"})
    _check_budget(3 ** ((p - 1) // 2), budget)
    with _Timer() as tm:
        prof = asymmetric_profile(p, symmetry=symmetry, jobs=jobs)
        value = prof.acr()
    expected = acr_formula(p)
    largest = prof.sizes[value - 1]
    details = {"acr_search": value, "acr_formula": expected,
               "largest_non_covering_set": list(largest.min_sigma_witness)}
    cex = None if value == expected else details
    return Verdict("acr", {"p": p, "symmetry": symmetry}, value == expected, prof.instances,
                   cex, tm.elapsed, details=details)


# ---------------------------------------------------------------- determinants

def _random_increasing(rng, d, lo, hi):
    return sorted(rng.sample(range(lo, hi + 1), d))


def det_instances(max_d, seed=0, n_random=500):
    """Deterministic list of ``(identity, args)`` checks up to ``max_d``."""
    rng = random.Random(seed)
    out = []
    for d in range(1, max_d + 1):
        for i in range(d + 1):
            out.append(("closed_form", (d, i)))
            out.append(("normalized", (d, i)))
            out.append(("prime_factors", (d, i)))
            if d >= 2 and 1 <= i <= d - 1:
                out.append(("recurrence", (d, i)))
                out.append(("pascal", (d, i)))
        out.append(("extremes", (d,)))
    for _ in range(n_random):
        d = rng.randint(1, max_d)
        b = _random_increasing(rng, d, 1, 2 * d + 2)
        a = _random_increasing(rng, d, b[-1], b[-1] + 2 * d + 4)
        out.append(("det1", (tuple(a), tuple(b))))
        d = rng.randint(2, max_d)
        x = rng.randint(0, 8)
        b = (0,) + tuple(_random_increasing(rng, d - 1, 1, x + d + 1))
        out.append(("det0", (x, b)))
        out.append(("det0bis", (x, rng.randint(1, d - 1), b)))
    return out


def det_identity_violation(identity, args):
    if identity == "closed_form":
        d, i = args
        lhs, rhs = bindet.d_value(d, i), bindet.d_closed_form(d, i)
    elif identity == "normalized":
        d, i = args
        lhs = Fraction(bindet.d_value(d, i)) / Fraction(2) ** (d * (d - 1) // 2 - i)
        rhs = bindet.d_normalized(d, i)
    elif identity == "extremes":
        (d,) = args
        lhs = (bindet.d_value(d, 0), bindet.d_value(d, d))
        rhs = (2 ** (d * (d - 1) // 2), 2 ** ((d - 1) * (d - 2) // 2))
    elif identity == "recurrence":
        d, i = args
        lhs, rhs = bindet.d_value(d, i), bindet.d_recurrence_rhs(d, i)
    elif identity == "pascal":
        d, i = args

        def norm(dd, ii):
            return Fraction(bindet.d_value(dd, ii)) / Fraction(2) ** (dd * (dd - 1) // 2 - ii)
        lhs, rhs = norm(d, i), norm(d - 1, i - 1) + norm(d - 1, i)
    elif identity == "prime_factors":
        d, i = args
        lhs, rhs = bindet.max_prime_factor(bindet.d_value(d, i)), 2 * d
        if lhs <= rhs:
            return None
        return {"identity": identity, "args": list(args), "max_prime_factor": lhs}
    elif identity == "det1":
        lhs, rhs = bindet.det1_sides(*args)
    elif identity == "det0":
        lhs, rhs = bindet.det0_sides(*args)
    elif identity == "det0bis":
        lhs, rhs = bindet.det0bis_sides(*args)
    else:
        raise DomainError(f"unknown determinant identity {identity!r}")
    if lhs == rhs:
        return None
    return {"identity": identity, "args": _plain(args), "lhs": str(lhs), "rhs": str(rhs)}


def verify_det_identities(max_d=10, seed=0, n_random=500):
    if max_d < 2:
        raise DomainError("max_d must be at least 2")
    checked, cex, counts = 0, None, {}
    with _Timer() as tm:
        for identity, args in det_instances(max_d, seed, n_random):
            checked += 1
            counts[identity] = counts.get(identity, 0) + 1
            v = det_identity_violation(identity, args)
            if v and cex is None:
                cex = v
        # recurrence at i = d, with the out-of-family term taken as 0: recorded only
        top = {str(d): bindet.d_value(d, d) == bindet.d_recurrence_rhs(d, d)
               for d in range(2, max_d + 1)}
    return Verdict("det_identities", {"max_d": max_d, "seed": seed, "n_random": n_random},
                   cex is None, checked, cex, tm.elapsed,
                   details={"checks": counts, "recurrence_at_i_eq_d": top})


def devlp_violations(d, t, p):
    """Compare both sides coefficientwise on every ``b`` with ``max(b) < p``."""
    L = expand_L(d, t, p)
    total = t + d * (d - 1)
    bad, compared = [], 0
    for b in compositions(total, d, cap=p - 1):
        compared += 1
        lhs = L.coefficient(b)
        rhs = devlp_rhs_coefficient(d, t, b, p)
        if lhs != rhs:
            bad.append({"b": list(b), "lhs": lhs, "rhs": rhs})
    outside = sorted(list(e) for e in L.terms if max(e) >= p)
    return compared, bad, outside, L


def verify_devlp(d, t, p):
    p = check_modulus(p)
    if t >= p:
        raise HypothesisError(f"need t < p, got t={t}, p={p}")
    with _Timer() as tm:
        compared, bad, outside, L = devlp_violations(d, t, p)
        homogeneous = L.is_homogeneous(t + d * (d - 1))
    cex = bad[0] if bad else None
    if cex is None and not homogeneous:
        cex = {"homogeneity": False}
    return Verdict("devlp", {"d": d, "t": t, "p": p}, cex is None, max(compared, 1), cex,
                   tm.elapsed,
                   details={"terms": len(L.terms),
                            "monomials_with_exponent_ge_p": len(outside)})


# ---------------------------------------------------------------- background

def _popcount(arr):
    return np.bitwise_count(arr)


def verify_cauchy_davenport(p, mode="exhaustive", trials=1000, seed=0):
    p = check_modulus(p)
    full = full_mask(p)
    cex, checked = None, 0
    with _Timer() as tm:
        if mode == "exhaustive":
            if p > 20:
                raise DomainError("exhaustive Cauchy-Davenport is limited to p <= 20")
            B = np.arange(1, 1 << p, dtype=np.uint64)
            sizeB = _popcount(B).astype(np.int64)
            f = np.uint64(full)
            for Abits in range(1, 1 << p):
                acc = np.zeros_like(B)
                for a in ResidueSet.from_bits(p, Abits):
                    if a:
                        acc |= ((B << np.uint64(a)) | (B >> np.uint64(p - a))) & f
                    else:
                        acc |= B
                bound = np.minimum(p, Abits.bit_count() + sizeB - 1)
                bad = np.flatnonzero(_popcount(acc) < bound)
                checked += B.size
                if bad.size and cex is None:
                    Bbits = int(B[bad[0]])
                    cex = {"A": list(ResidueSet.from_bits(p, Abits)),
                           "B": list(ResidueSet.from_bits(p, Bbits))}
        else:
            rng = random.Random(seed)
            for _ in range(trials):
                A = ResidueSet(p, rng.sample(range(p), rng.randint(1, p)))
                B = ResidueSet(p, rng.sample(range(p), rng.randint(1, p)))
                checked += 1
                if cauchy_davenport_violation(p, A, B) and cex is None:
                    cex = {"A": list(A), "B": list(B)}
    return Verdict("cauchy_davenport", {"p": p, "mode": mode, "seed": seed}, cex is None,
                   checked, cex, tm.elapsed)


def cauchy_davenport_violation(p, A, B):
    A, B = ResidueSet(p, A), ResidueSet(p, B)
    return len(A + B) < min(p, len(A) + len(B) - 1)


def restricted_violation(p, A):
    """First ``h`` with ``|h^A| < min(p, h(|A|-h) + 1)``, or None."""
    A = ResidueSet(p, A)
    k = len(A)
    for h, bits in enumerate(restricted_layers(A)):
        if bits.bit_count() < min(p, h * (k - h) + 1):
            return h
    return None


def verify_restricted_sumsets(p, mode="exhaustive", trials=1000, seed=0):
    p = check_modulus(p)
    cex, checked = None, 0
    with _Timer() as tm:
        if mode == "exhaustive":
            sets = (ResidueSet.from_bits(p, bits) for bits in range(1 << p))
        else:
            rng = random.Random(seed)
            sets = (ResidueSet(p, rng.sample(range(p), rng.randint(0, p))) for _ in range(trials))
        for A in sets:
            checked += 1
            h = restricted_violation(p, A)
            if h is not None and cex is None:
                cex = {"A": list(A), "h": h}
    return Verdict("restricted_sumset", {"p": p, "mode": mode, "seed": seed}, cex is None,
                   checked, cex, tm.elapsed)


def genesum_instance_ok(p, sets):
    """True iff the three hypotheses hold (and ``t >= 0``)."""
    d = len(sets)
    ks = [len(A) for A in sets]
    t = sum(k - 1 for k in ks) - d * (d - 1)
    if t < 0 or t >= p or 2 * d >= p:
        return False
    return bindet.bindet_eval(([k - 1 for k in ks], bindet.even_row(d))) % p != 0


def genesum_violation(p, sets):
    sets = [sorted({x % p for x in A}) for A in sets]
    d = len(sets)
    t = sum(len(A) - 1 for A in sets) - d * (d - 1)
    C = set()
    for tup in product(*sets):
        if all(tup[i] != tup[j] and (tup[i] + tup[j]) % p
               for i in range(d) for j in range(i + 1, d)):
            C.add(sum(tup) % p)
    if len(C) >= t + 1:
        return None
    return {"p": p, "sets": sets, "card": len(C), "bound": t + 1}


def genesum_instances(trials, seed=0, primes=(7, 11, 13, 17)):
    rng = random.Random(seed)
    out = []
    while len(out) < trials:
        p = rng.choice(primes)
        d = rng.randint(1, min(3, (p - 1) // 2))
        sets = [rng.sample(range(p), rng.randint(1, min(p, 2 * d + 3))) for _ in range(d)]
        if genesum_instance_ok(p, sets):
            out.append((p, sets))
    return out


def verify_genesum(trials=1000, seed=0):
    cex = None
    with _Timer() as tm:
        insts = genesum_instances(trials, seed)
        for p, sets in insts:
            v = genesum_violation(p, sets)
            if v and cex is None:
                cex = v
    return Verdict("genesum", {"trials": trials, "seed": seed}, cex is None, len(insts), cex,
                   tm.elapsed)


def liu_sun_instances(trials, seed=0, primes=(7, 11, 13, 17)):
    rng = random.Random(seed)
    out = []
    while len(out) < trials:
        p = rng.choice(primes)
        n = rng.randint(1, 3)
        m = rng.randint(1, 2)
        k = rng.randint(m * (n - 1) + 1, min(p, m * (n - 1) + 4))
        sizes = [k]
        for _ in range(n - 1):
            sizes.append(max(1, sizes[-1] - rng.randint(0, 1)))
        sizes.reverse()
        sets = [rng.sample(range(p), s) for s in sizes]
        polys = [[rng.randrange(p) for _ in range(m)] + [1] for _ in range(n)]
        v = liu_sun_verdict(sets, polys, p)
        if v.applicable:
            out.append((p, sets, polys))
    return out


def verify_liu_sun(trials=1000, seed=0):
    cex = None
    with _Timer() as tm:
        insts = liu_sun_instances(trials, seed)
        for p, sets, polys in insts:
            v = liu_sun_verdict(sets, polys, p)
            if not v.holds and cex is None:
                cex = {"p": p, "sets": sets, "polys": polys, "K": v.K, "card": v.card}
    return Verdict("liu_sun", {"trials": trials, "seed": seed}, cex is None, len(insts), cex,
                   tm.elapsed)


def verify_background(p, mode=None, trials=1000, seed=0):
    """Cauchy-Davenport, restricted sumsets and the ``a_i != +-a_j`` lemma at p."""
    p = check_modulus(p, odd=True)
    mode = mode or ("exhaustive" if p <= 13 else "sampled")
    parts = [verify_cauchy_davenport(p, mode, trials, seed),
             verify_restricted_sumsets(p, mode, trials, seed),
             verify_genesum(trials, seed)]
    cex = next((dict(v.counterexample, claim=v.claim) for v in parts if not v.holds), None)
    return Verdict("background", {"p": p, "mode": mode, "trials": trials, "seed": seed},
                   cex is None, sum(v.instances_checked for v in parts), cex,
                   sum(v.elapsed for v in parts),
                   details={v.claim: {"holds": v.holds, "instances": v.instances_checked}
                            for v in parts})


# ---------------------------------------------------------------- polynomial lemma

def anr_instance(p, sets, R="1"):
    """Build ``(sets, R)`` with R one of the named presets or a SparsePoly."""
    d = len(sets)
    if isinstance(R, SparsePoly):
        return R
    if R == "1":
        return SparsePoly.constant(p, d)
    if R == "vandermonde":
        from .polyring import vandermonde
        return vandermonde(d, p)
    if R == "vandermonde_squares":
        return vandermonde_squares(d, p)
    raise DomainError(f"unknown polynomial preset {R!r}")


def construction_sets(p, a):
    """Sets built from ``a_1..a_d`` for the case ``d(d+1)/2 >= p``.

    ``A_i`` holds all ``a_j`` and the negatives ``-a_1..-a_{i-1}`` for
    ``i <= i0`` and ``-a_1..-a_i`` for ``i > i0``, ``i0 = d(d+1)/2 - p + 1``.
    """
    d = len(a)
    i0 = triangular(d) - p + 1
    if not 0 < i0 <= d:
        raise HypothesisError(f"construction needs d(d-1)/2 < p <= d(d+1)/2, got d={d}, p={p}")
    out = []
    for i in range(1, d + 1):
        negs = i - 1 if i <= i0 else i
        out.append(sorted(set(x % p for x in a) | {(-x) % p for x in a[:negs]}))
    return out, i0


# ---------------------------------------------------------------- replay

def replay(verdict):
    """Re-run the failing instance of ``verdict``; True iff it fails again."""
    c = verdict.counterexample
    if c is None:
        return False
    claim, prm = verdict.claim, verdict.params
    if claim == "main_theorem":
        return main_theorem_violation(prm["p"], c["set"]) is not None
    if claim == "sequence_theorem":
        return sequence_violation(prm["p"], c["multiset"]) is not None
    if claim == "structural_multiplicity":
        if "corollary" in c:
            return len(set(c["multiset"])) != 1
        return structural_violation(prm["p"], c["multiset"], c["k"]) is not None
    if claim == "selfridge":
        return max_zero_sum_free_size(prm["p"]).k != selfridge_formula(prm["p"])
    if claim == "acr":
        from .subsums import acr
        return acr(prm["p"]) != acr_formula(prm["p"])
    if claim == "det_identities":
        args = c["args"]
        args = tuple(tuple(x) if isinstance(x, list) else x for x in args)
        return det_identity_violation(c["identity"], args) is not None
    if claim == "devlp":
        if "b" not in c:
            return not expand_L(prm["d"], prm["t"], prm["p"]).is_homogeneous(
                prm["t"] + prm["d"] * (prm["d"] - 1))
        L = expand_L(prm["d"], prm["t"], prm["p"])
        return L.coefficient(c["b"]) != devlp_rhs_coefficient(prm["d"], prm["t"], c["b"], prm["p"])
    if claim == "cauchy_davenport":
        return cauchy_davenport_violation(prm["p"], c["A"], c["B"])
    if claim == "restricted_sumset":
        return restricted_violation(prm["p"], c["A"]) is not None
    if claim == "genesum":
        return genesum_violation(c["p"], c["sets"]) is not None
    if claim == "liu_sun":
        return not liu_sun_verdict(c["sets"], c["polys"], c["p"]).holds
    raise DomainError(f"no replay for claim {claim!r}")


def _plain(x):
    if isinstance(x, (tuple, list)):
        return [_plain(y) for y in x]
    return x
