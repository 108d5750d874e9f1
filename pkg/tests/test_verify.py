import json
from fractions import Fraction

import pytest

import oracles
from sigma_lab import verify
from sigma_lab.errors import BudgetExceeded, DomainError, HypothesisError
from sigma_lab.verify import (Verdict, acr_closed_form, acr_formula, main_bounds,
                              main_theorem_violation, multiplicity_bound, replay,
                              selfridge_formula, sequence_bounds, sequence_violation)


def test_main_bounds():
    assert main_bounds(13, 3) == (7, 6, Fraction(6))
    assert main_bounds(13, 5) == (13, 13, Fraction(8))
    assert main_bounds(7, 0) == (1, 0, Fraction(0))


def test_main_theorem_example_sets():
    # {1, 2, ..., d} is extremal: |Sigma| = 1 + d(d+1)/2 while that is < p
    assert main_theorem_violation(31, [1, 2, 3, 4]) is None
    assert len(oracles.subset_sums([1, 2, 3, 4], 31)) == 11
    with pytest.raises(DomainError):
        main_theorem_violation(7, [1, 6])


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17])
def test_main_theorem_small(p):
    v = verify.verify_main_theorem(p)
    assert v.holds and v.instances_checked == 3 ** ((p - 1) // 2)
    assert v.details["min_slack_sigma"] == 0
    assert v.details["min_slack_sigma_star"] == 0


def test_main_theorem_rows_match_brute_force():
    p = 11
    rows = verify.verify_main_theorem(p).details["by_size"]
    for row in rows:
        sets = [A for A in oracles.asymmetric_sets(p) if len(A) == row["d"]]
        assert row["count"] == len(sets)
        assert row["min_sigma"] == min(len(oracles.subset_sums(A, p)) for A in sets)


def test_sequence_bounds_and_examples():
    assert sequence_bounds([1, 3, 2]) == 3 * 1 + 2 * 2 + 1 * 3
    assert sequence_bounds([]) == 0
    assert sequence_violation(11, [1, 1, 10, 2]) is None
    assert sequence_violation(7, [1] * 6) is None


def test_sequence_theorem_symmetry_counts():
    full = verify.verify_sequence_theorem(7, 5)
    reduced = verify.verify_sequence_theorem(7, 5, symmetry=True)
    assert full.holds and reduced.holds
    from itertools import combinations_with_replacement
    n = sum(1 for k in range(6) for _ in combinations_with_replacement(range(1, 7), k))
    assert full.instances_checked == verify.count_multisets(7, 5) == n == 462
    assert reduced.instances_checked < full.instances_checked


def test_multiplicity_bound_exact():
    assert multiplicity_bound(6, 1, 7) == 6
    assert multiplicity_bound(4, 2, 7) == 2
    # ceil(10/3 - 20/12) = ceil(5/3)
    assert multiplicity_bound(5, 3, 11) == 2


def test_structural_multiplicity_small():
    v = verify.verify_structural_multiplicity(7)
    assert v.holds
    # the six constant sequences x^(p-1)
    assert v.details["zero_sum_free_of_length_p_minus_1"] == 6


def test_zero_sum_free_multisets_against_brute_force():
    from itertools import combinations_with_replacement
    p, n = 7, 4
    got = set(verify.zero_sum_free_multisets(p, n))
    ref = {s for k in range(n + 1) for s in combinations_with_replacement(range(1, p), k)
           if 0 not in oracles.subset_sums(s, p, nonempty=True)}
    assert got == ref


def test_selfridge_and_acr_formulas():
    assert [selfridge_formula(p) for p in (2, 3, 5, 7, 11, 13, 31)] == [1, 1, 2, 3, 4, 4, 7]
    for p in range(7, 400):
        assert acr_formula(p) == acr_closed_form(p)
    assert acr_formula(31) == 8


def test_selfridge_parallel_partition_matches():
    a = verify.verify_selfridge(23)
    b = verify.verify_selfridge(23, jobs=3)
    assert a.holds and b.holds
    assert a.details == b.details


def test_acr_small_primes():
    assert not verify.verify_acr(5).applicable
    v = verify.verify_acr(13)
    assert v.holds and v.details["acr_search"] == 5
    assert len(v.details["largest_non_covering_set"]) == 4


def test_det_identities_deterministic():
    a = verify.verify_det_identities(6, seed=1, n_random=50)
    b = verify.verify_det_identities(6, seed=1, n_random=50)
    assert a.holds and a.instances_checked == b.instances_checked
    assert a.details == b.details
    assert all(a.details["recurrence_at_i_eq_d"].values())


def test_devlp_verdict():
    v = verify.verify_devlp(3, 2, 7)
    assert v.holds and v.instances_checked > 0
    with pytest.raises(HypothesisError):
        verify.verify_devlp(2, 7, 7)


def test_background_small():
    v = verify.verify_background(7, trials=50)
    assert v.holds and v.params["mode"] == "exhaustive"
    assert verify.verify_cauchy_davenport(29, mode="sampled", trials=100).holds
    with pytest.raises(DomainError):
        verify.verify_cauchy_davenport(23)


def test_genesum_and_liu_sun_seeded():
    a = verify.verify_genesum(100, seed=4)
    b = verify.verify_genesum(100, seed=4)
    assert a.holds and a.instances_checked == b.instances_checked == 100
    assert verify.verify_liu_sun(100, seed=4).holds


def test_verdict_requires_counterexample():
    with pytest.raises(ValueError):
        Verdict("x", {}, False, 1)
    v = Verdict("x", {"p": 3}, True, 1)
    assert json.loads(json.dumps(v.to_dict()))["holds"] is True


def test_budget_refusal(monkeypatch):
    with pytest.raises(BudgetExceeded) as exc:
        verify.verify_main_theorem(29, budget=1000)
    assert "SIGMA_LAB_BUDGET" in str(exc.value)
    monkeypatch.setenv("SIGMA_LAB_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        verify.verify_main_theorem(7)
    assert verify.verify_main_theorem(5).holds


def test_mutant_bound_is_caught_and_replayed(monkeypatch):
    real = verify.main_bounds

    def too_strong(p, d):
        b1, b2, olson = real(p, d)
        return min(p, b1 + 1), b2, olson

    monkeypatch.setattr(verify, "main_bounds", too_strong)
    v = verify.verify_main_theorem(11)
    assert not v.holds
    assert "sigma" in v.counterexample["failed"]
    assert replay(v)
    monkeypatch.setattr(verify, "main_bounds", real)
    assert not replay(v)


def test_replay_other_claims():
    cex = Verdict("det_identities", {}, False, 1,
                  {"identity": "closed_form", "args": [3, 1]})
    assert not replay(cex)
    cd = Verdict("cauchy_davenport", {"p": 5}, False, 1, {"A": [0, 1], "B": [0, 2]})
    assert not replay(cd)
    assert not replay(Verdict("x", {}, True, 1))
    with pytest.raises(DomainError):
        replay(Verdict("mystery", {}, False, 1, {"a": 1}))
