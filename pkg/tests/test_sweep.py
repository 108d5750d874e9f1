import pytest

import oracles
from sigma_lab.subsums import sigma_bits, sigma_star_bits
from sigma_lab.sweep import asymmetric_profile, run_unit, work_units


def brute_profile(p):
    out = {}
    for A in oracles.asymmetric_sets(p):
        d = len(A)
        sig = len(oracles.subset_sums(A, p))
        star = len(oracles.subset_sums(A, p, nonempty=True))
        cnt, s0, t0 = out.get(d, (0, p + 1, p + 1))
        out[d] = (cnt + 1, min(s0, sig), min(t0, star))
    return out


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_profile_matches_brute_force(p):
    prof = asymmetric_profile(p, unit_log3=2)
    ref = brute_profile(p)
    assert {d: (st.count, st.min_sigma, st.min_star) for d, st in prof.sizes.items()} == ref
    assert prof.instances == 3 ** ((p - 1) // 2)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17])
def test_backends_agree(p):
    a = asymmetric_profile(p, backend="python", unit_log3=3)
    b = asymmetric_profile(p, backend="numpy", unit_log3=3)
    assert a.sizes == b.sizes


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_symmetry_keeps_extremes(p):
    full = asymmetric_profile(p)
    reduced = asymmetric_profile(p, symmetry=True, unit_log3=3)
    assert reduced.extremes() == full.extremes()
    assert reduced.instances < full.instances


def test_witnesses_realise_the_minimum():
    p = 17
    prof = asymmetric_profile(p, unit_log3=4)
    for d, st in prof.sizes.items():
        assert len(st.min_sigma_witness) == d
        assert sigma_bits(st.min_sigma_witness, p).bit_count() == st.min_sigma
        assert sigma_star_bits(st.min_star_witness, p).bit_count() == st.min_star


def test_unit_partition_is_independent_of_unit_size():
    p = 13
    ref = asymmetric_profile(p, unit_log3=6)
    for k in (0, 2, 4):
        assert asymmetric_profile(p, unit_log3=k).sizes == ref.sizes


def test_work_units_shape():
    assert work_units(7, unit_log3=3) == [()]
    assert len(work_units(13, unit_log3=3)) == 27
    units = work_units(13, symmetry=True, unit_log3=3)
    assert units[0] is None and all(u[0] == 1 for u in units[1:])
    assert run_unit(7, None)[0].count == 1


def test_parallel_matches_serial():
    p = 19
    serial = asymmetric_profile(p, unit_log3=6)
    parallel = asymmetric_profile(p, jobs=2, unit_log3=6)
    assert serial.sizes == parallel.sizes


def test_p2_rejected():
    with pytest.raises(ValueError):
        asymmetric_profile(2)
