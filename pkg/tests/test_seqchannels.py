from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gspb import exactlp, seqchannels as seq


def fl(x: Fraction) -> int:
    return x.numerator // x.denominator


def test_runs():
    assert seq.runs("001010010") == 7
    assert seq.runs("0000") == 1
    assert seq.runs("0101") == 4
    assert seq.runs([0, 1, 1]) == 2


def test_middle_one_runs():
    assert seq.middle_one_runs("001010010") == 4
    assert seq.middle_one_runs("0000") == 0
    assert seq.middle_one_runs("010") == 1


def test_count_profiles():
    for n in (1, 4, 9):
        assert seq.count_profiles(n, 1, 0) == 2
    assert seq.count_profiles(3, 3, 1) == 2  # 010 and 101
    assert seq.count_profiles(5, 4, 0) == 0


def test_profile_counts_sum_to_word_count():
    for n in range(1, 17):
        total = sum(
            seq.count_profiles(n, rho, mu)
            for rho in range(1, n + 1)
            for mu in range(0, max(rho - 1, 1))
        )
        assert total == 1 << n, n


def test_profile_marginal():
    from math import comb
    for n in range(2, 17):
        for rho in range(1, n + 1):
            marginal = sum(seq.count_profiles(n, rho, mu) for mu in range(rho))
            assert marginal == 2 * comb(n - 1, rho - 1), (n, rho)


def test_profile_counts_match_enumeration():
    from collections import Counter
    from gspb.kernels import run_stats
    for n in (3, 6, 10):
        rho, mu = run_stats(n)
        cnt = Counter(zip(rho.tolist(), mu.tolist()))
        for (r_, m_), c in cnt.items():
            assert seq.count_profiles(n, r_, m_) == c, (n, r_, m_)


def test_seq_weight():
    assert seq.seq_weight(7, 4) == Fraction(45, 343)
    assert seq.seq_weight(3, 1) == Fraction(1, 3)
    assert seq.seq_weight(1, 0) == 1


def test_deletion_bound_values():
    assert fl(seq.deletion_bound(7)) == 20
    assert fl(seq.deletion_bound(15)) == 2251
    assert fl(seq.deletion_bound(23)) == 368478


def test_grain_bound_values():
    # exact floors; the published column is off by one on several rows
    # (it disagrees with its own deletion-channel twin, which lists the
    # identical sums shifted by one in n)
    assert fl(seq.grain_bound(16)) == 7882
    assert fl(seq.grain_bound(9)) == 109
    assert fl(seq.grain_bound(23)) == 705511
    for n in range(5, 23):
        assert seq.deletion_bound(n + 1) == seq.grain_bound(n)


def test_deletion_mb_aspv():
    assert seq.deletion_mb(9) == Fraction(510, 8)
    assert fl(seq.deletion_mb(9)) == 63
    assert seq.deletion_mb(2) == 2
    assert seq.deletion_aspv(9) == Fraction(512, 10)
    assert fl(seq.deletion_aspv(9)) == 51


def test_grain_mb_variants():
    assert seq.grain_mb(5) == Fraction(62, 5)
    assert fl(seq.grain_mb(5)) == 12
    assert seq.grain_mb(7, even_improvement=True) == 36
    assert seq.grain_mb(2) == 3
    assert seq.grain_mb(16, even_improvement=True) == 8190
    assert fl(seq.grain_mb(16)) == 8191


def test_grain_aspv():
    assert seq.grain_aspv(10) == Fraction(2048, 11)
    assert seq.grain_aspv(2) == Fraction(8, 3)


def test_deletion_full_gspb_small():
    assert seq.deletion_full_gspb(5).optimum == 6
    sol = seq.deletion_full_gspb(7)
    assert fl(sol.optimum) == 17 and sol.certified


def test_full_lp_cap():
    from gspb.channels import GspbError
    with pytest.raises(GspbError):
        seq.deletion_full_gspb(13, lp_cap=12)
    with pytest.raises(GspbError):
        seq.grain_full_gspb(13, lp_cap=12)


def test_grain_full_gspb_sandwich():
    sol = seq.grain_full_gspb(6)
    nu_floor = fl(sol.optimum)
    assert nu_floor <= 20  # below the published reciprocal-degree bound
    assert sol.optimum <= seq.grain_bound(6) <= seq.grain_mb(6)


def test_ordering_chain():
    for n in (5, 8, 10):
        full = seq.deletion_full_gspb(n).optimum
        assert full <= seq.deletion_bound(n) <= seq.deletion_mb(n)


def test_orbit_route_matches_direct():
    # the symmetry-reduced path must reproduce the plain full-LP optimum
    direct = exactlp.solve_min_transversal(seq.deletion_full_lp(10))
    orbit = seq._orbit_reduced_solve(10, "deletion", exactlp.DEFAULT_PIVOT_CAP)
    assert direct.optimum == orbit.optimum
    gd = exactlp.solve_min_transversal(seq.grain_full_lp(8))
    go = seq._orbit_reduced_solve(8, "grain", exactlp.DEFAULT_PIVOT_CAP)
    assert gd.optimum == go.optimum


def test_theorem_transversals_feasible():
    for n in (5, 9, 12):
        assert seq.verify_deletion_transversal(n).feasible
    for n in (5, 9, 12):
        assert seq.verify_grain_transversal(n).feasible


def test_ball_size_is_run_count():
    from gspb.channels import ChannelSpec, out_ball
    from gspb.kernels import run_stats
    for n in (4, 8):
        rho_n, _ = run_stats(n)
        dspec = ChannelSpec("deletion", n=n)
        gspec = ChannelSpec("grain", n=n)
        for x in range(1 << n):
            assert len(out_ball(dspec, x, 1)) == rho_n[x]
            assert len(out_ball(gspec, x, 1)) == rho_n[x]


def test_ball_members_have_fewer_runs():
    from gspb.kernels import run_stats, deletion_targets, grain_targets
    for n in (5, 9, 12):
        rho_small, _ = run_stats(n - 1)
        rho_n, _ = run_stats(n)
        dt = deletion_targets(n)
        gt = grain_targets(n)
        for x in range(1 << n):
            assert all(rho_small[y] <= rho_n[x] for y in set(dt[x].tolist()))
            assert all(rho_n[y] <= rho_n[x] for y in gt[x].tolist() if y >= 0)


def test_ball_sizes_equal_runs_up_to_12():
    import numpy as np
    from gspb.kernels import run_stats, deletion_targets, grain_targets
    for n in (10, 12):
        rho, _ = run_stats(n)
        dt = deletion_targets(n)
        distinct = np.array([len(set(row.tolist())) for row in dt])
        assert np.array_equal(distinct, rho.astype(distinct.dtype))
        gt = grain_targets(n)
        sizes = 1 + (gt >= 0).sum(axis=1)
        assert np.array_equal(sizes, rho.astype(sizes.dtype))


@settings(max_examples=60, deadline=None)
@given(st.text(alphabet="01", min_size=1, max_size=40))
def test_run_scan_properties(word):
    rho = seq.runs(word)
    mu = seq.middle_one_runs(word)
    assert 1 <= rho <= len(word)
    if rho >= 2:
        assert 0 <= mu <= rho - 2
    else:
        assert mu == 0
