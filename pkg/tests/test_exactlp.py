from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gspb import channels as ch
from gspb import exactlp, linsolve


def hypergraph_lp(spec, r=1):
    hg = ch.build_hypergraph(spec, r)
    return exactlp.CoveringLP(
        num_vars=hg.num_vertices,
        objective=[1] * hg.num_vertices,
        rows=[[(j, 1) for j in e] for e in hg.edges],
    )


def singleton_lp(n):
    return exactlp.CoveringLP(num_vars=n, objective=[1] * n,
                              rows=[[(j, 1)] for j in range(n)])


def test_example2_optimum_one():
    sol = exactlp.solve_min_transversal(hypergraph_lp(ch.example_two()))
    assert sol.status == "optimal" and sol.certified
    assert sol.optimum == 1
    assert sol.primal[0] == 1 and all(v == 0 for v in sol.primal[1:])


def test_z2_optimum_two():
    sol = exactlp.solve_min_transversal(hypergraph_lp(ch.ChannelSpec("z", n=2)))
    assert sol.optimum == 2


def test_singleton_balls():
    for n in (1, 4, 9):
        sol = exactlp.solve_min_transversal(singleton_lp(n))
        assert sol.optimum == n
        match = exactlp.solve_max_matching_lp(singleton_lp(n))
        assert match.optimum == n


def test_matching_duality():
    lp = hypergraph_lp(ch.example_two())
    assert exactlp.solve_max_matching_lp(lp).optimum == 1
    lp = hypergraph_lp(ch.ChannelSpec("z", n=2))
    assert exactlp.solve_max_matching_lp(lp).optimum == 2


def test_verify_transversal_z2():
    lp = hypergraph_lp(ch.ChannelSpec("z", n=2))
    # vertices in order 00,01,10,11; weights 1,1/2,1/2,0
    rep = exactlp.verify_transversal(lp, [1, Fraction(1, 2), Fraction(1, 2), 0])
    assert rep.feasible and rep.bound == 2
    assert sorted(rep.slacks) == [0, 0, Fraction(1, 2), Fraction(1, 2)]
    rep0 = exactlp.verify_transversal(lp, [0, 0, 0, 0])
    assert not rep0.feasible
    assert all(s == -1 for s in rep0.slacks)


def test_verify_dimension_mismatch():
    with pytest.raises(ValueError):
        exactlp.verify_transversal(singleton_lp(3), [1, 1])


def test_float_presolve_singleton():
    pres = exactlp.float_presolve(singleton_lp(7))
    assert pres.converged and abs(pres.value - 7) < 1e-9


def test_float_presolve_z10_quotient():
    from gspb import zchannel
    lp = zchannel.z_quotient_lp(10, 1)
    pres = exactlp.float_presolve(lp)
    exact = exactlp.solve_min_transversal(lp).optimum
    assert pres.converged
    assert abs(pres.value - float(exact)) < 1e-9
    assert exact.numerator // exact.denominator == 159


def test_float_presolve_deletion10_floor():
    from gspb import seqchannels
    pres = exactlp.float_presolve(seqchannels.deletion_full_lp(10))
    assert pres.converged and int(pres.value + 1e-9) == 96


def test_crossover_matches_simplex():
    # force both paths on the same medium LP and compare exact optima
    lp = hypergraph_lp(ch.ChannelSpec("z", n=6))
    a = exactlp.solve_min_transversal(lp, method="simplex")
    b = exactlp.solve_min_transversal(lp, method="crossover")
    assert a.optimum == b.optimum
    assert a.certified and b.certified
    assert b.method == "presolve+crossover"


def test_crossover_deletion_small():
    lp = hypergraph_lp(ch.ChannelSpec("deletion", n=6))
    a = exactlp.solve_min_transversal(lp, method="simplex")
    b = exactlp.solve_min_transversal(lp, method="crossover")
    assert a.optimum == b.optimum == Fraction(41, 4)  # floor 10


def test_pivot_cap():
    lp = hypergraph_lp(ch.ChannelSpec("z", n=4))
    sol = exactlp.solve_min_transversal(lp, pivot_cap=1, method="simplex")
    assert sol.status == "cap_exceeded" and not sol.certified


def test_scaling_exactness():
    lp = hypergraph_lp(ch.ChannelSpec("z", n=4))
    base = exactlp.solve_min_transversal(lp)
    lam = Fraction(7, 3)
    scaled = exactlp.CoveringLP(
        num_vars=lp.num_vars,
        objective=[lam * c for c in lp.objective],
        rows=lp.rows,
    )
    assert exactlp.solve_min_transversal(scaled).optimum == lam * base.optimum


def test_determinism():
    lp = hypergraph_lp(ch.ChannelSpec("z", n=5))
    a = exactlp.solve_min_transversal(lp, method="simplex")
    b = exactlp.solve_min_transversal(lp, method="simplex")
    assert a.primal == b.primal and a.pivots == b.pivots


def test_serialization_roundtrip():
    lp = hypergraph_lp(ch.ChannelSpec("z", n=3))
    lp.objective[2] = Fraction(5, 3)
    text = exactlp.lp_to_text(lp)
    back = exactlp.lp_from_text(text)
    assert back.num_vars == lp.num_vars
    assert [Fraction(c) for c in lp.objective] == back.objective
    assert [[(j, Fraction(a)) for j, a in row] for row in lp.rows] == back.rows
    assert exactlp.solve_min_transversal(back).optimum == \
        exactlp.solve_min_transversal(lp).optimum


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_strong_duality_random_covers(data):
    nv = data.draw(st.integers(1, 7))
    nrows = data.draw(st.integers(1, 9))
    rows = []
    for _ in range(nrows):
        members = data.draw(st.sets(st.integers(0, nv - 1), min_size=1, max_size=nv))
        rows.append([(j, data.draw(st.integers(1, 3))) for j in sorted(members)])
    obj = [data.draw(st.integers(0, 5)) for _ in range(nv)]
    lp = exactlp.CoveringLP(num_vars=nv, objective=obj, rows=rows)
    sol = exactlp.solve_min_transversal(lp, method="simplex")
    assert sol.status == "optimal"
    # dual witness is feasible and matches the optimum
    assert exactlp._dual_objective_ok(lp, sol.dual)
    assert sum(sol.dual, Fraction(0)) == sol.optimum
    rep = exactlp.verify_transversal(lp, sol.primal)
    assert rep.feasible and rep.bound == sol.optimum


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 40), st.data())
def test_rational_reconstruction_roundtrip(den, data):
    num = data.draw(st.integers(-40, 40))
    f = Fraction(num, den)
    m = 2**89 - 1
    a = (f.numerator * pow(f.denominator, -1, m)) % m
    assert linsolve.rational_reconstruct(a, m) == f


def test_dixon_small_system():
    rows = [[(0, 2), (1, 1)], [(0, 1), (1, 3)]]
    x = linsolve.dixon_solve(rows, 2, [5, 7])
    assert x == [Fraction(8, 5), Fraction(9, 5)]


def test_dixon_singular_returns_none():
    rows = [[(0, 1), (1, 2)], [(0, 2), (1, 4)]]
    assert linsolve.dixon_solve(rows, 2, [1, 1]) is None
