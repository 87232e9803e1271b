"""Brute-force ground truth at small scale.

Everything here works on the raw ball hypergraph with no symmetry
assumptions: the full covering LP, an exact maximum set of pairwise
disjoint balls via branch and bound, and the three counterexample fixtures
that defeat the average-ball-size heuristic.  Matching semantics double as
the code-size search: a code of minimum distance 2r+1 is exactly a family
of disjoint balls, disjointness being what the search certifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactlp
from .bounds import aspv
from .channels import (ChannelSpec, Hypergraph, OracleCapExceeded,
                       build_hypergraph, example_four, example_three,
                       example_two, vertex_count)

DEFAULT_ORACLE_CAP = 4096


@dataclass
class OracleResult:
    spec: ChannelSpec
    r: int
    tau_star_full: Fraction
    nu_integral: int
    witness: list            # centers of a maximum disjoint ball family
    notes: str = ""


def _full_lp(hg: Hypergraph) -> exactlp.CoveringLP:
    return exactlp.CoveringLP(
        num_vars=hg.num_vertices,
        objective=[1] * hg.num_vertices,
        rows=[[(j, 1) for j in e] for e in hg.edges],
    )


def _check_cap(spec: ChannelSpec, cap: int) -> None:
    count = vertex_count(spec)
    if count > cap:
        raise OracleCapExceeded(
            f"{count} vertices exceed the oracle cap {cap}")


def brute_force_tau(spec: ChannelSpec, r: int | None = None,
                    cap: int = DEFAULT_ORACLE_CAP) -> Fraction:
    """Covering optimum of the full hypergraph, no reductions."""
    r = spec.r if r is None else r
    _check_cap(spec, cap)
    hg = build_hypergraph(spec, r)
    return exactlp.solve_min_transversal(_full_lp(hg)).optimum


def brute_force_matching(spec: ChannelSpec, r: int | None = None,
                         cap: int = DEFAULT_ORACLE_CAP) -> tuple[int, list]:
    """Exact maximum family of pairwise disjoint balls, with witness.

    Phase one finds the size by branch and bound over edges in descending
    ball-size order, pruned by the remaining-edge count and stopped early
    when the fractional optimum's floor is reached.  Phase two re-searches
    in ascending center order, include-branch first, so the first complete
    solution is the lexicographically least witness.
    """
    r = spec.r if r is None else r
    _check_cap(spec, cap)
    hg = build_hypergraph(spec, r)
    lp_bound = exactlp.solve_min_transversal(_full_lp(hg)).optimum
    global_cap = lp_bound.numerator // lp_bound.denominator

    order = sorted(range(hg.num_edges),
                   key=lambda e: (-len(hg.edges[e]), hg.edges[e]))
    edge_sets = [frozenset(hg.edges[e]) for e in order]
    best_size = 0

    def search_size(idx: int, used: frozenset, size: int):
        nonlocal best_size
        if size > best_size:
            best_size = size
        if idx >= len(edge_sets) or best_size >= global_cap:
            return
        if size + (len(edge_sets) - idx) <= best_size:
            return
        e = edge_sets[idx]
        if not (e & used):
            search_size(idx + 1, used | e, size + 1)
        search_size(idx + 1, used, size)

    search_size(0, frozenset(), 0)

    lex = sorted(range(hg.num_edges), key=lambda e: hg.centers[e])
    lex_sets = [frozenset(hg.edges[e]) for e in lex]

    def search_witness(idx: int, used: frozenset, chosen: list) -> list | None:
        if len(chosen) == best_size:
            return chosen
        if idx >= len(lex_sets) or len(chosen) + (len(lex_sets) - idx) < best_size:
            return None
        e = lex_sets[idx]
        if not (e & used):
            found = search_witness(idx + 1, used | e, chosen + [idx])
            if found is not None:
                return found
        return search_witness(idx + 1, used, chosen)

    picks = search_witness(0, frozenset(), []) or []
    witness = [hg.centers[lex[i]] for i in picks]
    # direct pairwise disjointness check of the returned balls
    for a in range(len(picks)):
        for b in range(a + 1, len(picks)):
            assert not (lex_sets[picks[a]] & lex_sets[picks[b]])
    assert best_size <= global_cap
    return best_size, witness


def oracle_result(spec: ChannelSpec, r: int | None = None,
                  cap: int = DEFAULT_ORACLE_CAP) -> OracleResult:
    r = spec.r if r is None else r
    tau = brute_force_tau(spec, r, cap)
    nu, witness = brute_force_matching(spec, r, cap)
    assert nu <= tau.numerator // tau.denominator
    return OracleResult(spec=spec, r=r, tau_star_full=tau, nu_integral=nu,
                        witness=witness)


@dataclass
class FixtureFacts:
    name: str
    spec: ChannelSpec
    aspv: Fraction
    naive_packing_value: Fraction | None   # |X|/ball size, regular graphs only
    tau_star: Fraction
    max_code: int
    summary: str


def counterexample_suite() -> list[FixtureFacts]:
    """The three fixtures on which the average-ball-size value fails.

    * example2: regular but not symmetric; naive packing value 3, covering
      optimum 1.
    * example3: out-star; average value 25/9 but four disjoint singleton
      balls exist.
    * example4 (k=3): symmetric; average value 27/17 < 2 while three
      vertices with pairwise disjoint balls exist.
    """
    out = []
    for name, spec, regular_ball in (
        ("example2", example_two(), 2),
        ("example3", example_three(), None),
        ("example4", example_four(3), None),
    ):
        tau = brute_force_tau(spec, 1)
        nu, _ = brute_force_matching(spec, 1)
        value = aspv(spec, 1)
        naive = (Fraction(spec.explicit_num_vertices, regular_ball)
                 if regular_ball else None)
        if name == "example2":
            summary = f"regular non-symmetric: naive packing value {naive}, covering optimum {tau}"
        else:
            summary = f"ASPV {value} < max code {nu}"
        out.append(FixtureFacts(name=name, spec=spec, aspv=value,
                                naive_packing_value=naive, tau_star=tau,
                                max_code=nu, summary=summary))
    return out
