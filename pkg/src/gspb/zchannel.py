"""Downward binary channel (only 1 -> 0 errors): exact covering optimum.

After weight-class reduction the covering LP has n+1 variables; its optimum
is produced in closed form by a backward recursion on the class weights and
certified per instance by an exact dual solve of an upper-triangular system.
Feasibility and dual nonnegativity are checked in exact arithmetic for the
concrete (n, r) at hand, so no analytic radius horizon is assumed: every
returned value carries its own certificate status.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import exactlp, reduction
from .channels import ChannelSpec


@dataclass
class ZWeights:
    n: int
    r: int
    w: list[Fraction]            # indexed 0..n by Hamming weight class
    source: str                  # "recursive" | "explicit"

    def bound(self) -> Fraction:
        return sum((comb(self.n, k) * wk for k, wk in enumerate(self.w) if wk),
                   Fraction(0))


@dataclass
class DSequence:
    r: int
    values: list[Fraction]       # D_0 .. D_m


@dataclass
class ZCertificate:
    n: int
    r: int
    y: list[Fraction]
    status: str                  # "optimal-certified" | "nonnegativity-failed"
    failed_index: int | None = None

    def dual_value(self) -> Fraction:
        return sum(self.y[: self.n - self.r + 1], Fraction(0))


@dataclass
class ZFeasibility:
    feasible: bool
    negative_index: int | None
    violated_row: int | None
    tight_rows: list[int]


@dataclass
class ZGspbResult:
    n: int
    r: int
    value: Fraction
    certified: bool
    path: str                    # "closed-form" | "lp-fallback"
    weights: ZWeights
    certificate: ZCertificate


def z_quotient_lp(n: int, r: int) -> exactlp.CoveringLP:
    """Weight-class covering LP: row l reads sum_i C(l,i) w_{l-i} >= 1."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    rows = []
    for ell in range(n + 1):
        acc: dict[int, int] = {}
        for i in range(min(ell, r) + 1):
            acc[ell - i] = acc.get(ell - i, 0) + comb(ell, i)
        rows.append(sorted(acc.items()))
    return exactlp.CoveringLP(
        num_vars=n + 1,
        objective=[comb(n, k) for k in range(n + 1)],
        rows=rows,
        name=f"z-quotient-n{n}-r{r}",
    )


def z_weights_recursive(n: int, r: int) -> ZWeights:
    """Backward recursion: zero tail, then each w_k closes its row exactly."""
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    w = [Fraction(0)] * (n + 1)
    for k in range(n - r, 0, -1):
        s = Fraction(1) - sum(
            (w[k + i] * comb(k + r, r - i) for i in range(1, r + 1) if w[k + i]),
            Fraction(0),
        )
        w[k] = s / comb(k + r, r)
    w[0] = Fraction(1)
    return ZWeights(n=n, r=r, w=w, source="recursive")


def d_sequence(r: int, length: int) -> DSequence:
    """n-independent companion sequence: D_{r-1}=1 after r-1 zeros, then the
    factorial-weighted window of the last r+1 terms vanishes."""
    if r < 1:
        raise ValueError("need r >= 1")
    vals = [Fraction(0)] * max(length, r)
    if r - 1 < len(vals):
        vals[r - 1] = Fraction(1)
    rf = factorial(r)
    for i in range(r, length):
        acc = sum(
            (vals[i - j] / factorial(r - j) for j in range(1, r + 1) if vals[i - j]),
            Fraction(0),
        )
        vals[i] = -rf * acc
    return DSequence(r=r, values=vals[:length])


def z_weights_explicit(n: int, r: int) -> ZWeights:
    """Closed-form weights from the companion sequence; equals the recursion."""
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    ds = d_sequence(r, n).values
    rf = factorial(r)
    w = [Fraction(0)] * (n + 1)
    w[0] = Fraction(1)
    for k in range(1, n + 1):
        acc = sum(
            (ds[m - k - 1] / factorial(m) for m in range(r + k, n + 1)
             if ds[m - k - 1]),
            Fraction(0),
        )
        w[k] = rf * factorial(k) * acc
    return ZWeights(n=n, r=r, w=w, source="explicit")


def z_check_feasibility(weights: ZWeights) -> ZFeasibility:
    """Exact entrywise nonnegativity plus every class row of the LP."""
    n, r, w = weights.n, weights.r, weights.w
    for k, wk in enumerate(w):
        if wk < 0:
            return ZFeasibility(False, k, None, [])
    tight = []
    for ell in range(n + 1):
        total = sum(
            (comb(ell, i) * w[ell - i] for i in range(min(ell, r) + 1)
             if w[ell - i]),
            Fraction(0),
        )
        if total < 1:
            return ZFeasibility(False, None, ell, tight)
        if total == 1:
            tight.append(ell)
    return ZFeasibility(True, None, None, tight)


def z_optimality_certificate(n: int, r: int) -> ZCertificate:
    """Dual vector from the upper-triangular certificate system.

    The system pairs the binomial objective with the cost rows that are
    tight under the closed-form weights; forward substitution solves it
    exactly and nonnegativity of the result certifies optimality, with the
    dual value equal to the closed-form bound.
    """
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    y = [Fraction(0)] * (n + 1)
    y[0] = Fraction(1)  # corner entry of the triangular system
    failed = None
    for j in range(1, n + 1):
        acc = Fraction(0)
        for i in range(max(1, j - r), min(j - 1, n - r) + 1):
            if y[i]:
                acc += comb(i + r, j) * y[i]
        if j <= n - r:
            y[j] = (comb(n, j) - acc) / comb(j + r, j)
        else:
            y[j] = comb(n, j) - acc
        if y[j] < 0 and failed is None:
            failed = j
    if failed is not None:
        return ZCertificate(n, r, y, "nonnegativity-failed", failed)
    return ZCertificate(n, r, y, "optimal-certified")


def z_gspb(n: int, r: int, pivot_cap: int = exactlp.DEFAULT_PIVOT_CAP) -> ZGspbResult:
    """Exact covering optimum with per-instance certification.

    Closed-form weights are checked feasible and the dual certificate
    nonnegative, both exactly; if either check fails the reduced LP is
    solved outright and the result says which path produced the value.
    """
    weights = z_weights_recursive(n, r)
    feas = z_check_feasibility(weights)
    cert = z_optimality_certificate(n, r)
    value = weights.bound()
    if feas.feasible and cert.status == "optimal-certified" \
            and cert.dual_value() == value:
        return ZGspbResult(n, r, value, True, "closed-form", weights, cert)
    sol = exactlp.solve_min_transversal(z_quotient_lp(n, r), pivot_cap=pivot_cap)
    return ZGspbResult(n, r, sol.optimum, sol.certified, "lp-fallback",
                       weights, cert)


def z_reduced_lp_solution(n: int, r: int) -> exactlp.LPSolution:
    """Exact simplex solve of the class LP (independent of the closed form)."""
    spec = ChannelSpec("z", n=n, r=r)
    return reduction.reduced_gspb(spec, r)


def z_example_wprime(n: int) -> tuple[list[Fraction], Fraction]:
    """Radius-one hand transversal w'_k = (k+2)/((k+1)(k+3)), w'_0 = 1.

    Feasible but suboptimal; its total sits between the covering optimum
    and the average-ball value 2^{n+1}/(n+2).
    """
    w = [Fraction(1)]
    w += [Fraction(k + 2, (k + 1) * (k + 3)) for k in range(1, n + 1)]
    feas = z_check_feasibility(ZWeights(n=n, r=1, w=w, source="explicit"))
    if not feas.feasible:
        raise AssertionError("hand transversal failed its feasibility check")
    bound = sum((comb(n, k) * w[k] for k in range(n + 1)), Fraction(0))
    return w, bound


def z_mb(n: int, r: int) -> Fraction:
    """Reciprocal-degree bound: sum over weights of C(n,w)/ball size."""
    from .channels import z_degree
    return sum(
        (Fraction(comb(n, wt), z_degree(n, wt, r)) for wt in range(n + 1)),
        Fraction(0),
    )


def z_aspv(n: int, r: int) -> Fraction:
    """Word count over mean ball size: 2^n / sum_i C(n,i)/2^i."""
    mean = sum((Fraction(comb(n, i), 1 << i) for i in range(r + 1)), Fraction(0))
    return Fraction(1 << n) / mean
