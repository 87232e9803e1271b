"""Exact rational covering/packing LP solver.

The covering problem is  min c.w  s.t.  A w >= 1, w >= 0  with nonnegative
sparse data; its dual is the fractional packing problem
max sum(z) s.t. A^T z <= c, z >= 0.  Two solution paths exist:

* an exact tableau simplex under Bland's rule, run on the dual (the all-slack
  basis is feasible there, so no phase one is needed);
* a float presolve (HiGHS) followed by an exact crossover: read the optimal
  supports off the float vertex, solve the complementary-slackness square
  systems exactly, and verify primal feasibility, dual feasibility and equal
  objectives in exact arithmetic.

Either way the returned optimum carries exact primal and dual witnesses and
a strong-duality check; floats never influence a certified value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import linsolve
from .channels import GspbError

DEFAULT_PIVOT_CAP = 10_000_000
_CROSSOVER_MIN_VARS = 60


@dataclass
class CoveringLP:
    """Sparse covering LP with an implicit all-ones right-hand side."""

    num_vars: int
    objective: list            # nonnegative ints or Fractions, one per var
    rows: list                 # sparse rows: list of (var index, coeff > 0)
    name: str = ""

    def validate(self) -> None:
        if len(self.objective) != self.num_vars:
            raise ValueError("objective length mismatch")
        if any(c < 0 for c in self.objective):
            raise ValueError("objective must be nonnegative")
        for i, row in enumerate(self.rows):
            if not row:
                raise ValueError(f"row {i} is empty")
            for j, a in row:
                if not 0 <= j < self.num_vars:
                    raise ValueError(f"row {i} references variable {j}")
                if a < 0:
                    raise ValueError(f"row {i} has a negative coefficient")

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)
                   for c in self.objective) and \
            all(isinstance(a, int) or (isinstance(a, Fraction) and a.denominator == 1)
                for row in self.rows for _, a in row)


@dataclass
class LPSolution:
    status: str                       # "optimal" | "cap_exceeded"
    optimum: Fraction | None
    primal: list | None               # exact w over variables
    dual: list | None                 # exact z over rows
    certified: bool
    method: str                       # "simplex" | "presolve+crossover"
    pivots: int = 0
    notes: str = ""


@dataclass
class TransversalReport:
    feasible: bool
    bound: Fraction | None            # objective value when feasible
    min_slack: Fraction
    num_violated: int
    violated_rows: list[int]
    slacks: list = field(repr=False, default_factory=list)


@dataclass
class PresolveResult:
    converged: bool
    value: float | None
    primal: list | None               # floats
    dual: list | None                 # floats
    message: str = ""


def verify_transversal(lp: CoveringLP, w) -> TransversalReport:
    """Exact per-row slack report for a candidate weight vector."""
    if len(w) != lp.num_vars:
        raise ValueError(f"weight vector has {len(w)} entries, LP has {lp.num_vars}")
    w = [Fraction(x) for x in w]
    nonneg = all(x >= 0 for x in w)
    slacks = []
    violated = []
    min_slack = None
    for i, row in enumerate(lp.rows):
        s = sum((a * w[j] for j, a in row if w[j]), Fraction(0)) - 1
        slacks.append(s)
        if s < 0:
            violated.append(i)
        if min_slack is None or s < min_slack:
            min_slack = s
    feasible = nonneg and not violated
    bound = sum((c * x for c, x in zip(lp.objective, w) if x), Fraction(0)) if feasible else None
    return TransversalReport(
        feasible=feasible,
        bound=bound,
        min_slack=min_slack if min_slack is not None else Fraction(0),
        num_violated=len(violated) + (0 if nonneg else sum(1 for x in w if x < 0)),
        violated_rows=violated[:32],
        slacks=slacks,
    )


def _dual_objective_ok(lp: CoveringLP, z) -> bool:
    """Exact dual feasibility: z >= 0 and column sums A^T z <= c."""
    if any(v < 0 for v in z):
        return False
    colsum = [Fraction(0)] * lp.num_vars
    for i, row in enumerate(lp.rows):
        if z[i]:
            for j, a in row:
                colsum[j] += a * z[i]
    return all(colsum[j] <= lp.objective[j] for j in range(lp.num_vars))


# ---------------------------------------------------------------------------
# exact simplex (Bland) on the dual packing form
# ---------------------------------------------------------------------------

def _simplex_dual_form(lp: CoveringLP, pivot_cap: int) -> LPSolution:
    """Tableau simplex for max sum(z) s.t. A^T z <= c, starting at z = 0.

    Rows of the tableau are indexed by the primal variables; columns are the
    m packing variables followed by the slack identity.  Bland's rule (lowest
    eligible variable index in, lowest basis index out on ties) guarantees
    termination.
    """
    m = lp.num_rows
    n = lp.num_vars
    ncols = m + n
    zero = Fraction(0)
    tableau = [[zero] * ncols for _ in range(n)]
    for i, row in enumerate(lp.rows):
        for j, a in row:
            tableau[j][i] = Fraction(a)
    for j in range(n):
        tableau[j][m + j] = Fraction(1)
    rhs = [Fraction(c) for c in lp.objective]
    # minimize -sum(z): reduced costs start at -1 on packing columns
    cost = [Fraction(-1)] * m + [zero] * n
    basis = [m + j for j in range(n)]

    pivots = 0
    while True:
        enter = -1
        for col in range(ncols):
            if cost[col] < 0:
                enter = col
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for r in range(n):
            a = tableau[r][enter]
            if a > 0:
                ratio = rhs[r] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave < 0:
            raise GspbError("packing LP unbounded; covering LP data is malformed")
        if pivots >= pivot_cap:
            incumbent = sum((rhs[r] for r in range(n) if basis[r] < m), zero)
            return LPSolution(
                status="cap_exceeded", optimum=None, primal=None, dual=None,
                certified=False, method="simplex", pivots=pivots,
                notes=f"pivot cap {pivot_cap} hit; best uncertified lower bound {incumbent}",
            )
        pivots += 1
        piv = tableau[leave][enter]
        prow = tableau[leave] = [v / piv for v in tableau[leave]]
        rhs[leave] /= piv
        for r in range(n):
            if r == leave:
                continue
            f = tableau[r][enter]
            if f:
                trow = tableau[r]
                tableau[r] = [v - f * pv for v, pv in zip(trow, prow)]
                rhs[r] -= f * rhs[leave]
        f = cost[enter]
        if f:
            cost = [v - f * pv for v, pv in zip(cost, prow)]
        basis[leave] = enter

    z = [zero] * m
    for r in range(n):
        if basis[r] < m:
            z[basis[r]] = rhs[r]
    w = [cost[m + j] for j in range(n)]
    optimum = sum(z, zero)
    report = verify_transversal(lp, w)
    if not report.feasible or report.bound != optimum:
        raise AssertionError("strong duality violated in exact simplex")
    return LPSolution(
        status="optimal", optimum=optimum, primal=w, dual=z,
        certified=True, method="simplex", pivots=pivots,
    )


# ---------------------------------------------------------------------------
# float presolve and exact crossover
# ---------------------------------------------------------------------------

def _scipy_matrices(lp: CoveringLP):
    import numpy as np
    from scipy.sparse import csr_matrix

    data, ri, ci = [], [], []
    for i, row in enumerate(lp.rows):
        for j, a in row:
            ri.append(i)
            ci.append(j)
            data.append(float(a))
    A = csr_matrix((data, (ri, ci)), shape=(lp.num_rows, lp.num_vars))
    c = np.array([float(v) for v in lp.objective])
    return A, c


def float_presolve(lp: CoveringLP, tolerance: float = 1e-9) -> PresolveResult:
    """Floating-point solve; advisory only, never certified.

    Uses the dual-simplex HiGHS path so the reported solution is a vertex,
    which is what the exact crossover needs.
    """
    try:
        import numpy as np
        from scipy.optimize import linprog
    except ImportError:
        return PresolveResult(False, None, None, None, "scipy unavailable")
    A, c = _scipy_matrices(lp)
    res = linprog(c, A_ub=-A, b_ub=-np.ones(lp.num_rows),
                  bounds=(0, None), method="highs-ds")
    if not res.success:
        return PresolveResult(False, None, None, None, res.message)
    dual = (-res.ineqlin.marginals).tolist()
    return PresolveResult(True, float(res.fun), res.x.tolist(), dual, "ok")


def _crossover(lp: CoveringLP, pres: PresolveResult) -> LPSolution | None:
    """Exact optimum from float supports via complementary-slackness systems."""
    import numpy as np

    wt = np.array(pres.primal)
    zt = np.array(pres.dual)
    A, _ = _scipy_matrices(lp)
    rowsum = A @ wt
    p = linsolve.PRIMES[0]
    obj = [int(c) for c in lp.objective]
    int_rows = [[(j, int(a)) for j, a in row] for row in lp.rows]

    colsum = (A.T @ zt)
    for tol in (1e-7, 1e-9, 1e-5):
        support = [j for j in range(lp.num_vars) if wt[j] > tol]
        if not support:
            continue
        tight = [i for i in range(lp.num_rows) if rowsum[i] < 1 + 1e-6]
        tight.sort(key=lambda i: -zt[i])
        dual_eqs = [
            j for j in range(lp.num_vars)
            if colsum[j] > obj[j] - 1e-6 - 1e-9 * obj[j]
        ]
        sol = _crossover_attempt(lp, int_rows, obj, support, tight, dual_eqs, zt, p)
        if sol is not None:
            return sol
    return None


def _crossover_attempt(lp, int_rows, obj, support, tight, dual_eqs, zt, p):
    import numpy as np

    ns = len(support)
    col_of = {j: k for k, j in enumerate(support)}

    # --- primal: pick ns independent tight rows, solve A[R, S] w_S = 1
    tight_mat = np.zeros((len(tight), ns), dtype=np.int64)
    for r, i in enumerate(tight):
        for j, a in int_rows[i]:
            if j in col_of:
                tight_mat[r, col_of[j]] = a % p
    piv_rows, piv_cols = linsolve.select_pivots_mod(tight_mat, p)
    if len(piv_cols) < ns:
        return None
    sel = [tight[r] for r in piv_rows]
    square = [
        [(col_of[j], a) for j, a in int_rows[i] if j in col_of]
        for i in sel
    ]
    w_s = linsolve.dixon_solve(square, ns, [1] * ns)
    if w_s is None:
        return None
    w = [Fraction(0)] * lp.num_vars
    for k, j in enumerate(support):
        w[j] = w_s[k]
    report = verify_transversal(lp, w)
    if not report.feasible:
        return None

    # --- dual: unknowns on the float dual support, one equation per tight
    # dual constraint, solved on an independent square subsystem
    cand = [i for i in tight if zt[i] > 1e-9]
    if not cand:
        return None
    cand_of = {i: k for k, i in enumerate(cand)}
    eq_mat = np.zeros((len(dual_eqs), len(cand)), dtype=np.int64)
    eq_of = {j: r for r, j in enumerate(dual_eqs)}
    for k, i in enumerate(cand):
        for j, a in int_rows[i]:
            r = eq_of.get(j)
            if r is not None:
                eq_mat[r, k] = a % p
    eq_rows, eq_cols = linsolve.select_pivots_mod(eq_mat, p)
    if not eq_rows:
        return None
    chosen = [cand[c] for c in eq_cols]
    colmap: dict[int, list[tuple[int, int]]] = {}
    for k, i in enumerate(chosen):
        for j, a in int_rows[i]:
            if j in eq_of:
                colmap.setdefault(j, []).append((k, a))
    square_t = [colmap.get(dual_eqs[rk], []) for rk in eq_rows]
    rhs = [obj[dual_eqs[rk]] for rk in eq_rows]
    z_c = linsolve.dixon_solve(square_t, len(chosen), rhs)
    if z_c is None:
        return None
    z = [Fraction(0)] * lp.num_rows
    for k, i in enumerate(chosen):
        z[i] = z_c[k]
    if not _dual_objective_ok(lp, z):
        return None
    dual_obj = sum(z, Fraction(0))
    if dual_obj != report.bound:
        return None
    return LPSolution(
        status="optimal", optimum=report.bound, primal=w, dual=z,
        certified=True, method="presolve+crossover",
        notes=f"supports {len(support)}/{len(chosen)}",
    )


# ---------------------------------------------------------------------------
# public solve entry points
# ---------------------------------------------------------------------------

def solve_min_transversal(lp: CoveringLP, pivot_cap: int = DEFAULT_PIVOT_CAP,
                          method: str = "auto") -> LPSolution:
    """Exact minimum fractional transversal with primal and dual witnesses."""
    lp.validate()
    if method not in ("auto", "simplex", "crossover"):
        raise ValueError(f"unknown method {method!r}")
    want_crossover = method == "crossover" or (
        method == "auto" and lp.num_vars >= _CROSSOVER_MIN_VARS and lp.is_integral()
    )
    if want_crossover:
        pres = float_presolve(lp)
        if pres.converged:
            sol = _crossover(lp, pres)
            if sol is not None:
                return sol
        if method == "crossover":
            raise GspbError("crossover failed and was explicitly requested")
    return _simplex_dual_form(lp, pivot_cap)


def solve_max_matching_lp(lp: CoveringLP, pivot_cap: int = DEFAULT_PIVOT_CAP) -> LPSolution:
    """Fractional matching optimum; equals the transversal optimum exactly."""
    sol = solve_min_transversal(lp, pivot_cap=pivot_cap)
    if sol.status != "optimal":
        return sol
    return LPSolution(
        status="optimal", optimum=sol.optimum, primal=sol.dual, dual=sol.primal,
        certified=sol.certified, method=sol.method, pivots=sol.pivots,
        notes="packing side of the covering solve",
    )


# ---------------------------------------------------------------------------
# line-oriented text serialization
# ---------------------------------------------------------------------------

def _fmt_frac(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def lp_to_text(lp: CoveringLP) -> str:
    lines = [f"gspb-lp vars={lp.num_vars} rows={lp.num_rows} name={lp.name}"]
    lines.append("obj " + " ".join(
        f"{j}:{_fmt_frac(c)}" for j, c in enumerate(lp.objective) if c
    ))
    for row in lp.rows:
        lines.append("row " + " ".join(f"{j}:{_fmt_frac(a)}" for j, a in row))
    return "\n".join(lines) + "\n"


def lp_from_text(text: str) -> CoveringLP:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = re.match(r"gspb-lp vars=(\d+) rows=(\d+) name=(.*)", lines[0])
    if not head:
        raise ValueError("not a gspb-lp stream")
    num_vars = int(head.group(1))
    objective = [Fraction(0)] * num_vars
    rows = []
    for ln in lines[1:]:
        kind, _, rest = ln.partition(" ")
        entries = []
        for tok in rest.split():
            js, _, vs = tok.partition(":")
            entries.append((int(js), Fraction(vs)))
        if kind == "obj":
            for j, v in entries:
                objective[j] = v
        elif kind == "row":
            rows.append(entries)
        else:
            raise ValueError(f"unknown record {kind!r}")
    lp = CoveringLP(num_vars=num_vars, objective=objective, rows=rows,
                    name=head.group(3))
    if lp.num_rows != int(head.group(2)):
        raise ValueError("row count disagrees with header")
    lp.validate()
    return lp
