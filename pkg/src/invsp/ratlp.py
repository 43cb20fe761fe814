"""Exact rational linear programming by a two-phase tableau simplex.

All arithmetic is over exact rationals, so feasibility answers are
certificates rather than numerical judgements: strict-positivity questions
are posed as "maximize the slack t" problems and the sign of the exact
optimum decides the open condition.  Bland's rule is used throughout, which
guarantees termination even on degenerate instances.

Variables are free (unbounded in both directions); encode bounds as
explicit constraint rows.  Internally each free variable is split into a
difference of two nonnegative ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .rat import Rat, rat

LE = "<="
GE = ">="
EQ = "=="

Constraint = Tuple[Sequence, str, object]  # (coeffs, relation, rhs)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    objective: Optional[Rat]
    x: Optional[List[Rat]]


def solve_lp(
    objective: Sequence,
    constraints: Sequence[Constraint],
    n_vars: int,
    maximize: bool = True,
) -> LPResult:
    """Optimize objective . x subject to the given constraint rows.

    Returns an LPResult whose ``x`` is an optimal point over the original
    (free) variables when the status is "optimal".
    """
    if not maximize:
        res = solve_lp([-rat(c) for c in objective], constraints, n_vars, True)
        if res.status == OPTIMAL:
            res.objective = -res.objective
        return res

    c_orig = [rat(c) for c in objective]
    if len(c_orig) != n_vars:
        raise ValueError("objective length does not match variable count")

    n_split = 2 * n_vars
    rows: List[List[Rat]] = []
    rels: List[str] = []
    rhss: List[Rat] = []
    for coeffs, rel, rhs in constraints:
        if len(coeffs) != n_vars:
            raise ValueError("constraint arity does not match variable count")
        if rel not in (LE, GE, EQ):
            raise ValueError(f"unknown relation {rel!r}")
        row = [rat(a) for a in coeffs]
        b = rat(rhs)
        if b < 0:
            row = [-a for a in row]
            b = -b
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        rows.append(row + [-a for a in row])  # u block then v block
        rels.append(rel)
        rhss.append(b)

    m = len(rows)
    n_slack = sum(1 for r in rels if r != EQ)
    art_rows = [i for i, r in enumerate(rels) if r != LE]
    n_art = len(art_rows)
    width = n_split + n_slack + n_art + 1  # final column is rhs

    tableau: List[List[Rat]] = []
    basis: List[int] = []
    zero = rat(0)
    one = rat(1)
    slack_at = 0
    art_at = 0
    for i in range(m):
        row = rows[i] + [zero] * (n_slack + n_art) + [rhss[i]]
        if rels[i] != EQ:
            col = n_split + slack_at
            row[col] = one if rels[i] == LE else -one
            slack_at += 1
            if rels[i] == LE:
                basis.append(col)
        if rels[i] != LE:
            col = n_split + n_slack + art_at
            row[col] = one
            art_at += 1
            basis.append(col)
        tableau.append(row)

    art_start = n_split + n_slack

    # ---- phase 1: maximize -(sum of artificials) ----
    if n_art:
        cost1 = [zero] * (width - 1)
        for j in range(art_start, width - 1):
            cost1[j] = -one
        z_row = _initial_z_row(tableau, basis, cost1)
        status = _pivot_loop(tableau, basis, z_row, width)
        if status == UNBOUNDED:  # cannot happen: objective bounded above by 0
            raise AssertionError("phase 1 reported unbounded")
        if z_row[-1] != 0:  # value of max(-sum art) stored as -z_rhs
            # z_row[-1] holds sum(c_B * rhs); nonzero means artificials remain
            return LPResult(INFEASIBLE, None, None)
        _drive_out_artificials(tableau, basis, art_start, width)
        # drop artificial columns
        for i in range(len(tableau)):
            tableau[i] = tableau[i][:art_start] + [tableau[i][-1]]
        width = art_start + 1

    # ---- phase 2 ----
    cost2 = [zero] * (width - 1)
    for i in range(n_vars):
        cost2[i] = c_orig[i]
        cost2[n_vars + i] = -c_orig[i]
    z_row = _initial_z_row(tableau, basis, cost2)
    status = _pivot_loop(tableau, basis, z_row, width)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)

    values = [zero] * (width - 1)
    for i, b in enumerate(basis):
        values[b] = tableau[i][-1]
    x = [values[i] - values[n_vars + i] for i in range(n_vars)]
    objective_value = sum((ci * xi for ci, xi in zip(c_orig, x)), zero)
    return LPResult(OPTIMAL, objective_value, x)


def _initial_z_row(tableau, basis, cost) -> List[Rat]:
    """z_row[j] = sum_i cost[basis_i] * T[i][j] - cost[j]; rhs cell holds value."""
    width = len(tableau[0])
    zero = rat(0)
    z = [zero] * width
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb == 0:
            continue
        row = tableau[i]
        for j in range(width):
            if row[j] != 0:
                z[j] += cb * row[j]
    for j in range(width - 1):
        z[j] -= cost[j]
    return z


def _pivot_loop(tableau, basis, z_row, width) -> str:
    """Bland-rule pivoting until optimal or unbounded."""
    m = len(tableau)
    while True:
        enter = -1
        for j in range(width - 1):
            if z_row[j] < 0 and j not in basis:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave_row = -1
        best_ratio = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave_row])
                ):
                    best_ratio = ratio
                    leave_row = i
        if leave_row < 0:
            return UNBOUNDED
        _pivot(tableau, basis, z_row, leave_row, enter)


def _pivot(tableau, basis, z_row, row_i, col_j) -> None:
    pivot_row = tableau[row_i]
    piv = pivot_row[col_j]
    if piv == 0:
        raise AssertionError("zero pivot")
    inv = 1 / piv
    tableau[row_i] = pivot_row = [a * inv for a in pivot_row]
    for i, row in enumerate(tableau):
        if i == row_i:
            continue
        factor = row[col_j]
        if factor != 0:
            tableau[i] = [a - factor * b for a, b in zip(row, pivot_row)]
    factor = z_row[col_j]
    if factor != 0:
        for j in range(len(z_row)):
            z_row[j] -= factor * pivot_row[j]
    basis[row_i] = col_j


def _drive_out_artificials(tableau, basis, art_start, width) -> None:
    """Pivot zero-valued basic artificials onto structural columns."""
    removable = []
    for i in range(len(tableau)):
        if basis[i] < art_start:
            continue
        pivot_col = -1
        for j in range(art_start):
            if tableau[i][j] != 0:
                pivot_col = j
                break
        if pivot_col >= 0:
            dummy_z = [rat(0)] * width
            _pivot(tableau, basis, dummy_z, i, pivot_col)
        else:
            removable.append(i)  # redundant row (all structural coeffs zero)
    for i in reversed(removable):
        del tableau[i]
        del basis[i]
