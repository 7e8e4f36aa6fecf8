"""Exact-in-spirit value of a finite two-player zero-sum matrix game.

The row player maximises.  The game is reduced to the classic pair of linear
programs: after shifting payoffs so every entry is >= 1, the column player's
scaled problem  max 1'w  s.t. M w <= 1, w >= 0  starts feasible at w = 0 and
is solved with a dense primal simplex.  The optimal objective is 1/value and
the row strategy is read off the reduced costs of the slack columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_PIVOT_EPS = 1e-11


class GameSolverError(RuntimeError):
    """The simplex failed to terminate cleanly; should not happen on reward matrices."""


@dataclass(frozen=True)
class GameSolution:
    value: float
    row_strategy: tuple[float, ...]
    column_strategy: tuple[float, ...]
    duality_gap: float
    pivots: int


def game_value(matrix) -> GameSolution:
    """Maximin value and an optimal mixed row strategy.

    Accepts any finite real matrix (list of rows or ndarray).  The duality
    gap reported is max_i (M q)_i - min_j (p' M)_j computed from the two
    recovered strategies; it bounds the numerical error of ``value``.
    """
    payoff = np.asarray(matrix, dtype=float)
    if payoff.ndim != 2 or payoff.size == 0:
        raise ValueError("need a nonempty 2-d payoff matrix")
    if not np.all(np.isfinite(payoff)):
        raise ValueError("payoff entries must be finite")
    m, n = payoff.shape
    shift = 1.0 - float(payoff.min())
    shifted = payoff + shift  # every entry >= 1

    # tableau rows: m constraints  [ B | I | 1 ] ; last row: reduced costs of max 1'w
    tab = np.zeros((m + 1, n + m + 1))
    tab[:m, :n] = shifted
    tab[:m, n:n + m] = np.eye(m)
    tab[:m, -1] = 1.0
    tab[m, :n] = -1.0
    basis = list(range(n, n + m))

    pivots = 0
    stalled = 0
    max_pivots = 200 * (m + n) + 2000
    while True:
        cost = tab[m, :-1]
        if stalled > m + n:  # Bland's rule once the objective stops moving
            entering_candidates = np.flatnonzero(cost < -_PIVOT_EPS)
            if entering_candidates.size == 0:
                break
            col = int(entering_candidates[0])
        else:
            col = int(np.argmin(cost))
            if cost[col] >= -_PIVOT_EPS:
                break
        column = tab[:m, col]
        eligible = column > _PIVOT_EPS
        if not eligible.any():
            raise GameSolverError("unbounded tableau on a bounded game")
        ratios = np.full(m, np.inf)
        ratios[eligible] = tab[:m, -1][eligible] / column[eligible]
        best = ratios.min()
        ties = np.flatnonzero(ratios <= best + 1e-9 * (1.0 + abs(best)))
        row = int(min(ties, key=lambda i: basis[i]))  # smallest basis index on ties
        before = tab[m, -1]
        pivot = tab[row, col]
        tab[row] /= pivot
        others = np.arange(m + 1) != row
        tab[others] -= np.outer(tab[others, col], tab[row])
        basis[row] = col
        pivots += 1
        stalled = stalled + 1 if tab[m, -1] <= before + 1e-15 else 0
        if pivots > max_pivots:
            raise GameSolverError(f"no convergence after {pivots} pivots")

    w = np.zeros(n + m)
    w[basis] = tab[:m, -1]
    col_raw = w[:n]
    row_raw = tab[m, n:n + m].copy()  # dual values sit in the slack reduced costs
    total = col_raw.sum()
    if total <= 0 or row_raw.sum() <= 0:
        raise GameSolverError("degenerate optimum: zero strategy mass")
    value = 1.0 / total - shift
    p = np.maximum(row_raw, 0.0)
    p /= p.sum()
    q = np.maximum(col_raw, 0.0)
    q /= q.sum()
    guaranteed_low = float((p @ payoff).min())
    guaranteed_high = float((payoff @ q).max())
    return GameSolution(
        value=float(value),
        row_strategy=tuple(float(x) for x in p),
        column_strategy=tuple(float(x) for x in q),
        duality_gap=guaranteed_high - guaranteed_low,
        pivots=pivots,
    )
