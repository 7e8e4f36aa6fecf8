"""The seven ranking semantics.

Value-based: categoriser (recursive 1/(1+sum)), social-framework simple
product (attenuated probabilistic sum), and the proponent/opponent matrix
game value.  Lexicographic: discussion counts and burden numbers, compared
stepwise.  Structural: branch-length tuple pairs (acyclic only) and the
classical grounded labelling collapsed to acceptability tiers.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable

import numpy as np

from .framework import ArgFramework, branch_profiles, walk_counts
from .game import GameSolution, game_value
from .orders import Ranking, lex_compare, ranking_from_scores, ranking_from_vectors

SEMANTICS_IDS = ("cat", "saf", "dbs", "bbs", "tuples", "mt", "grounded")

# Ties between game values are declared more coarsely than fixed-point ties:
# the LP is accurate to far better than 1e-7, while genuinely distinct values
# of small games differ by rational gaps orders of magnitude above 1e-6.
MT_TIE_TOL = 1e-6


class NonConvergenceError(RuntimeError):
    """Fixed-point iteration ran out of iterations before reaching tol."""


class SizeCapExceededError(ValueError):
    """Game-based scoring refused an argument set beyond the configured cap."""


@dataclass(frozen=True)
class SolverConfig:
    """Numeric knobs shared by all semantics.

    ``lex_depth`` of None means "2*|A| + 2 for the framework at hand", which
    is exact for walk-count comparisons on acyclic graphs and a documented
    cutoff on cyclic ones.
    """

    epsilon: float = 0.1
    tol: float = 1e-12
    max_iter: int = 10_000
    lex_depth: int | None = None
    mt_cap: int = 14

    def depth_for(self, framework: ArgFramework) -> int:
        return self.lex_depth if self.lex_depth is not None else 2 * len(framework.arguments) + 2

    def pinned_to(self, framework: ArgFramework) -> "SolverConfig":
        """Copy with the truncation depth frozen for cross-framework comparisons."""
        return replace(self, lex_depth=self.depth_for(framework))


DEFAULT_CONFIG = SolverConfig()


def _iterate_to_fixpoint(framework, start, step, cfg, label):
    """Synchronous iteration, falling back to damped restarts.

    Dense attack cycles make the plain map oscillate (its linearisation can
    exceed 1 in magnitude); averaging the update with the current point kills
    the oscillation and reaches the same (unique) fixed point.  A stop at
    max-change < tol keeps the defining-equation residual below tol/damping.
    """
    stages = ((1.0, cfg.max_iter // 4), (0.5, cfg.max_iter // 2),
              (0.2, cfg.max_iter - 3 * (cfg.max_iter // 4)))
    for damping, budget in stages:
        scores = {a: start for a in framework.arguments}
        for _ in range(budget):
            stepped = step(scores)
            new = {a: (1 - damping) * scores[a] + damping * stepped[a] for a in stepped}
            delta = max((abs(new[a] - scores[a]) for a in new), default=0.0)
            scores = new
            if delta < cfg.tol:
                return scores
    raise NonConvergenceError(f"{label} did not converge within {cfg.max_iter} iterations")


def categoriser_scores(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG) -> dict[str, float]:
    """Fixed point of a -> 1/(1 + sum of attacker scores); unattacked pinned to 1."""

    def step(cur):
        out = {}
        for a in framework.arguments:
            attackers = framework.attackers(a)
            if not attackers:
                out[a] = 1.0
            else:
                out[a] = 1.0 / (1.0 + sum(cur[b] for b in sorted(attackers)))
        return out

    return _iterate_to_fixpoint(framework, 1.0, step, cfg, "categoriser")


def categoriser_residual(framework: ArgFramework, scores: dict[str, float]) -> float:
    worst = 0.0
    for a in framework.arguments:
        attackers = framework.attackers(a)
        target = 1.0 if not attackers else 1.0 / (1.0 + sum(scores[b] for b in sorted(attackers)))
        worst = max(worst, abs(scores[a] - target))
    return worst


def categoriser_ranking(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG) -> Ranking:
    return ranking_from_scores(categoriser_scores(framework, cfg), "higher")


def _prob_sum(values: Iterable[float]) -> float:
    acc = 0.0
    for v in values:
        acc = acc + v - acc * v
    return acc


def saf_scores(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG) -> dict[str, float]:
    """Simple-product social model with uniform base score tau = 1/(1+epsilon).

    Score of a = tau * (1 - probabilistic sum of attacker scores); the empty
    aggregation is 0, so unattacked arguments sit at tau.
    """
    if cfg.epsilon <= 0:
        raise ValueError("epsilon must be positive")
    tau = 1.0 / (1.0 + cfg.epsilon)

    def step(cur):
        return {
            a: tau * (1.0 - _prob_sum(cur[b] for b in sorted(framework.attackers(a))))
            for a in framework.arguments
        }

    return _iterate_to_fixpoint(framework, tau, step, cfg, "social model")


def saf_residual(framework: ArgFramework, scores: dict[str, float], cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    tau = 1.0 / (1.0 + cfg.epsilon)
    worst = 0.0
    for a in framework.arguments:
        target = tau * (1.0 - _prob_sum(scores[b] for b in sorted(framework.attackers(a))))
        worst = max(worst, abs(scores[a] - target))
    return worst


def saf_ranking(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG) -> Ranking:
    return ranking_from_scores(saf_scores(framework, cfg), "higher")


def dbs_vectors(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG) -> dict[str, tuple[int, ...]]:
    """Discussion-count vectors: step i counts length-i in-walks, positive at
    odd steps and negative at even steps, matching the worked examples of the
    source semantics (the smaller vector belongs to the better argument)."""
    depth = cfg.depth_for(framework)
    table = walk_counts(framework, depth)
    out = {}
    for a in framework.arguments:
        out[a] = tuple(
            table.count_in(a, i) if i % 2 == 1 else -table.count_in(a, i)
            for i in range(1, depth + 1)
        )
    return out


def dbs_ranking(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG) -> Ranking:
    return ranking_from_vectors(dbs_vectors(framework, cfg), lower_is_better=True, tol=0)


def bbs_vectors(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG) -> dict[str, tuple[float, ...]]:
    """Burden vectors from step 0 to the truncation depth.

    Step 0 is 1 everywhere; step i adds one reciprocal of each attacker's
    previous burden.  Lower vectors are better.
    """
    depth = cfg.depth_for(framework)
    vectors = {a: [1.0] for a in framework.arguments}
    prev = {a: 1.0 for a in framework.arguments}
    for _ in range(depth):
        cur = {
            a: 1.0 + sum(1.0 / prev[b] for b in sorted(framework.attackers(a)))
            for a in framework.arguments
        }
        for a, v in cur.items():
            vectors[a].append(v)
        prev = cur
    return {a: tuple(v) for a, v in vectors.items()}


def bbs_ranking(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG) -> Ranking:
    return ranking_from_vectors(bbs_vectors(framework, cfg), lower_is_better=True, tol=1e-9)


@dataclass(frozen=True)
class TupledValue:
    """Ascending branch-length tuples: v_p even (defense), v_i odd (attack)."""

    v_p: tuple[int, ...]
    v_i: tuple[int, ...]


UNATTACKED_TUPLE = TupledValue((0,), ())


def tuples_values(framework: ArgFramework) -> dict[str, TupledValue]:
    profiles = branch_profiles(framework)  # raises CyclicFrameworkError on cycles
    return {a: TupledValue(p.defense_lengths, p.attack_lengths) for a, p in profiles.items()}


def compare_tuples(va: TupledValue, vb: TupledValue) -> str:
    """Pairwise tuple comparison: 'eq', 'gt', 'lt' or 'none' (incomparable).

    Unattacked arguments (the unique holders of the zero-length defense
    branch) form a top tier above every attacked argument; between attacked
    arguments, equal branch counts are settled lexicographically (short
    defenses and long attacks win) and unequal counts by the counts alone
    (more defense branches and fewer attack branches win), mixed growth being
    incomparable.
    """
    if va == vb:
        return "eq"
    if va == UNATTACKED_TUPLE:
        return "gt"
    if vb == UNATTACKED_TUPLE:
        return "lt"
    if len(va.v_i) == len(vb.v_i) and len(va.v_p) == len(vb.v_p):
        cmp_p = lex_compare(va.v_p, vb.v_p)
        cmp_i = lex_compare(va.v_i, vb.v_i)
        if cmp_p <= 0 and cmp_i >= 0:
            return "gt"
        if cmp_p >= 0 and cmp_i <= 0:
            return "lt"
        return "none"
    if len(va.v_i) >= len(vb.v_i) and len(va.v_p) <= len(vb.v_p):
        return "lt"
    if len(va.v_i) <= len(vb.v_i) and len(va.v_p) >= len(vb.v_p):
        return "gt"
    return "none"


def tuples_ranking(framework: ArgFramework) -> Ranking:
    """Partial preorder from pairwise tuple comparison; transitivity audited."""
    values = tuples_values(framework)
    names = sorted(framework.arguments)
    pairs = []
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            rel = compare_tuples(values[a], values[b])
            if rel == "eq":
                pairs.append((a, b))
                pairs.append((b, a))
            elif rel == "gt":
                pairs.append((a, b))
            elif rel == "lt":
                pairs.append((b, a))
    return Ranking(names, pairs, validate=True)


def _subset_masks(universe_bits: int, member_bit: int | None = None):
    for mask in range(1 << universe_bits):
        if member_bit is None or mask & member_bit:
            yield mask


def mt_reward_matrix(framework: ArgFramework, name: str):
    """Reward matrix of the proponent/opponent subset game for one argument.

    Rows: subsets containing the argument.  Columns: all subsets.  Reward is
    0 for internally conflicting proponent sets, 1 when the opponent lands no
    attack, otherwise the acceptability degree built from attack counts.

    Vectorised:  #attacks(X -> Y) = sum over i in X of popcount(out[i] & Y)
    decomposes into an indicator-times-contribution matrix product.
    """
    framework._require(name)
    args = sorted(framework.arguments)
    n = len(args)
    idx = {a: i for i, a in enumerate(args)}
    out_bits = np.zeros(n, dtype=np.int64)
    for src, dst in framework.attacks:
        out_bits[idx[src]] |= 1 << idx[dst]

    full = 1 << n
    masks = np.arange(full, dtype=np.int64)
    popcount = np.zeros(full, dtype=np.int64)
    for bit in range(n):
        popcount += (masks >> bit) & 1
    member_of = ((masks[:, None] >> np.arange(n)) & 1).astype(np.float64)  # (2^n, n)
    # hits[i, m] = popcount(out[i] & m): attacks argument i lands inside mask m
    hits = popcount[np.bitwise_and(out_bits[:, None], masks[None, :])].astype(np.float64)

    rows = masks[(masks >> idx[name]) & 1 == 1]
    row_members = member_of[rows]                      # (R, n)
    attacks_into_cols = row_members @ hits             # (R, 2^n): |O <- P|
    attacks_into_rows = (member_of @ hits[:, rows]).T  # (R, 2^n): |P <- O|
    conflict = (row_members * hits[:, rows].T).sum(axis=1) > 0

    f_out = attacks_into_cols / (attacks_into_cols + 1.0)
    f_in = attacks_into_rows / (attacks_into_rows + 1.0)
    matrix = 0.5 * (1.0 + f_out - f_in)
    matrix[attacks_into_rows == 0] = 1.0
    matrix[conflict, :] = 0.0
    return matrix


def mt_scores_detailed(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG
                       ) -> tuple[dict[str, float], dict[str, GameSolution]]:
    if len(framework.arguments) > cfg.mt_cap:
        raise SizeCapExceededError(
            f"{len(framework.arguments)} arguments exceed the game cap {cfg.mt_cap}"
        )
    scores, solutions = {}, {}
    for a in sorted(framework.arguments):
        sol = game_value(mt_reward_matrix(framework, a))
        scores[a] = sol.value
        solutions[a] = sol
    return scores, solutions


def mt_scores(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG) -> dict[str, float]:
    return mt_scores_detailed(framework, cfg)[0]


def mt_ranking(framework: ArgFramework, cfg: SolverConfig = DEFAULT_CONFIG) -> Ranking:
    return ranking_from_scores(mt_scores(framework, cfg), "higher", tol=MT_TIE_TOL)


def grounded_labelling(framework: ArgFramework) -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
    """(accepted, undecided, rejected) under the least-fixpoint defense operator.

    Accepted is the least fixed point of S -> {a : every attacker of a is
    attacked by S}; rejected is whatever an accepted argument attacks; the
    rest stay undecided.
    """
    current: frozenset[str] = frozenset()
    while True:
        attacked_by_current = {t for a in current for t in framework.targets(a)}
        nxt = frozenset(
            a for a in framework.arguments
            if all(b in attacked_by_current for b in framework.attackers(a))
        )
        if nxt == current:
            break
        current = nxt
    rejected = frozenset(
        a for a in framework.arguments
        if any(b in current for b in framework.attackers(a))
    )
    undecided = framework.arguments - current - rejected
    return current, undecided, rejected


def grounded_extension(framework: ArgFramework) -> frozenset[str]:
    return grounded_labelling(framework)[0]


def grounded_ranking(framework: ArgFramework) -> Ranking:
    """Acceptability tiers of the grounded labelling: accepted above
    undecided above rejected (empty tiers dropped)."""
    classes = [c for c in grounded_labelling(framework) if c]
    return Ranking.from_classes(classes)


@dataclass(frozen=True)
class SemanticsRef:
    """A semantics identifier plus its solver configuration.

    Deterministic: the same (framework, config) always yields the same
    ranking, which the property checker relies on.
    """

    sid: str
    cfg: SolverConfig = DEFAULT_CONFIG

    def __post_init__(self):
        if self.sid not in SEMANTICS_IDS:
            raise ValueError(f"unknown semantics {self.sid!r}; pick one of {SEMANTICS_IDS}")

    @property
    def needs_acyclic(self) -> bool:
        return self.sid == "tuples"

    @property
    def value_based(self) -> bool:
        return self.sid in ("cat", "saf", "mt")

    def scores(self, framework: ArgFramework) -> dict[str, float] | None:
        if self.sid == "cat":
            return categoriser_scores(framework, self.cfg)
        if self.sid == "saf":
            return saf_scores(framework, self.cfg)
        if self.sid == "mt":
            return mt_scores(framework, self.cfg)
        return None

    def ranking(self, framework: ArgFramework) -> Ranking:
        if self.sid == "cat":
            return categoriser_ranking(framework, self.cfg)
        if self.sid == "saf":
            return saf_ranking(framework, self.cfg)
        if self.sid == "dbs":
            return dbs_ranking(framework, self.cfg)
        if self.sid == "bbs":
            return bbs_ranking(framework, self.cfg)
        if self.sid == "tuples":
            return tuples_ranking(framework)
        if self.sid == "mt":
            return mt_ranking(framework, self.cfg)
        return grounded_ranking(framework)

    def pinned_to(self, framework: ArgFramework) -> "SemanticsRef":
        return replace(self, cfg=self.cfg.pinned_to(framework))


@lru_cache(maxsize=50_000)
def cached_ranking(sem: SemanticsRef, framework: ArgFramework) -> Ranking:
    """Memoised rankings: the property checker asks for the same (semantics,
    framework) ranking once per property and once per grafted construction."""
    return sem.ranking(framework)
