"""Preorders over arguments, lexicographic vector comparison, and the
set-vs-set group comparison used by counter-transitivity style checks."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

LESS, EQUAL, GREATER = -1, 0, 1


def lex_compare(v: Sequence[float], w: Sequence[float], tol: float = 0.0) -> int:
    """First differing coordinate decides; returns -1, 0 or 1.

    Entries within ``tol`` of each other count as equal, which is how float
    step vectors are compared.  Vectors must have equal length.
    """
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")
    for a, b in zip(v, w):
        if abs(a - b) > tol:
            return GREATER if a > b else LESS
    return EQUAL


class Ranking:
    """A preorder over a fixed argument set, queried pairwise.

    ``geq(a, b)`` means *a is at least as acceptable as b*.  Derived
    relations: ``strict`` (geq one way only), ``equivalent`` (both ways),
    ``incomparable`` (neither).  Construction validates reflexivity and,
    unless built from ordered classes (transitive by construction),
    transitivity; a violation raises ``ValueError``.
    """

    __slots__ = ("arguments", "_above")

    def __init__(self, arguments: Iterable[str], geq_pairs: Iterable[tuple[str, str]],
                 validate: bool = True):
        self.arguments: tuple[str, ...] = tuple(sorted(set(arguments)))
        index = set(self.arguments)
        above: dict[str, set[str]] = {a: {a} for a in self.arguments}
        for a, b in geq_pairs:
            if a not in index or b not in index:
                raise ValueError(f"pair ({a},{b}) outside the argument set")
            above[a].add(b)
        self._above = above
        if validate:
            self._audit()

    def _audit(self) -> None:
        for a in self.arguments:
            if a not in self._above[a]:
                raise ValueError(f"not reflexive at {a}")
            for b in self._above[a]:
                if not self._above[b] <= self._above[a]:
                    missing = sorted(self._above[b] - self._above[a])
                    raise ValueError(f"not transitive: {a} >= {b} >= {missing[0]} but not {a} >= {missing[0]}")

    @classmethod
    def from_classes(cls, classes: Sequence[Iterable[str]]) -> "Ranking":
        """Total preorder from equivalence classes listed best first."""
        levels = [frozenset(c) for c in classes]
        args = [a for level in levels for a in level]
        pairs = []
        for i, level in enumerate(levels):
            below = [b for lower in levels[i:] for b in lower]
            pairs.extend((a, b) for a in level for b in below)
        ranking = cls(args, pairs, validate=False)
        return ranking

    def geq(self, a: str, b: str) -> bool:
        if a not in self._above or b not in self._above:
            raise ValueError(f"unknown argument in pair ({a},{b})")
        return b in self._above[a]

    def strict(self, a: str, b: str) -> bool:
        return self.geq(a, b) and not self.geq(b, a)

    def equivalent(self, a: str, b: str) -> bool:
        return self.geq(a, b) and self.geq(b, a)

    def incomparable(self, a: str, b: str) -> bool:
        return not self.geq(a, b) and not self.geq(b, a)

    def is_total(self) -> bool:
        args = self.arguments
        return all(self.geq(a, b) or self.geq(b, a) for i, a in enumerate(args) for b in args[i + 1:])

    def incomparable_pairs(self) -> list[tuple[str, str]]:
        args = self.arguments
        return [(a, b) for i, a in enumerate(args) for b in args[i + 1:] if self.incomparable(a, b)]

    def equivalence_classes(self) -> list[frozenset[str]]:
        """Classes of mutually equivalent arguments, better classes first.

        For a total preorder this is the full chain.  For a partial preorder
        classes come in a topological order of strict dominance (ties broken
        by smallest member name), so class i is never strictly below class j
        for i < j.
        """
        remaining = list(self.arguments)
        classes: list[frozenset[str]] = []
        seen: set[str] = set()
        for a in remaining:
            if a in seen:
                continue
            cls_ = frozenset(b for b in self.arguments if self.equivalent(a, b))
            seen |= cls_
            classes.append(cls_)
        # topological sort: count of classes strictly above, then name
        def key(c: frozenset[str]) -> tuple[int, str]:
            rep = min(c)
            above = sum(1 for other in classes if other is not c and self.strict(min(other), rep))
            return (above, rep)

        return sorted(classes, key=key)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ranking):
            return NotImplemented
        return self.arguments == other.arguments and self._above == other._above

    def __repr__(self) -> str:
        parts = [" = ".join(sorted(c)) for c in self.equivalence_classes()]
        return f"Ranking({' > '.join(parts)})"


def _max_matching(left: Sequence[str], right: Sequence[str],
                  edge: Mapping[str, list[str]], forced: tuple[str, str] | None = None) -> bool:
    """Can every left vertex be matched?  Standard augmenting-path search.

    ``forced`` pins one (left, right) pair before matching the rest.
    """
    match_right: dict[str, str] = {}
    if forced is not None:
        match_right[forced[1]] = forced[0]

    def augment(node: str, seen: set[str]) -> bool:
        for cand in edge[node]:
            if cand in seen:
                continue
            seen.add(cand)
            taken = match_right.get(cand)
            if taken is None or (taken != forced_left and augment(taken, seen)):
                match_right[cand] = node
                return True
        return False

    forced_left = forced[0] if forced else None
    for node in left:
        if node == forced_left:
            continue
        if not augment(node, set()):
            return False
    return True


def group_geq(s1: Iterable[str], s2: Iterable[str], ranking: Ranking) -> bool:
    """True iff some injective f: s2 -> s1 has f(a) at least as good as a."""
    left = sorted(set(s2))
    right = sorted(set(s1))
    if len(left) > len(right):
        return False
    edge = {a: [b for b in right if ranking.geq(b, a)] for a in left}
    return _max_matching(left, right, edge)


def group_gt(s1: Iterable[str], s2: Iterable[str], ranking: Ranking) -> bool:
    """Strict group comparison.

    Requires :func:`group_geq`, plus either a strictly larger s1 or a single
    injective witness whose edges are all geq with at least one strict.  The
    strict witness is found by forcing each strict edge in turn and testing
    whether the remainder still matches.
    """
    left = sorted(set(s2))
    right = sorted(set(s1))
    if not group_geq(s1, s2, ranking):
        return False
    if len(left) < len(right):
        return True
    edge = {a: [b for b in right if ranking.geq(b, a)] for a in left}
    for a in left:
        for b in edge[a]:
            if ranking.strict(b, a) and _max_matching(left, right, edge, forced=(a, b)):
                return True
    return False


def ranking_from_scores(scores: Mapping[str, float], direction: str = "higher",
                        tol: float = 1e-9) -> Ranking:
    """Total preorder from a score table.

    ``direction`` is ``"higher"`` (bigger score is better) or ``"lower"``.
    Ties are declared by clustering sorted scores whose consecutive gap is at
    most ``tol``; clustering keeps the result transitive even when several
    scores sit within tolerance of each other in a chain.
    """
    if direction not in ("higher", "lower"):
        raise ValueError(f"direction must be 'higher' or 'lower', got {direction!r}")
    for a, s in scores.items():
        if s != s or s in (float("inf"), float("-inf")):
            raise ValueError(f"non-finite score for {a}: {s}")
    best_first = sorted(scores, key=lambda a: (-scores[a] if direction == "higher" else scores[a], a))
    classes: list[list[str]] = []
    prev = None
    for a in best_first:
        if prev is not None and abs(scores[a] - prev) <= tol:
            classes[-1].append(a)
        else:
            classes.append([a])
        prev = scores[a]
    return Ranking.from_classes(classes)


def ranking_from_vectors(vectors: Mapping[str, Sequence[float]], lower_is_better: bool = True,
                         tol: float = 0.0) -> Ranking:
    """Total preorder by lexicographic comparison of equal-length vectors.

    Coordinates are first canonicalised by clustering values within ``tol``
    (per coordinate, over all arguments), so the induced ties are transitive;
    the cluster ranks are then compared lexicographically.
    """
    names = sorted(vectors)
    if not names:
        return Ranking.from_classes([])
    length = len(vectors[names[0]])
    if any(len(vectors[a]) != length for a in names):
        raise ValueError("vectors must share one length")
    keys = {a: [] for a in names}
    for i in range(length):
        values = sorted((vectors[a][i], a) for a in names)
        rank = 0
        prev = None
        for value, a in values:
            if prev is not None and abs(value - prev) > tol:
                rank += 1
            keys[a].append(rank)
            prev = value
    order = sorted(names, key=lambda a: (keys[a] if lower_is_better else [-r for r in keys[a]], a))
    classes: list[list[str]] = []
    prev_key = None
    for a in order:
        if prev_key == keys[a]:
            classes[-1].append(a)
        else:
            classes.append([a])
        prev_key = keys[a]
    return Ranking.from_classes(classes)
