"""Directed attack graphs and the structural queries everything else builds on.

The central type is :class:`ArgFramework`, an immutable directed graph of
named arguments.  All operations are pure: constructors return new frameworks
and queries never mutate, so values are safe to share across threads.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from itertools import count
from typing import Iterable, Iterator

NAME_PATTERN = re.compile(r"[A-Za-z0-9_]+\Z")

_FACT_PATTERN = re.compile(
    r"(?P<kind>arg|att)\s*\(\s*(?P<a>[A-Za-z0-9_]+)\s*(?:,\s*(?P<b>[A-Za-z0-9_]+)\s*)?\)\s*\."
)


class FrameworkError(ValueError):
    """Structurally invalid framework or query."""


class UnknownArgumentError(FrameworkError):
    """A query named an argument the framework does not contain."""


class CyclicFrameworkError(FrameworkError):
    """An acyclic-only operation was handed a graph with a directed cycle."""


class ApxError(ValueError):
    """Malformed apx input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class ArgFramework:
    """A finite set of arguments plus a binary attack relation.

    Self-attacks ``(a, a)`` are allowed; duplicate pairs collapse because the
    relation is a set.  Every attack endpoint must be a declared argument.
    """

    arguments: frozenset[str]
    attacks: frozenset[tuple[str, str]]
    _attackers: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _targets: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "arguments", frozenset(self.arguments))
        object.__setattr__(self, "attacks", frozenset((a, b) for a, b in self.attacks))
        for name in self.arguments:
            if not NAME_PATTERN.match(name):
                raise FrameworkError(f"bad argument name {name!r}")
        attackers: dict[str, set[str]] = {a: set() for a in self.arguments}
        targets: dict[str, set[str]] = {a: set() for a in self.arguments}
        for src, dst in self.attacks:
            if src not in self.arguments or dst not in self.arguments:
                raise FrameworkError(f"attack ({src},{dst}) references an undeclared argument")
            attackers[dst].add(src)
            targets[src].add(dst)
        object.__setattr__(self, "_attackers", {a: frozenset(s) for a, s in attackers.items()})
        object.__setattr__(self, "_targets", {a: frozenset(s) for a, s in targets.items()})

    @classmethod
    def make(cls, arguments: Iterable[str], attacks: Iterable[tuple[str, str]] = ()) -> "ArgFramework":
        return cls(frozenset(arguments), frozenset(attacks))

    def __len__(self) -> int:
        return len(self.arguments)

    def _require(self, name: str) -> None:
        if name not in self.arguments:
            raise UnknownArgumentError(f"unknown argument {name!r}")

    def attackers(self, name: str) -> frozenset[str]:
        self._require(name)
        return self._attackers[name]

    def targets(self, name: str) -> frozenset[str]:
        self._require(name)
        return self._targets[name]

    def is_attacked(self, name: str) -> bool:
        return bool(self.attackers(name))

    def unattacked(self) -> frozenset[str]:
        return frozenset(a for a in self.arguments if not self._attackers[a])

    def self_attacking(self) -> frozenset[str]:
        return frozenset(a for a in self.arguments if (a, a) in self.attacks)

    def restricted_to(self, names: Iterable[str]) -> "ArgFramework":
        keep = frozenset(names)
        missing = keep - self.arguments
        if missing:
            raise UnknownArgumentError(f"unknown arguments {sorted(missing)}")
        return ArgFramework(keep, frozenset(p for p in self.attacks if p[0] in keep and p[1] in keep))

    def without_argument(self, name: str) -> "ArgFramework":
        self._require(name)
        return self.restricted_to(self.arguments - {name})

    def without_attack(self, pair: tuple[str, str]) -> "ArgFramework":
        if pair not in self.attacks:
            raise FrameworkError(f"no attack {pair}")
        return ArgFramework(self.arguments, self.attacks - {pair})

    def with_attack(self, pair: tuple[str, str]) -> "ArgFramework":
        return ArgFramework(self.arguments, self.attacks | {pair})


def parse_apx(text: str) -> ArgFramework:
    """Parse apx facts (``arg(X).`` / ``att(X,Y).``) into a framework.

    ``%`` starts a comment running to end of line.  Several facts may share a
    line.  Attacks may precede the ``arg`` facts they reference, but every
    endpoint must be declared somewhere, and redeclaring an argument is an
    error.
    """
    args: list[tuple[str, int]] = []
    atts: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line):
            if line[pos].isspace():
                pos += 1
                continue
            match = _FACT_PATTERN.match(line, pos)
            if not match:
                raise ApxError(f"unparseable fact near {line[pos:pos + 30]!r}", lineno)
            kind, a, b = match.group("kind"), match.group("a"), match.group("b")
            if kind == "arg":
                if b is not None:
                    raise ApxError("arg() takes a single name", lineno)
                args.append((a, lineno))
            else:
                if b is None:
                    raise ApxError("att() needs two names", lineno)
                atts.append((a, b, lineno))
            pos = match.end()
    declared: set[str] = set()
    for name, lineno in args:
        if name in declared:
            raise ApxError(f"duplicate arg({name})", lineno)
        declared.add(name)
    for a, b, lineno in atts:
        for name in (a, b):
            if name not in declared:
                raise ApxError(f"attack references undeclared argument {name!r}", lineno)
    return ArgFramework(frozenset(declared), frozenset((a, b) for a, b, _ in atts))


def serialize_apx(framework: ArgFramework) -> str:
    """Render a framework as apx text: sorted args, then sorted attacks."""
    lines = [f"arg({a})." for a in sorted(framework.arguments)]
    lines += [f"att({a},{b})." for a, b in sorted(framework.attacks)]
    return "\n".join(lines) + ("\n" if lines else "")


def framework_key(framework: ArgFramework) -> str:
    """Stable short hash of the framework, for reports and seeds."""
    return hashlib.sha256(serialize_apx(framework).encode()).hexdigest()[:16]


def direct_attackers(framework: ArgFramework, name: str) -> frozenset[str]:
    return framework.attackers(name)


@dataclass(frozen=True)
class WalkCountTable:
    """Number of directed walks of each length 1..max_len ending at each argument.

    Walks may repeat vertices; counts follow the recurrence
    ``count_in(a, n) = sum over direct attackers b of count_in(b, n - 1)``
    with ``count_in(a, 1)`` the in-degree.  Kept in exact integers.
    """

    max_len: int
    counts: dict[str, tuple[int, ...]]

    def count_in(self, name: str, length: int) -> int:
        if name not in self.counts:
            raise UnknownArgumentError(f"unknown argument {name!r}")
        if not 1 <= length <= self.max_len:
            raise ValueError(f"length {length} outside 1..{self.max_len}")
        return self.counts[name][length - 1]


def walk_counts(framework: ArgFramework, max_len: int) -> WalkCountTable:
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    prev = {a: 1 for a in framework.arguments}
    table: dict[str, list[int]] = {a: [] for a in framework.arguments}
    for _ in range(max_len):
        cur = {a: sum(prev[b] for b in framework.attackers(a)) for a in framework.arguments}
        for a, n in cur.items():
            table[a].append(n)
        prev = cur
    return WalkCountTable(max_len, {a: tuple(v) for a, v in table.items()})


def has_cycle(framework: ArgFramework) -> bool:
    """True when the attack relation contains a directed cycle (incl. self-attacks)."""
    indeg = {a: len(framework.attackers(a)) for a in framework.arguments}
    queue = [a for a, d in indeg.items() if d == 0]
    seen = 0
    while queue:
        node = queue.pop()
        seen += 1
        for succ in framework.targets(node):
            indeg[succ] -= 1
            if indeg[succ] == 0:
                queue.append(succ)
    return seen != len(framework.arguments)


@dataclass(frozen=True)
class BranchProfile:
    """Multisets of root-branch lengths into one argument of an acyclic graph.

    An entry ``n`` with multiplicity ``x`` means ``x`` walks of length ``n``
    from some unattacked argument.  Even lengths are defense branches, odd
    lengths attack branches.  An unattacked argument owns the empty walk, so
    its defense lengths are exactly ``(0,)``.
    """

    defense_lengths: tuple[int, ...]
    attack_lengths: tuple[int, ...]


def branch_profiles(framework: ArgFramework) -> dict[str, BranchProfile]:
    """Branch profiles for every argument at once.  Raises on cyclic input."""
    if has_cycle(framework):
        raise CyclicFrameworkError("branch profiles need an acyclic framework")
    args = framework.arguments
    ways = {a: {} for a in args}  # length -> number of root walks
    for root in framework.unattacked():
        ways[root][0] = 1
    for length in range(1, len(args)):
        layer = {}
        for a in args:
            total = sum(ways[b].get(length - 1, 0) for b in framework.attackers(a))
            if total:
                layer[a] = total
        if not layer:
            break
        for a, n in layer.items():
            ways[a][length] = n
    out = {}
    for a in args:
        defense: list[int] = []
        attack: list[int] = []
        for length, mult in sorted(ways[a].items()):
            (defense if length % 2 == 0 else attack).extend([length] * mult)
        out[a] = BranchProfile(tuple(defense), tuple(attack))
    return out


def branch_profile(framework: ArgFramework, name: str) -> BranchProfile:
    framework._require(name)
    return branch_profiles(framework)[name]


def connected_components(framework: ArgFramework) -> list[ArgFramework]:
    """Weakly connected components, each as an induced sub-framework.

    Deterministic order: components sorted by their smallest argument name.
    """
    neighbours: dict[str, set[str]] = {a: set() for a in framework.arguments}
    for a, b in framework.attacks:
        neighbours[a].add(b)
        neighbours[b].add(a)
    seen: set[str] = set()
    comps = []
    for start in sorted(framework.arguments):
        if start in seen:
            continue
        stack, comp = [start], {start}
        seen.add(start)
        while stack:
            node = stack.pop()
            for nxt in neighbours[node]:
                if nxt not in comp:
                    comp.add(nxt)
                    seen.add(nxt)
                    stack.append(nxt)
        comps.append(framework.restricted_to(comp))
    return comps


def find_isomorphism(f: ArgFramework, g: ArgFramework) -> dict[str, str] | None:
    """An attack-preserving bijection from f to g, or None.

    Backtracking search; candidates are pruned by (in-degree, out-degree,
    self-attack) signatures.
    """
    if len(f.arguments) != len(g.arguments) or len(f.attacks) != len(g.attacks):
        return None

    def signature(fr: ArgFramework, v: str) -> tuple[int, int, bool]:
        return (len(fr.attackers(v)), len(fr.targets(v)), (v, v) in fr.attacks)

    f_args = sorted(f.arguments)
    by_sig: dict[tuple[int, int, bool], list[str]] = {}
    for w in sorted(g.arguments):
        by_sig.setdefault(signature(g, w), []).append(w)
    candidates = {}
    for v in f_args:
        cands = by_sig.get(signature(f, v))
        if not cands:
            return None
        candidates[v] = cands
    order = sorted(f_args, key=lambda v: (len(candidates[v]), v))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str, w: str) -> bool:
        for u, x in mapping.items():
            if ((u, v) in f.attacks) != ((x, w) in g.attacks):
                return False
            if ((v, u) in f.attacks) != ((w, x) in g.attacks):
                return False
        return True

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if backtrack(i + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    return dict(mapping) if backtrack(0) else None


def disjoint_union(f: ArgFramework, g: ArgFramework) -> ArgFramework:
    """Plain union of argument and attack sets.

    Overlapping names merge; callers wanting true disjointness should pass a
    fresh clone (see :func:`clone_fresh`).
    """
    return ArgFramework(f.arguments | g.arguments, f.attacks | g.attacks)


def clone_fresh(f: ArgFramework, suffix: str = "_c") -> tuple[ArgFramework, dict[str, str]]:
    """Isomorphic copy with suffixed names guaranteed fresh w.r.t. the original."""
    if not NAME_PATTERN.match(suffix.lstrip("_") or "x"):
        raise FrameworkError(f"bad suffix {suffix!r}")
    for reps in count(1):
        mapping = {a: a + suffix * reps for a in f.arguments}
        if not (set(mapping.values()) & f.arguments):
            break
    clone = ArgFramework(
        frozenset(mapping.values()),
        frozenset((mapping[a], mapping[b]) for a, b in f.attacks),
    )
    return clone, mapping


def rename(f: ArgFramework, mapping: dict[str, str]) -> ArgFramework:
    """Apply a bijective renaming; raises if the mapping is not injective/total."""
    if set(mapping) != set(f.arguments) or len(set(mapping.values())) != len(f.arguments):
        raise FrameworkError("renaming must be a bijection on the argument set")
    return ArgFramework(
        frozenset(mapping.values()),
        frozenset((mapping[a], mapping[b]) for a, b in f.attacks),
    )


def graft_branch(f: ArgFramework, name: str, kind: str, length: int) -> ArgFramework:
    """Attach a fresh chain x_len -> ... -> x_1 -> name.

    ``kind`` is ``"defense"`` (even length >= 2) or ``"attack"`` (odd length
    >= 1); the chain root x_len is unattacked.
    """
    f._require(name)
    if kind not in ("defense", "attack"):
        raise FrameworkError(f"kind must be 'defense' or 'attack', got {kind!r}")
    if length < 1:
        raise FrameworkError("branch length must be >= 1")
    if kind == "defense" and length % 2 != 0:
        raise FrameworkError(f"defense branch length must be even, got {length}")
    if kind == "attack" and length % 2 != 1:
        raise FrameworkError(f"attack branch length must be odd, got {length}")
    prefix = f"{name}_{'d' if kind == 'defense' else 'a'}"
    while any(f"{prefix}{i}" in f.arguments for i in range(1, length + 1)):
        prefix += "_"
    chain = [f"{prefix}{i}" for i in range(1, length + 1)]
    new_attacks = {(chain[0], name)}
    new_attacks.update((chain[i], chain[i - 1]) for i in range(1, length))
    return ArgFramework(f.arguments | set(chain), f.attacks | new_attacks)


def all_walks(framework: ArgFramework, length: int) -> Iterator[tuple[str, ...]]:
    """Every directed walk of exactly `length` attacks, as a vertex sequence.

    Brute-force enumeration; only sensible on tiny graphs.  Used as an oracle.
    """
    def extend(walk: tuple[str, ...]) -> Iterator[tuple[str, ...]]:
        if len(walk) == length + 1:
            yield walk
            return
        for nxt in sorted(framework.targets(walk[-1])):
            yield from extend(walk + (nxt,))

    for start in sorted(framework.arguments):
        yield from extend((start,))
