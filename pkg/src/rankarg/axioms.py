"""Instance-level verification of the eighteen ranking axioms.

``check`` evaluates one property against one (framework, semantics) pair and
returns Holds / Violated(witness) / NotApplicable / Inconclusive.  The
universally-quantified properties are checked over every premise instance
inside the given framework (plus the grafted constructions for the change
properties); a clean pass is evidence, never a proof.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .framework import (
    ArgFramework,
    CyclicFrameworkError,
    branch_profiles,
    clone_fresh,
    connected_components,
    disjoint_union,
    framework_key,
    graft_branch,
    has_cycle,
    rename,
    walk_counts,
)
from .orders import group_geq, group_gt
from .semantics import (
    NonConvergenceError,
    SemanticsRef,
    SizeCapExceededError,
    cached_ranking,
)


class PropertyId(str, Enum):
    ABS = "Abs"
    IN = "In"
    VP = "VP"
    DP = "DP"
    CT = "CT"
    SCT = "SCT"
    CP = "CP"
    QP = "QP"
    DDP = "DDP"
    SC = "SC"
    PLUS_DB_STRICT = "+DB!"
    PLUS_DB = "+DB"
    INC_AB = "^AB"
    INC_DB = "^DB"
    PLUS_AB = "+AB"
    TOT = "Tot"
    NAE = "NaE"
    AVSFD = "AvsFD"


#: Table-layout order for reports.
PROPERTY_ORDER = (
    PropertyId.ABS, PropertyId.IN, PropertyId.VP, PropertyId.DP, PropertyId.CT,
    PropertyId.SCT, PropertyId.CP, PropertyId.QP, PropertyId.DDP, PropertyId.SC,
    PropertyId.PLUS_DB_STRICT, PropertyId.PLUS_DB, PropertyId.INC_AB,
    PropertyId.INC_DB, PropertyId.PLUS_AB, PropertyId.TOT, PropertyId.NAE,
    PropertyId.AVSFD,
)

_ALIASES = {
    "abs": PropertyId.ABS, "in": PropertyId.IN, "vp": PropertyId.VP,
    "dp": PropertyId.DP, "ct": PropertyId.CT, "sct": PropertyId.SCT,
    "cp": PropertyId.CP, "qp": PropertyId.QP, "ddp": PropertyId.DDP,
    "sc": PropertyId.SC, "tot": PropertyId.TOT, "nae": PropertyId.NAE,
    "avsfd": PropertyId.AVSFD,
    "+db!": PropertyId.PLUS_DB_STRICT, "plus-db-strict": PropertyId.PLUS_DB_STRICT,
    "sdb": PropertyId.PLUS_DB_STRICT, "⊕db": PropertyId.PLUS_DB_STRICT,
    "+db": PropertyId.PLUS_DB, "plus-db": PropertyId.PLUS_DB,
    "^ab": PropertyId.INC_AB, "inc-ab": PropertyId.INC_AB, "↑ab": PropertyId.INC_AB,
    "^db": PropertyId.INC_DB, "inc-db": PropertyId.INC_DB, "↑db": PropertyId.INC_DB,
    "+ab": PropertyId.PLUS_AB, "plus-ab": PropertyId.PLUS_AB,
}


def parse_property(token: str) -> PropertyId:
    try:
        return _ALIASES[token.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown property {token!r}; known: {[p.value for p in PROPERTY_ORDER]}")


class VerdictStatus(Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"
    NOT_APPLICABLE = "NotApplicable"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Witness:
    """A replayable violation: re-running check on ``framework`` reproduces it.

    ``pair`` is (x, y) where the property demanded x strictly above (or at
    least as good as) y and the ranking refused.  For change properties the
    comparison lives in ``constructed`` while ``framework`` stays the base
    instance the premise quantified over.
    """

    framework: ArgFramework
    property: PropertyId
    semantics: str
    pair: tuple[str, str]
    constructed: ArgFramework | None = None
    note: str = ""


@dataclass(frozen=True)
class PropertyVerdict:
    status: VerdictStatus
    witness: Witness | None = None
    detail: str = ""

    def __bool__(self) -> bool:  # truthy iff nothing was refuted
        return self.status is not VerdictStatus.VIOLATED


def _holds() -> PropertyVerdict:
    return PropertyVerdict(VerdictStatus.HOLDS)


def _na(reason: str) -> PropertyVerdict:
    return PropertyVerdict(VerdictStatus.NOT_APPLICABLE, detail=reason)


def _violated(framework, prop, sem_id, pair, constructed=None, note="") -> PropertyVerdict:
    return PropertyVerdict(
        VerdictStatus.VIOLATED,
        witness=Witness(framework, prop, sem_id, pair, constructed, note),
        detail=note,
    )


def defense_is_simple(framework: ArgFramework, name: str) -> bool:
    """Every defender hits exactly one direct attacker of the argument."""
    attackers = framework.attackers(name)
    defenders = {d for x in attackers for d in framework.attackers(x)}
    return all(len(framework.targets(d) & attackers) == 1 for d in defenders)


def defense_is_distributed(framework: ArgFramework, name: str) -> bool:
    """Every direct attacker of the argument has at most one attacker."""
    return all(len(framework.attackers(x)) <= 1 for x in framework.attackers(name))


def branch_roots(framework: ArgFramework) -> dict[str, tuple[frozenset[str], frozenset[str]]]:
    """Per argument: (defense roots, attack roots).

    A root is an unattacked argument with an even- (odd-) length walk to the
    argument; parity reachability makes this well defined on cyclic graphs
    too.  Every unattacked argument is its own defense root (empty walk).
    """
    result = {a: [set(), set()] for a in framework.arguments}
    for root in framework.unattacked():
        reached = {(root, 0)}
        frontier = [(root, 0)]
        while frontier:
            node, parity = frontier.pop()
            for nxt in framework.targets(node):
                state = (nxt, 1 - parity)
                if state not in reached:
                    reached.add(state)
                    frontier.append(state)
        for node, parity in reached:
            result[node][parity].add(root)
    return {a: (frozenset(even), frozenset(odd)) for a, (even, odd) in result.items()}


def _ranking_or_verdict(sem: SemanticsRef, framework: ArgFramework):
    try:
        return cached_ranking(sem, framework), None
    except CyclicFrameworkError as exc:
        return None, _na(f"semantics undefined here: {exc}")
    except NonConvergenceError as exc:
        return None, PropertyVerdict(VerdictStatus.INCONCLUSIVE, detail=str(exc))
    except SizeCapExceededError as exc:
        return None, PropertyVerdict(VerdictStatus.INCONCLUSIVE, detail=str(exc))


def _pairs(names: Iterable[str]):
    ordered = sorted(names)
    for a in ordered:
        for b in ordered:
            if a != b:
                yield a, b


def check(prop: PropertyId, framework: ArgFramework, sem: SemanticsRef,
          seed: int = 0, defense_length: int = 2, attack_length: int = 1,
          abs_trials: int = 5) -> PropertyVerdict:
    """Verdict of one property on one framework under one semantics."""
    if not framework.arguments:
        return _na("empty framework")
    checker = _CHECKERS[prop]
    return checker(framework, sem, seed=seed, defense_length=defense_length,
                   attack_length=attack_length, abs_trials=abs_trials)


def _check_vp(framework, sem, **_):
    unattacked = sorted(framework.unattacked())
    attacked = sorted(framework.arguments - framework.unattacked())
    if not unattacked or not attacked:
        return _na("needs both unattacked and attacked arguments")
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    for a in unattacked:
        for b in attacked:
            if not ranking.strict(a, b):
                return _violated(framework, PropertyId.VP, sem.sid, (a, b),
                                 note=f"unattacked {a} not strictly above attacked {b}")
    return _holds()


def _check_sc(framework, sem, **_):
    selfish = sorted(framework.self_attacking())
    clean = sorted(framework.arguments - framework.self_attacking())
    if not selfish or not clean:
        return _na("needs both self-attacking and non-self-attacking arguments")
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    for a in clean:
        for b in selfish:
            if not ranking.strict(a, b):
                return _violated(framework, PropertyId.SC, sem.sid, (a, b),
                                 note=f"{a} not strictly above self-attacker {b}")
    return _holds()


def _check_cp(framework, sem, **_):
    instances = [(a, b) for a, b in _pairs(framework.arguments)
                 if len(framework.attackers(a)) < len(framework.attackers(b))]
    if not instances:
        return _na("no pair with strictly fewer direct attackers")
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    for a, b in instances:
        if not ranking.strict(a, b):
            return _violated(framework, PropertyId.CP, sem.sid, (a, b),
                             note=f"{a} has fewer attackers than {b} but is not strictly above")
    return _holds()


def _check_qp(framework, sem, **_):
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    applicable = False
    for a, b in _pairs(framework.arguments):
        att_a = framework.attackers(a)
        if not att_a:
            # the dominated side must actually have attackers to dominate;
            # reading the empty case as vacuous would fold VP into QP
            continue
        witnesses = [c for c in framework.attackers(b)
                     if all(ranking.strict(c, d) for d in att_a)]
        if not witnesses:
            continue
        applicable = True
        if not ranking.strict(a, b):
            c = sorted(witnesses)[0]
            return _violated(framework, PropertyId.QP, sem.sid, (a, b),
                             note=f"attacker {c} of {b} beats every attacker of {a}, "
                                  f"yet {a} is not strictly above {b}")
    return _holds() if applicable else _na("no pair with a dominating attacker")


def _check_ct(framework, sem, strict=False, **_):
    prop = PropertyId.SCT if strict else PropertyId.CT
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    compare = group_gt if strict else group_geq
    applicable = False
    for a, b in _pairs(framework.arguments):
        if not compare(framework.attackers(b), framework.attackers(a), ranking):
            continue
        applicable = True
        ok = ranking.strict(a, b) if strict else ranking.geq(a, b)
        if not ok:
            kind = "strict group comparison" if strict else "group comparison"
            return _violated(framework, prop, sem.sid, (a, b),
                             note=f"attackers of {b} win the {kind} against attackers of {a}")
    return _holds() if applicable else _na("group-comparison premise never fires")


def _check_sct(framework, sem, **kw):
    return _check_ct(framework, sem, strict=True, **kw)


def _check_dp(framework, sem, **_):
    table = walk_counts(framework, 2)
    defended = {a for a in framework.arguments if table.count_in(a, 2) > 0}
    instances = [(a, b) for a, b in _pairs(framework.arguments)
                 if len(framework.attackers(a)) == len(framework.attackers(b))
                 and a in defended and b not in defended]
    if not instances:
        return _na("no equal-attack pair splitting on defense")
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    for a, b in instances:
        if not ranking.strict(a, b):
            return _violated(framework, PropertyId.DP, sem.sid, (a, b),
                             note=f"defended {a} not strictly above undefended {b}")
    return _holds()


def _check_ddp(framework, sem, **_):
    table = walk_counts(framework, 2)
    instances = []
    for a, b in _pairs(framework.arguments):
        if len(framework.attackers(a)) != len(framework.attackers(b)):
            continue
        if table.count_in(a, 2) != table.count_in(b, 2):
            continue
        if (defense_is_simple(framework, a) and defense_is_distributed(framework, a)
                and defense_is_simple(framework, b) and not defense_is_distributed(framework, b)):
            instances.append((a, b))
    if not instances:
        return _na("no simple/distributed split with matching counts")
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    for a, b in instances:
        if not ranking.strict(a, b):
            return _violated(framework, PropertyId.DDP, sem.sid, (a, b),
                             note=f"distributed defense of {a} not rewarded over {b}")
    return _holds()


def _check_tot(framework, sem, **_):
    if len(framework.arguments) < 2:
        return _na("needs at least two arguments")
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    for a, b in _pairs(framework.arguments):
        if ranking.incomparable(a, b):
            return _violated(framework, PropertyId.TOT, sem.sid, (a, b),
                             note=f"{a} and {b} are incomparable")
    return _holds()


def _check_nae(framework, sem, **_):
    unattacked = sorted(framework.unattacked())
    if len(unattacked) < 2:
        return _na("fewer than two unattacked arguments")
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    for i, a in enumerate(unattacked):
        for b in unattacked[i + 1:]:
            if not ranking.equivalent(a, b):
                return _violated(framework, PropertyId.NAE, sem.sid, (a, b),
                                 note=f"unattacked {a} and {b} not equivalent")
    return _holds()


def _check_avsfd(framework, sem, **_):
    if has_cycle(framework):
        return _na("premise requires an acyclic framework")
    profiles = branch_profiles(framework)
    table = walk_counts(framework, 2)
    no_attack_branch = [a for a in sorted(framework.arguments) if not profiles[a].attack_lengths]
    lone_target = [b for b in sorted(framework.arguments)
                   if len(framework.attackers(b)) == 1 and table.count_in(b, 2) == 0]
    instances = [(a, b) for a in no_attack_branch for b in lone_target if a != b]
    if not instances:
        return _na("no (fully defended, singly attacked) pair")
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    for a, b in instances:
        if not ranking.strict(a, b):
            return _violated(framework, PropertyId.AVSFD, sem.sid, (a, b),
                             note=f"attack-branch-free {a} not above singly-attacked {b}")
    return _holds()


def _check_in(framework, sem, **_):
    components = connected_components(framework)
    pinned = sem.pinned_to(framework)
    whole, stop = _ranking_or_verdict(pinned, framework)
    if stop:
        return stop
    for comp in components:
        part, stop = _ranking_or_verdict(pinned, comp)
        if stop:
            return stop
        for a, b in _pairs(comp.arguments):
            if part.geq(a, b) and not whole.geq(a, b):
                return _violated(framework, PropertyId.IN, sem.sid, (a, b),
                                 note=f"{a} >= {b} inside its component but not in the whole")
    return _holds()


def _check_abs(framework, sem, seed=0, abs_trials=5, **_):
    ranking, stop = _ranking_or_verdict(sem, framework)
    if stop:
        return stop
    rng = random.Random(seed * 0x9E3779B1 + int(framework_key(framework), 16))
    names = sorted(framework.arguments)
    for _ in range(abs_trials):
        fresh = [f"v{i}" for i in range(len(names))]
        rng.shuffle(fresh)
        gamma = dict(zip(names, fresh))
        renamed = rename(framework, gamma)
        other, stop = _ranking_or_verdict(sem, renamed)
        if stop:
            return stop
        for a, b in _pairs(names):
            if ranking.geq(a, b) != other.geq(gamma[a], gamma[b]):
                return _violated(framework, PropertyId.ABS, sem.sid, (a, b),
                                 note=f"order of ({a},{b}) changed under renaming")
    return _holds()


def _grafted_clone(framework, target, kind, length):
    """F union fresh clone union branch grafted onto the clone's image of target."""
    clone, gamma = clone_fresh(framework)
    merged = disjoint_union(framework, clone)
    return graft_branch(merged, gamma[target], kind, length), gamma


def _check_branch_addition(framework, sem, prop, *, only_attacked, kind, length,
                           improved_is_clone):
    todo = sorted(a for a in framework.arguments
                  if not only_attacked or framework.is_attacked(a))
    if not todo:
        return _na("no argument satisfies the premise")
    for a in todo:
        star, gamma = _grafted_clone(framework, a, kind, length)
        ranking, stop = _ranking_or_verdict(sem, star)
        if stop:
            return stop
        better, worse = (gamma[a], a) if improved_is_clone else (a, gamma[a])
        if not ranking.strict(better, worse):
            return _violated(framework, prop, sem.sid, (better, worse), constructed=star,
                             note=f"grafting a {kind} branch onto the copy of {a} "
                                  f"does not leave {better} strictly above {worse}")
    return _holds()


def _check_plus_db_strict(framework, sem, defense_length=2, **_):
    return _check_branch_addition(framework, sem, PropertyId.PLUS_DB_STRICT,
                                  only_attacked=False, kind="defense",
                                  length=defense_length, improved_is_clone=True)


def _check_plus_db(framework, sem, defense_length=2, **_):
    return _check_branch_addition(framework, sem, PropertyId.PLUS_DB,
                                  only_attacked=True, kind="defense",
                                  length=defense_length, improved_is_clone=True)


def _check_plus_ab(framework, sem, attack_length=1, **_):
    return _check_branch_addition(framework, sem, PropertyId.PLUS_AB,
                                  only_attacked=False, kind="attack",
                                  length=attack_length, improved_is_clone=False)


def _check_branch_increase(framework, sem, prop, defense_length):
    roots = branch_roots(framework)
    lengthen_attack = prop is PropertyId.INC_AB
    instances = []
    for a in sorted(framework.arguments):
        def_roots, att_roots = roots[a]
        pool = (att_roots - def_roots) if lengthen_attack else (def_roots - att_roots)
        instances.extend((a, b) for b in sorted(pool))
    if not instances:
        return _na("no argument has a pure attack/defense root")
    star_cache: dict[str, tuple[ArgFramework, dict[str, str]]] = {}
    for a, b in instances:
        if b not in star_cache:
            star_cache[b] = _grafted_clone(framework, b, "defense", defense_length)
        star, gamma = star_cache[b]
        ranking, stop = _ranking_or_verdict(sem, star)
        if stop:
            return stop
        better, worse = (gamma[a], a) if lengthen_attack else (a, gamma[a])
        if not ranking.strict(better, worse):
            return _violated(framework, prop, sem.sid, (better, worse), constructed=star,
                             note=f"lengthening the branch rooted at {b} does not leave "
                                  f"{better} strictly above {worse}")
    return _holds()


def _check_inc_ab(framework, sem, defense_length=2, **_):
    return _check_branch_increase(framework, sem, PropertyId.INC_AB, defense_length)


def _check_inc_db(framework, sem, defense_length=2, **_):
    return _check_branch_increase(framework, sem, PropertyId.INC_DB, defense_length)


_CHECKERS = {
    PropertyId.ABS: _check_abs,
    PropertyId.IN: _check_in,
    PropertyId.VP: _check_vp,
    PropertyId.DP: _check_dp,
    PropertyId.CT: _check_ct,
    PropertyId.SCT: _check_sct,
    PropertyId.CP: _check_cp,
    PropertyId.QP: _check_qp,
    PropertyId.DDP: _check_ddp,
    PropertyId.SC: _check_sc,
    PropertyId.PLUS_DB_STRICT: _check_plus_db_strict,
    PropertyId.PLUS_DB: _check_plus_db,
    PropertyId.INC_AB: _check_inc_ab,
    PropertyId.INC_DB: _check_inc_db,
    PropertyId.PLUS_AB: _check_plus_ab,
    PropertyId.TOT: _check_tot,
    PropertyId.NAE: _check_nae,
    PropertyId.AVSFD: _check_avsfd,
}

#: Instance-level consequences of the property interdependencies: if every
#: antecedent holds on an instance, the consequent may not be violated there.
#: These four are instance-level theorems (provable from the group-comparison
#: definitions alone), so a hit is a checker bug.
DEPENDENCY_RULES: tuple[tuple[tuple[PropertyId, ...], PropertyId], ...] = (
    ((PropertyId.SCT,), PropertyId.VP),
    ((PropertyId.CT, PropertyId.SCT), PropertyId.DP),
    ((PropertyId.CT,), PropertyId.NAE),
    ((PropertyId.PLUS_DB_STRICT,), PropertyId.PLUS_DB),
)

#: The strict-to-weak counter-transitivity implication holds between whole
#: semantics but NOT instance-by-instance: identical attacker sets fire the
#: weak premise through the identity matching with no strict edge available,
#: and a non-local semantics may still rank the two targets apart.  Kept
#: separate so reports can check it without treating hits as checker bugs.
EXTENDED_DEPENDENCY_RULES = DEPENDENCY_RULES + (
    ((PropertyId.SCT,), PropertyId.CT),
)


def audit_dependencies(verdicts: dict[PropertyId, PropertyVerdict],
                       rules=DEPENDENCY_RULES) -> list[str]:
    """Violations of the dependency rules within one instance's verdict set."""
    problems = []
    for antecedents, consequent in rules:
        if all(verdicts.get(p) and verdicts[p].status is VerdictStatus.HOLDS for p in antecedents):
            cons = verdicts.get(consequent)
            if cons is not None and cons.status is VerdictStatus.VIOLATED:
                names = " & ".join(p.value for p in antecedents)
                problems.append(f"{names} hold but {consequent.value} is violated")
    return problems


def verdict_record(prop: PropertyId, sem: SemanticsRef, framework: ArgFramework,
                   verdict: PropertyVerdict) -> dict:
    """Serializable report record for one check."""
    from .framework import serialize_apx

    record = {
        "property": prop.value,
        "semantics": sem.sid,
        "framework": framework_key(framework),
        "status": verdict.status.value,
        "details": verdict.detail,
    }
    if verdict.witness is not None:
        target = verdict.witness.constructed or verdict.witness.framework
        record["witness_apx"] = serialize_apx(target)
        record["witness_pair"] = list(verdict.witness.pair)
    return record


# --- incompatible property pairs ----------------------------------------

@dataclass(frozen=True)
class Demand:
    prop: PropertyId
    winner: str
    loser: str
    because: str


@dataclass(frozen=True)
class IncompatibilityWitness:
    """A framework on which two properties force opposite strict conclusions."""

    pair: tuple[PropertyId, PropertyId]
    framework: ArgFramework
    demands: tuple[Demand, Demand]
    base: ArgFramework | None = None
    note: str = ""


INCOMPATIBLE_PAIRS = (
    frozenset({PropertyId.CP, PropertyId.QP}),
    frozenset({PropertyId.CP, PropertyId.AVSFD}),
    frozenset({PropertyId.CP, PropertyId.PLUS_DB}),
    frozenset({PropertyId.VP, PropertyId.PLUS_DB_STRICT}),
)


def _cp_demand(framework, winner, loser):
    return Demand(PropertyId.CP, winner, loser,
                  f"|attackers({winner})| = {len(framework.attackers(winner))} < "
                  f"{len(framework.attackers(loser))} = |attackers({loser})|")


def _search_cp_qp() -> tuple[ArgFramework, Demand, Demand]:
    from .fuzz import enumerate_all

    for n in (3, 4):
        for candidate in enumerate_all(n, allow_self_attacks=True):
            for a in sorted(candidate.arguments):
                for b in sorted(candidate.arguments):
                    if a == b:
                        continue
                    if not len(candidate.attackers(a)) < len(candidate.attackers(b)):
                        continue
                    att_b = candidate.attackers(b)
                    for c in sorted(candidate.attackers(a)):
                        if all(len(candidate.attackers(c)) < len(candidate.attackers(d))
                               for d in att_b):
                            cp = _cp_demand(candidate, a, b)
                            qp = Demand(
                                PropertyId.QP, b, a,
                                f"{c} attacks {a} and CP forces {c} above every "
                                f"attacker of {b} (strictly fewer attackers each)")
                            return candidate, cp, qp
    raise AssertionError("no small count-vs-quality clash found")


def incompatibility_witness(pair: Iterable[PropertyId]) -> IncompatibilityWitness:
    """Concrete framework plus the two opposite conclusions the pair forces."""
    from .catalog import figure2

    key = frozenset(pair)
    if key not in INCOMPATIBLE_PAIRS:
        known = sorted(tuple(sorted(p.value for p in s)) for s in INCOMPATIBLE_PAIRS)
        raise ValueError(f"{sorted(p.value for p in key)} is not a known clash; known: {known}")

    if key == frozenset({PropertyId.CP, PropertyId.QP}):
        framework, cp, qp = _search_cp_qp()
        return IncompatibilityWitness((PropertyId.CP, PropertyId.QP), framework, (cp, qp),
                                      note="count precedence and derived quality dominance pull apart")

    if key == frozenset({PropertyId.CP, PropertyId.AVSFD}):
        framework = figure2()
        cp = _cp_demand(framework, "b", "a")
        av = Demand(PropertyId.AVSFD, "a", "b",
                    "a has no attack branch while b is attacked once by an unattacked "
                    "argument and has no defender")
        return IncompatibilityWitness((PropertyId.CP, PropertyId.AVSFD), framework, (cp, av))

    if key == frozenset({PropertyId.CP, PropertyId.PLUS_DB}):
        base = ArgFramework.make("ax", [("x", "a")])
        star, gamma = _grafted_clone(base, "a", "defense", 2)
        cp = _cp_demand(star, "a", gamma["a"])
        db = Demand(PropertyId.PLUS_DB, gamma["a"], "a",
                    "the grafted defense branch must strictly improve the attacked copy")
        return IncompatibilityWitness((PropertyId.CP, PropertyId.PLUS_DB), star, (cp, db),
                                      base=base)

    base = ArgFramework.make("a")
    star, gamma = _grafted_clone(base, "a", "defense", 2)
    vp = Demand(PropertyId.VP, "a", gamma["a"],
                f"a is unattacked and {gamma['a']} is attacked by the grafted branch")
    db = Demand(PropertyId.PLUS_DB_STRICT, gamma["a"], "a",
                "the grafted defense branch must strictly improve the copy")
    return IncompatibilityWitness((PropertyId.VP, PropertyId.PLUS_DB_STRICT), star, (vp, db),
                                  base=base)


def replay_incompatibility(witness: IncompatibilityWitness) -> bool:
    """Re-verify the structural premises behind both demands.

    The two demands must target the same argument pair in opposite
    directions, and each premise must hold in the witness framework.
    """
    first, second = witness.demands
    if {first.winner, first.loser} != {second.winner, second.loser}:
        return False
    if first.winner == second.winner:
        return False
    framework = witness.framework
    for demand in witness.demands:
        if demand.prop is PropertyId.CP:
            if not len(framework.attackers(demand.winner)) < len(framework.attackers(demand.loser)):
                return False
        elif demand.prop is PropertyId.VP:
            if framework.is_attacked(demand.winner) or not framework.is_attacked(demand.loser):
                return False
        elif demand.prop is PropertyId.AVSFD:
            if has_cycle(framework):
                return False
            profiles = branch_profiles(framework)
            defenders = walk_counts(framework, 2)
            if profiles[demand.winner].attack_lengths:
                return False
            if len(framework.attackers(demand.loser)) != 1 or defenders.count_in(demand.loser, 2):
                return False
        elif demand.prop in (PropertyId.PLUS_DB, PropertyId.PLUS_DB_STRICT):
            if witness.base is None:
                return False
            star, gamma = _grafted_clone(witness.base, demand.loser, "defense", 2)
            if star != framework or gamma[demand.loser] != demand.winner:
                return False
            if demand.prop is PropertyId.PLUS_DB and not witness.base.is_attacked(demand.loser):
                return False
        elif demand.prop is PropertyId.QP:
            # QP(A, B): some attacker of B dominates every attacker of A, so
            # A wins.  Here A = demand.winner, B = demand.loser; dominance is
            # the one CP forces (strictly fewer attackers).
            candidates = framework.attackers(demand.loser)
            to_beat = framework.attackers(demand.winner)
            ok = any(
                all(len(framework.attackers(c)) < len(framework.attackers(d)) for d in to_beat)
                for c in candidates
            )
            if not ok:
                return False
        else:
            return False
    return True
