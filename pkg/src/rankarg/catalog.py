"""Named frameworks: the two bundled running examples plus a library of
small instances that discriminate the semantics on particular properties.

The curated list feeds the default fuzz corpus.  Random graphs alone take a
long time to stumble on some of these shapes (several need 7-8 arguments
wired just so), and a satisfaction matrix is only informative when every
refutable cell actually gets refuted.
"""

from __future__ import annotations

from .framework import ArgFramework


def example1() -> ArgFramework:
    """Five-argument running example: a 3-cycle a->e->d->a fed by b and c."""
    return ArgFramework.make(
        "abcde",
        [("a", "e"), ("b", "a"), ("b", "c"), ("c", "e"), ("d", "a"), ("e", "d")],
    )


def figure2() -> ArgFramework:
    """Four short defense chains into a, one unattacked attacker into b."""
    attacks = [("b1", "b")]
    for i in (1, 3, 5, 7):
        attacks += [(f"a{i + 1}", f"a{i}"), (f"a{i}", "a")]
    return ArgFramework.make(
        ["a", "b", "b1"] + [f"a{i}" for i in range(1, 9)],
        attacks,
    )


def chain(n: int) -> ArgFramework:
    """x{n-1} -> ... -> x1 -> x0."""
    names = [f"x{i}" for i in range(n)]
    return ArgFramework.make(names, [(names[i + 1], names[i]) for i in range(n - 1)])


def two_cycle() -> ArgFramework:
    return ArgFramework.make("ab", [("a", "b"), ("b", "a")])


# --- instances that refute specific (semantics, property) cells ---------

def seed_quality_flip() -> ArgFramework:
    """One strong unattacked attacker vs two jointly heavy weak ones.

    Under cat/saf the quality premise (r1 beats both x's) holds while the
    doubly-attacked a sinks to or below b, refuting quality precedence.
    """
    return ArgFramework.make(
        ["a", "b", "x1", "x2", "w1", "r1", "r2"],
        [("r1", "w1"), ("r2", "w1"), ("w1", "x1"), ("w1", "x2"),
         ("x1", "a"), ("x2", "a"), ("r1", "b")],
    )


def seed_count_quality_tie() -> ArgFramework:
    """Cat ties a (two half-strength attackers) with b (one full-strength one)."""
    return ArgFramework.make(
        ["a", "b", "x1", "x2", "r1", "r2", "y"],
        [("x1", "a"), ("x2", "a"), ("r1", "x1"), ("r2", "x2"), ("y", "b")],
    )


def seed_dbs_quality() -> ArgFramework:
    """Quality premise via an unattacked attacker; counting semantics favour b."""
    return ArgFramework.make(
        ["a", "b", "x1", "x2", "y", "r"],
        [("y", "b"), ("x1", "a"), ("x2", "a"), ("r", "x1"), ("r", "x2")],
    )


def seed_distributed_defense() -> ArgFramework:
    """a's defense one-on-one, b's defense doubled onto one attacker.

    Burden numbers split the pair (a above b); discussion counts tie it, so
    the same instance exercises the distributed-defense cell both ways.
    """
    return ArgFramework.make(
        ["a", "x1", "x2", "u1", "u2", "b", "y1"],
        [("x1", "a"), ("x2", "a"), ("u1", "x1"), ("u2", "x2"),
         ("y1", "b"), ("u1", "b"), ("u1", "y1"), ("u2", "y1")],
    )


def seed_value_distributed_defense() -> ArgFramework:
    """Distributed-defense premise where cat/saf rank b above a."""
    return ArgFramework.make(
        ["a", "x1", "x2", "u1", "u2", "s1", "s2", "b"],
        [("s1", "u1"), ("s2", "u1"), ("s1", "u2"), ("s2", "u2"),
         ("u1", "x1"), ("u2", "x2"), ("x1", "a"), ("x2", "a"),
         ("u2", "b"), ("s1", "b")],
    )


def seed_grounded_distributed_defense() -> ArgFramework:
    """Distributed-defense premise with both arguments rejected/undecided."""
    return ArgFramework.make(
        ["a", "x1", "x2", "u", "z", "b", "y1"],
        [("x1", "x1"), ("x1", "a"), ("x2", "a"), ("u", "x2"), ("z", "a"),
         ("y1", "b"), ("z", "b"), ("u", "b"), ("x1", "y1"), ("u", "y1")],
    )


def seed_grounded_defense() -> ArgFramework:
    """Defended a and undefended b both end up rejected."""
    return ArgFramework.make(
        ["a", "x", "z", "w", "b", "y"],
        [("x", "a"), ("z", "x"), ("w", "z"), ("y", "b")],
    )


def seed_grounded_count() -> ArgFramework:
    """Fewer attackers does not help once both are rejected/undecided."""
    return ArgFramework.make("abx", [("x", "a"), ("x", "b"), ("b", "b")])


def seed_self_attack_tail() -> ArgFramework:
    """Self-attacker s vs an argument crushed by two unattacked attackers."""
    return ArgFramework.make(
        ["s", "u", "r1", "r2"],
        [("s", "s"), ("r1", "u"), ("r2", "u")],
    )


def seed_tuples_group() -> ArgFramework:
    """Shared root attacks both; the extra defended attacker flips b below a."""
    return ArgFramework.make(
        ["a", "b", "x1", "y2", "rp"],
        [("x1", "a"), ("x1", "b"), ("y2", "b"), ("rp", "y2")],
    )


def seed_tuples_defense() -> ArgFramework:
    """Defended argument whose branches are all attacks, vs a one-root attack."""
    return ArgFramework.make(
        ["a", "x", "w1", "w2", "r", "y", "b"],
        [("x", "a"), ("w1", "x"), ("w2", "x"), ("r", "w1"), ("r", "w2"), ("y", "b")],
    )


def seed_tuples_count() -> ArgFramework:
    """One attack branch vs two defense branches: the count rule favours b."""
    return ArgFramework.make(
        ["x", "a", "y1", "y2", "b"],
        [("x", "a"), ("y1", "b"), ("y2", "b"), ("x", "y1"), ("x", "y2")],
    )


def seed_tuples_quality() -> ArgFramework:
    """Root attacker on b, two long attack branches on a."""
    return ArgFramework.make(
        ["c", "b", "x1", "x2", "w1", "w2", "a"],
        [("c", "b"), ("x1", "a"), ("x2", "a"), ("w1", "x1"), ("w2", "x2"),
         ("c", "w1"), ("c", "w2")],
    )


def seed_tuples_incomparable() -> ArgFramework:
    """Strictly more attack branches and more defense branches than b."""
    return ArgFramework.make(
        ["a", "x1", "x2", "r1", "r2", "b", "y"],
        [("x1", "a"), ("x2", "a"), ("r1", "x2"), ("r2", "x2"),
         ("y", "b"), ("x1", "y")],
    )


def seed_mt_attack_branch() -> ArgFramework:
    """Mutual pair fed by a chain; lengthening the chain leaves the game tied.

    Found by exhaustive scan over canonical 4-argument digraphs.
    """
    return ArgFramework.make(
        ["a", "b", "c", "d"],
        [("a", "d"), ("b", "c"), ("c", "a"), ("d", "a")],
    )


def seed_mt_distributed_defense() -> ArgFramework:
    """Distributed defense scores 1/6 while the concentrated side holds 1/4.

    Two components: a attacks its own defenders, so the opponent forces the
    pessimistic value; b's doubled defense still caps the opponent at 1/4.
    Found by scanning the two component families independently.
    """
    return ArgFramework.make(
        ["a", "x1", "x2", "u1", "u2", "b", "y1", "y2", "w2"],
        [("x1", "a"), ("x2", "a"), ("u1", "x1"), ("u2", "x2"),
         ("a", "u1"), ("a", "u2"),
         ("y1", "b"), ("y2", "b"), ("y2", "y1"), ("w2", "y1")],
    )


def seed_saf_full_defense() -> ArgFramework:
    """Twenty even-length branches drag a below the singly-attacked b.

    The attenuated product semantics only refutes attack-vs-full-defense at
    this scale; smaller versions keep a comfortably above b.
    """
    names = ["a", "x1", "x2", "w", "v", "t", "b", "b1"] + [f"s{i}" for i in range(20)]
    attacks = [("x1", "a"), ("x2", "a"), ("w", "x1"), ("w", "x2"), ("b1", "b")]
    for i in range(20):
        attacks += [(f"s{i}", "w"), ("t", f"s{i}")]
    return ArgFramework.make(names, attacks)


def bundled() -> dict[str, ArgFramework]:
    """All named frameworks keyed by a stable name."""
    return {
        "example1": example1(),
        "figure2": figure2(),
        "chain3": chain(3),
        "two_cycle": two_cycle(),
        "quality_flip": seed_quality_flip(),
        "count_quality_tie": seed_count_quality_tie(),
        "dbs_quality": seed_dbs_quality(),
        "distributed_defense": seed_distributed_defense(),
        "value_distributed_defense": seed_value_distributed_defense(),
        "grounded_distributed_defense": seed_grounded_distributed_defense(),
        "grounded_defense": seed_grounded_defense(),
        "grounded_count": seed_grounded_count(),
        "self_attack_tail": seed_self_attack_tail(),
        "tuples_group": seed_tuples_group(),
        "tuples_defense": seed_tuples_defense(),
        "tuples_count": seed_tuples_count(),
        "tuples_quality": seed_tuples_quality(),
        "tuples_incomparable": seed_tuples_incomparable(),
        "mt_attack_branch": seed_mt_attack_branch(),
        "mt_distributed_defense": seed_mt_distributed_defense(),
        "saf_full_defense": seed_saf_full_defense(),
    }
