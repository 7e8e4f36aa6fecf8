"""Command-line front door: rank, survey, check, fuzz, witness.

Exit codes: 0 success (check: Holds/NotApplicable), 1 check found a
violation or a witness failed to replay, 2 input/parse error, 3 semantics
error (cycle, size cap, non-convergence) or Inconclusive verdict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from .axioms import VerdictStatus, check, parse_property
from .framework import ApxError, ArgFramework, CyclicFrameworkError, parse_apx, serialize_apx
from .fuzz import (
    FuzzBudget,
    matrix_records,
    render_matrix_text,
    run_default_matrix,
    witness_record,
)
from .orders import Ranking
from .semantics import (
    SEMANTICS_IDS,
    NonConvergenceError,
    SemanticsRef,
    SizeCapExceededError,
    SolverConfig,
)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_PARSE = 2
EXIT_SEMANTICS = 3


def _env_seed() -> int:
    try:
        return int(os.environ.get("RANKARG_SEED", "0"))
    except ValueError:
        return 0


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--epsilon", type=float, default=0.1,
                        help="attenuation for the social-product scores (default 0.1)")
    parser.add_argument("--tol", type=float, default=1e-12,
                        help="fixed-point stopping tolerance")
    parser.add_argument("--max-iter", type=int, default=10_000)
    parser.add_argument("--lex-depth", type=int, default=None,
                        help="step-vector truncation depth (default 2*|A|+2)")
    parser.add_argument("--mt-cap", type=int, default=14,
                        help="largest argument count the game semantics accepts")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomised checks (default: RANKARG_SEED or 0)")


def _config(args) -> SolverConfig:
    return SolverConfig(epsilon=args.epsilon, tol=args.tol, max_iter=args.max_iter,
                        lex_depth=args.lex_depth, mt_cap=args.mt_cap)


def _seed(args) -> int:
    return args.seed if args.seed is not None else _env_seed()


def _load(path: str) -> ArgFramework:
    try:
        return parse_apx(Path(path).read_text())
    except OSError as exc:
        raise ApxError(f"cannot read {path}: {exc.strerror}")


def ranking_text(ranking: Ranking) -> str:
    """`x > y = z` chains; a partial order prints chain lines plus `x ? y` pairs."""
    classes = ranking.equivalence_classes()
    fmt = lambda cls: " = ".join(sorted(cls))
    if ranking.is_total():
        return " > ".join(fmt(c) for c in classes)
    lines = []
    remaining = list(classes)
    while remaining:
        chain = [remaining.pop(0)]
        for cls in remaining[:]:
            if ranking.strict(min(chain[-1]), min(cls)):
                chain.append(cls)
                remaining.remove(cls)
        lines.append(" > ".join(fmt(c) for c in chain))
    for a, b in ranking.incomparable_pairs():
        lines.append(f"{a} ? {b}")
    return "\n".join(lines)


def output_record(sid: str, cfg: SolverConfig, framework: ArgFramework) -> dict:
    ref = SemanticsRef(sid, cfg)
    ranking = ref.ranking(framework)
    scores = ref.scores(framework)
    return {
        "semantics": sid,
        "config": {"epsilon": cfg.epsilon, "tol": cfg.tol, "max_iter": cfg.max_iter,
                   "lex_depth": cfg.lex_depth, "mt_cap": cfg.mt_cap},
        "scores": {k: scores[k] for k in sorted(scores)} if scores is not None else None,
        "classes": [sorted(c) for c in ranking.equivalence_classes()],
        "incomparable": [list(p) for p in ranking.incomparable_pairs()],
    }


def cmd_rank(args) -> int:
    framework = _load(args.input)
    if args.semantics not in SEMANTICS_IDS:
        raise ApxError(f"unknown semantics {args.semantics!r}; pick one of {SEMANTICS_IDS}")
    cfg = _config(args)
    record = output_record(args.semantics, cfg, framework)
    if args.format == "json":
        print(json.dumps(record, indent=2))
    else:
        ref = SemanticsRef(args.semantics, cfg)
        print(ranking_text(ref.ranking(framework)))
    return EXIT_OK


def cmd_survey(args) -> int:
    framework = _load(args.input)
    cfg = _config(args)
    width = max(len(s) for s in SEMANTICS_IDS) + 2
    for sid in SEMANTICS_IDS:
        try:
            ref = SemanticsRef(sid, cfg)
            text = ranking_text(ref.ranking(framework)).replace("\n", " ; ")
        except (CyclicFrameworkError, SizeCapExceededError, NonConvergenceError) as exc:
            text = f"not applicable: {exc}"
        print(f"{sid.ljust(width)}{text}")
    return EXIT_OK


def cmd_check(args) -> int:
    framework = _load(args.input)
    prop = parse_property(args.property)
    if args.semantics not in SEMANTICS_IDS:
        raise ApxError(f"unknown semantics {args.semantics!r}")
    verdict = check(prop, framework, SemanticsRef(args.semantics, _config(args)),
                    seed=_seed(args))
    print(f"{prop.value} under {args.semantics}: {verdict.status.value}"
          + (f" ({verdict.detail})" if verdict.detail else ""))
    if verdict.status is VerdictStatus.VIOLATED:
        witness = verdict.witness
        print(f"witness pair: {witness.pair[0]} should be above {witness.pair[1]}")
        target = witness.constructed if witness.constructed is not None else witness.framework
        print(serialize_apx(target), end="")
        return EXIT_VIOLATED
    if verdict.status is VerdictStatus.INCONCLUSIVE:
        return EXIT_SEMANTICS
    return EXIT_OK


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name)
    with os.fdopen(fd, "w") as handle:
        handle.write(text)
    os.replace(tmp, path)


def cmd_fuzz(args) -> int:
    budget = FuzzBudget(seed=_seed(args), random_trials=args.trials,
                        mt_random_trials=args.mt_trials)
    semantics = args.semantics.split(",") if args.semantics else list(SEMANTICS_IDS)
    properties = ([parse_property(p) for p in args.properties.split(",")]
                  if args.properties else None)
    kwargs = {"semantics": semantics}
    if properties:
        kwargs["properties"] = properties
    report = run_default_matrix(budget, **kwargs)
    text = render_matrix_text(report)
    print(text, end="")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _atomic_write(out / "matrix.txt", text)
        records = list(matrix_records(report))
        _atomic_write(out / "records.jsonl",
                      "".join(json.dumps(r) + "\n" for r in records))
        witness_dir = out / "witnesses"
        witness_dir.mkdir(exist_ok=True)
        for record in records:
            if "witness_apx" not in record:
                continue
            stem = f"{record['semantics']}_{record['property']}".replace("!", "s")
            stem = stem.replace("^", "inc_").replace("+", "plus_")
            _atomic_write(witness_dir / f"{stem}.apx", record["witness_apx"])
            _atomic_write(witness_dir / f"{stem}.json", witness_record(record))
        print(f"wrote {out}/matrix.txt, records.jsonl and {sum(1 for r in records if 'witness_apx' in r)} witnesses")
    return EXIT_OK


def cmd_witness(args) -> int:
    try:
        payload = json.loads(Path(args.input).read_text())
        prop = parse_property(payload["property"])
        sid = payload["semantics"]
        framework = parse_apx(payload["apx"])
        cfg_data = payload.get("config", {})
    except (OSError, KeyError, ValueError) as exc:
        raise ApxError(f"bad witness file: {exc}")
    cfg = SolverConfig(
        epsilon=cfg_data.get("epsilon", 0.1), tol=cfg_data.get("tol", 1e-12),
        max_iter=cfg_data.get("max_iter", 10_000), lex_depth=cfg_data.get("lex_depth"),
        mt_cap=cfg_data.get("mt_cap", 14),
    )
    verdict = check(prop, framework, SemanticsRef(sid, cfg), seed=_seed(args))
    if verdict.status is VerdictStatus.VIOLATED:
        print(f"confirmed: {prop.value} still violated under {sid} "
              f"(pair {verdict.witness.pair[0]} over {verdict.witness.pair[1]})")
        return EXIT_OK
    print(f"NOT reproduced: verdict is {verdict.status.value}")
    return EXIT_VIOLATED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankarg",
        description="Rank arguments of an attack graph under seven acceptability "
                    "semantics and probe the classical axioms against them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="ranking of one framework under one semantics")
    p.add_argument("input", help="apx file")
    p.add_argument("semantics", choices=SEMANTICS_IDS)
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_config_flags(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("survey", help="rankings under every applicable semantics")
    p.add_argument("input")
    _add_config_flags(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("check", help="verdict of one axiom on one framework")
    p.add_argument("input")
    p.add_argument("property", help="Abs In VP DP CT SCT CP QP DDP SC +DB! +DB ^AB ^DB +AB Tot NaE AvsFD")
    p.add_argument("semantics", choices=SEMANTICS_IDS)
    _add_config_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fuzz", help="satisfaction matrix over the default corpora")
    p.add_argument("--out", help="directory for matrix.txt, records.jsonl, witnesses/")
    p.add_argument("--trials", type=int, default=2000,
                   help="random frameworks per cheap-semantics corpus")
    p.add_argument("--mt-trials", type=int, default=150)
    p.add_argument("--semantics", help="comma-separated subset of " + ",".join(SEMANTICS_IDS))
    p.add_argument("--properties", help="comma-separated property subset")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("witness", help="re-verify a saved witness record")
    p.add_argument("input", help="witness .json file written by fuzz")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CyclicFrameworkError, SizeCapExceededError, NonConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTICS
    except ValueError as exc:  # apx syntax, unknown property or semantics
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
