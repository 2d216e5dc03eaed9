"""Command-line surface: extract -> rank -> synth/aggregate -> audit -> restrict.

Reports are JSON with the fully resolved configuration and a timestamp
embedded; the timestamp is the only field exempt from byte-for-byte
reproducibility. Impossibility manifestations (cycles, failed axioms)
are findings, so runs that surface them still exit 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from .errors import BudgetExceeded, FoldvoteError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

RULE_NAMES = ("may", "borda", "kemeny", "dictator", "utilitarian")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this CLI reserves 2 for input
    # errors, so remap to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _emit(report: dict, out: str) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _read_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _load_profile(path: str):
    from .profiles import Profile

    obj = _read_json(path)
    if "profile" in obj and "individuals" not in obj:
        obj = obj["profile"]  # accept wrapped reports from synth
    return Profile.from_json_dict(obj)


def _build_rule_fn(args):
    from . import rules

    if args.rule == "dictator":
        return lambda p: rules.dictator(p, args.dictator_k)
    return getattr(rules, "may_rule" if args.rule == "may" else args.rule)


# --------------------------------------------------------------------------
# subcommands


def _cmd_extract(args) -> int:
    from .contacts import (
        ContactConfig,
        Scorer,
        extract_instances,
        instances_to_csv,
        load_score_table,
    )
    from .pdb import parse_pdb

    paths: list[Path] = []
    for raw in args.inputs:
        p = Path(raw)
        if p.is_dir():
            paths.extend(sorted(p.glob("*.pdb")))
        else:
            paths.append(p)
    if not paths:
        print("no inputs", file=sys.stderr)
        return EXIT_INPUT

    config = ContactConfig(
        threshold_tau=args.tau,
        mode=args.mode,
        min_seq_separation=args.min_seq_separation,
        cross_chain=args.cross_chain,
    )
    if args.table is not None:
        scorer = load_score_table(args.table, negate=not args.no_negate)
    else:
        scorer = Scorer("unit_count")

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    resolved = {
        "command": "extract",
        "inputs": [str(p) for p in paths],
        "out_dir": str(out_dir),
        "threshold_tau": args.tau,
        "mode": args.mode,
        "min_seq_separation": args.min_seq_separation,
        "cross_chain": args.cross_chain,
        "scorer": "table" if args.table else "unit_count",
        "table": args.table,
        "negate": (not args.no_negate) if args.table else None,
    }

    proteins, failures = [], []
    for p in paths:
        try:
            structure = parse_pdb(p.read_text(), p.stem)
            instances = extract_instances(structure, config, scorer)
        except (FoldvoteError, OSError, ValueError) as exc:
            failures.append({"path": str(p), "error": f"{type(exc).__name__}: {exc}"})
            print(f"failed: {p}: {exc}", file=sys.stderr)
            continue
        csv_path = out_dir / f"{p.stem}.contacts.csv"
        csv_path.write_text(instances_to_csv(instances))
        proteins.append(
            {
                "id": structure.id,
                "path": str(p),
                "residues": structure.n_residues,
                "instances": len(instances),
                "csv": str(csv_path),
            }
        )
        print(f"{structure.id}\t{structure.n_residues}\t{len(instances)}")

    summary = {
        "config": resolved,
        "timestamp": _timestamp(),
        "proteins": proteins,
        "failures": failures,
    }
    (out_dir / args.summary_name).write_text(json.dumps(summary, indent=2) + "\n")
    return EXIT_INPUT if not proteins else EXIT_OK


def _cmd_rank(args) -> int:
    from .contacts import class_universe, instances_from_csv
    from .preferences import ordinal_from_utility, utility_from_instances

    with open(args.contacts) as fh:
        instances = instances_from_csv(fh.read())
    universe = class_universe(args.universe == "full")
    utility = utility_from_instances(
        instances, universe, combine=args.combine, protein_id=args.protein_id
    )
    ranking = ordinal_from_utility(utility, tie_epsilon=args.tie_epsilon)
    report = {
        "config": {
            "command": "rank",
            "contacts": args.contacts,
            "combine": args.combine,
            "tie_epsilon": args.tie_epsilon,
            "universe": args.universe,
            "protein_id": utility.protein_id,
        },
        "timestamp": _timestamp(),
        "utility": utility.to_json_dict(),
        "ranking": ranking.to_json_dict(),
    }
    _emit(report, args.out)
    return EXIT_OK


def _cmd_synth(args) -> int:
    from .profiles import SynthSpec, generate

    kind = "condorcet_cycle" if args.kind == "condorcet" else args.kind
    spec = SynthSpec(kind=kind, m=args.m, n=args.n, seed=args.seed)
    profile = generate(spec)
    report = {
        "config": {
            "command": "synth",
            "kind": kind,
            "m": args.m,
            "n": args.n,
            "seed": args.seed,
        },
        "timestamp": _timestamp(),
        "profile": profile.to_json_dict(),
    }
    _emit(report, args.out)
    return EXIT_OK


def _cmd_aggregate(args) -> int:
    profile = _load_profile(args.profile)
    outcome = _build_rule_fn(args)(profile)
    report = {
        "config": {
            "command": "aggregate",
            "profile": args.profile,
            "rule": args.rule,
            "dictator_k": args.dictator_k if args.rule == "dictator" else None,
        },
        "timestamp": _timestamp(),
        "outcome": outcome.to_json_dict(),
    }
    _emit(report, args.out)
    return EXIT_OK


_AXIOM_ALIASES = ("arrow", "may_coincidence", "continuity")


def _cmd_audit(args, parser: _Parser) -> int:
    from .audit import (
        ARROW_AXIOMS,
        AxiomId,
        audit as run_audit,
        exhaustive,
        may_coincidence_check,
        sampled,
        standard_rules,
    )

    tokens = [t.strip() for t in args.axioms.split(",") if t.strip()]
    if not tokens:
        parser.error("no axioms given")
    known = {a.value for a in AxiomId}
    for t in tokens:
        if t not in known and t not in _AXIOM_ALIASES:
            parser.error(
                f"unknown axiom {t!r}; known: "
                + ", ".join(sorted(known | set(_AXIOM_ALIASES)))
            )
    if args.rule == "mean-direction" and any(t != "continuity" for t in tokens):
        parser.error("rule mean-direction supports only the continuity axiom")
    if args.rule != "mean-direction" and "continuity" in tokens:
        parser.error("the continuity axiom applies to rule mean-direction")

    resolved = {
        "command": "audit",
        "rule": args.rule,
        "axioms": tokens,
        "m": args.m,
        "n": args.n,
        "mode": args.mode,
        "trials": args.trials,
        "seed": args.seed,
        "dictator_k": args.dictator_k if args.rule == "dictator" else None,
        "epsilon": args.epsilon if args.rule == "mean-direction" else None,
    }

    if args.rule == "mean-direction":
        from .directions import continuity_probe

        witness = continuity_probe(args.m, args.epsilon, args.seed)
        results = [
            {
                "rule_name": "mean-direction",
                "axiom": "continuity",
                "verdict": "fail",
                "witness": witness.to_json_dict(),
                "search_budget": (
                    f"constructive probe dimension={args.m} "
                    f"epsilon={args.epsilon} seed={args.seed}"
                ),
                "seed": args.seed,
                "notes": "witness verified by re-running the aggregator",
            }
        ]
        _emit(
            {"config": resolved, "timestamp": _timestamp(), "results": results},
            args.out,
        )
        return EXIT_OK

    rule = standard_rules(args.dictator_k)[args.rule]
    space = (
        exhaustive(args.m, args.n)
        if args.mode == "exhaustive"
        else sampled(args.m, args.n, args.trials, args.seed)
    )

    results = []
    try:
        for token in tokens:
            if token == "arrow":
                for axiom in ARROW_AXIOMS:
                    results.append(run_audit(rule, axiom, exhaustive(args.m, args.n)))
            elif token == "may_coincidence":
                results.append(
                    may_coincidence_check(
                        rule, args.m, args.n, args.trials, args.seed
                    )
                )
            else:
                results.append(run_audit(rule, AxiomId(token), space))
    except BudgetExceeded as exc:
        report = {
            "config": resolved,
            "timestamp": _timestamp(),
            "results": [r.to_json_dict() for r in results],
            "error": f"BudgetExceeded: {exc}",
        }
        _emit(report, args.out)
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET

    report = {
        "config": resolved,
        "timestamp": _timestamp(),
        "results": [r.to_json_dict() for r in results],
    }
    _emit(report, args.out)
    return EXIT_OK


def _cmd_restrict(args) -> int:
    from .restrictions import find_axis, is_quasi_transitive

    profile = _load_profile(args.profile)
    axis = find_axis(profile)
    outcome = _build_rule_fn(args)(profile)
    report = {
        "config": {
            "command": "restrict",
            "profile": args.profile,
            "rule": args.rule,
            "dictator_k": args.dictator_k if args.rule == "dictator" else None,
        },
        "timestamp": _timestamp(),
        "single_peaked": axis is not None,
        "axis": [c.render() for c in axis] if axis is not None else None,
        "quasi_transitive": is_quasi_transitive(outcome),
    }
    _emit(report, args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser assembly


def _add_rule_flags(sub) -> None:
    sub.add_argument("--rule", choices=RULE_NAMES, default="may")
    sub.add_argument(
        "--dictator-k",
        type=int,
        default=1,
        help="1-based individual index for rule=dictator",
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="foldvote", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    ext = subs.add_parser("extract", help="PDB files to contact CSVs")
    ext.add_argument("inputs", nargs="*", help="PDB files or directories")
    ext.add_argument("--out-dir", default=".")
    ext.add_argument("--tau", type=float, default=8.0, help="contact threshold (A)")
    ext.add_argument(
        "--mode", choices=("c_alpha", "centroid", "heavy_min"), default="c_alpha"
    )
    ext.add_argument("--min-seq-separation", type=int, default=3)
    ext.add_argument("--cross-chain", action="store_true")
    ext.add_argument("--table", help="CSV score table; default is unit counting")
    ext.add_argument(
        "--no-negate",
        action="store_true",
        help="keep table sign (default negates so contact energies score high)",
    )
    ext.add_argument("--summary-name", default="extract_summary.json")

    rank = subs.add_parser("rank", help="contact CSV to utility and ranking")
    rank.add_argument("contacts")
    rank.add_argument("--combine", choices=("sum", "mean", "count"), default="sum")
    rank.add_argument("--tie-epsilon", type=float, default=0.0)
    rank.add_argument("--universe", choices=("full", "hetero"), default="full")
    rank.add_argument("--protein-id", default=None)
    rank.add_argument("--out", default="-")

    synth = subs.add_parser("synth", help="generate a synthetic profile")
    synth.add_argument(
        "kind",
        choices=("impartial_culture", "single_peaked", "condorcet_cycle", "condorcet"),
    )
    synth.add_argument("--m", type=int, default=3)
    synth.add_argument("--n", type=int, default=3)
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("--out", default="-")

    agg = subs.add_parser("aggregate", help="apply a rule to a profile")
    agg.add_argument("profile", nargs="?", default="-", help="profile JSON or - for stdin")
    _add_rule_flags(agg)
    agg.add_argument("--out", default="-")

    aud = subs.add_parser("audit", help="audit a rule against axioms")
    aud.add_argument(
        "--rule",
        choices=RULE_NAMES + ("mean-direction",),
        default="may",
    )
    aud.add_argument("--dictator-k", type=int, default=1)
    aud.add_argument(
        "--axioms",
        required=True,
        help="comma-separated axiom names, or arrow / may_coincidence / continuity",
    )
    aud.add_argument("--m", type=int, default=3)
    aud.add_argument("--n", type=int, default=3)
    aud.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    aud.add_argument("--trials", type=int, default=10_000)
    aud.add_argument("--seed", type=int, default=0)
    aud.add_argument("--epsilon", type=float, default=1e-3)
    aud.add_argument("--out", default="-")

    res = subs.add_parser("restrict", help="single-peakedness and quasi-transitivity")
    res.add_argument("profile", nargs="?", default="-")
    _add_rule_flags(res)
    res.add_argument("--out", default="-")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "extract":
            return _cmd_extract(args)
        if args.command == "rank":
            return _cmd_rank(args)
        if args.command == "synth":
            return _cmd_synth(args)
        if args.command == "aggregate":
            return _cmd_aggregate(args)
        if args.command == "audit":
            return _cmd_audit(args, parser)
        if args.command == "restrict":
            return _cmd_restrict(args)
        parser.error(f"unknown command {args.command!r}")
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FoldvoteError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
