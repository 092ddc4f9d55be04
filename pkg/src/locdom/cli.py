"""Command-line entry point: ``locdom <subcommand> ...``.

Exit codes: 0 success, 1 I/O or input error, 2 invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import constructions as K
from . import formulas as F
from .codes import CodeKind, is_code
from .graph import (
    GraphFormatError,
    format_edge_list,
    make_aux_circulant,
    make_cycle,
    make_path,
    make_star,
    mycielski,
)
from .harness import (
    FAMILY_MAKERS,
    LOWER_PLUS_ONE,
    OLD_PLUS_ONE,
    InvariantViolation,
    family_space,
    find_tightness_example,
    load_graph,
    run_sweep,
    save_report,
    small_graph_space,
)
from .solver import DEFAULT_BUDGET, gamma

EXIT_OK, EXIT_IO, EXIT_INVARIANT = 0, 1, 2

GENERATORS = {
    "path": make_path,
    "cycle": make_cycle,
    "star": make_star,
    "circulant": make_aux_circulant,
}


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def parse_vertex_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"vertex set must be comma-separated integers, got {text!r}") from None


def parse_config(text: str) -> dict:
    """Flat ``key=value`` lines; ``#`` starts a comment line."""
    raw = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value")
        key, value = line.split("=", 1)
        raw[key.strip()] = value.strip()

    known = {"families", "n_min", "n_max", "kinds", "budget", "out", "format", "workers", "timing"}
    unknown = set(raw) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    cfg = {
        "families": [f.strip() for f in raw.get("families", "path,cycle").split(",") if f.strip()],
        "n_min": int(raw.get("n_min", 3)),
        "n_max": int(raw.get("n_max", 8)),
        "kinds": [k.strip() for k in raw.get("kinds", "LD,LTD,OLD").split(",") if k.strip()],
        "budget": int(raw.get("budget", DEFAULT_BUDGET)),
        "out": raw.get("out"),
        "format": raw.get("format", "csv"),
        "workers": int(raw.get("workers", 1)),
        "timing": raw.get("timing", "true").lower() in ("1", "true", "yes", "on"),
    }
    if cfg["format"] not in ("csv", "json"):
        raise ValueError(f"format must be csv or json, not {cfg['format']!r}")
    return cfg


def cmd_gen(args) -> int:
    G = GENERATORS[args.family](args.n)
    if args.mycielski:
        G = mycielski(G)
    sys.stdout.write(format_edge_list(G))
    return EXIT_OK


def cmd_check(args) -> int:
    G = load_graph(args.graph)
    verdict = is_code(G, parse_vertex_list(args.set), args.kind)
    failure = None
    if verdict.failure is not None:
        what, reason = verdict.failure
        failure = {"reason": reason, "at": list(what) if isinstance(what, tuple) else what}
    _print_json({"kind": CodeKind.parse(args.kind).name, "ok": verdict.ok, "failure": failure})
    return EXIT_OK


def cmd_solve(args) -> int:
    G = load_graph(args.graph)
    res = gamma(G, args.kind, budget=args.budget, time_limit=args.time_limit, workers=args.workers)
    _print_json(res.to_dict())
    return EXIT_OK


CONSTRUCTIONS = {
    "old-cycle": K.old_set_cycle,
    "ld-mycielski-path": K.ld_set_mycielski_path,
    "ltd-mycielski-cycle": K.ltd_set_mycielski_cycle,
}


def cmd_construct(args) -> int:
    if args.name in CONSTRUCTIONS:
        out = CONSTRUCTIONS[args.name](args.n)
    else:
        # lifts start from the solver's minimum set on the chosen family member
        G = FAMILY_MAKERS[args.family](args.n)
        kind = CodeKind.parse(args.kind)
        if args.name == "total-dom-lift":
            kind = CodeKind.TDOM
        elif args.name == "old-lift":
            kind = CodeKind.OLD
        base = gamma(G, kind)
        if not base.ok:
            print(f"error: {G!r} has no {kind.name}-set", file=sys.stderr)
            return EXIT_IO
        if args.name == "doubling":
            out = K.doubling_lift(G, base.witness, kind)
        elif args.name == "old-lift":
            out = K.old_lift(G, base.witness, args.vertex)
        else:
            out = K.total_dom_lift(G, base.witness, args.vertex)
    _print_json(out.to_dict())
    return EXIT_OK


def cmd_formula(args) -> int:
    res = F.FORMULAS[args.name](args.n)
    _print_json({"name": args.name, "n": args.n, "value": res.value, "source": res.source})
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = parse_config(Path(args.config).read_text())
    report = run_sweep(cfg["families"], range(cfg["n_min"], cfg["n_max"] + 1), cfg["kinds"],
                       budget=cfg["budget"], workers=cfg["workers"])
    if cfg["out"]:
        save_report(report, cfg["out"], cfg["format"], timing=cfg["timing"])
    else:
        text = report.to_csv(cfg["timing"]) if cfg["format"] == "csv" else report.to_json(cfg["timing"])
        sys.stdout.write(text)
    problems = report.violations()
    for p in problems:
        print(f"violation: {p}", file=sys.stderr)
    return EXIT_INVARIANT if problems else EXIT_OK


def cmd_tightness(args) -> int:
    if args.space == "graphs":
        space = small_graph_space(args.n_max, twin_free=CodeKind.parse(args.kind) is CodeKind.OLD)
    else:
        space = family_space(args.space, range(args.n_min, args.n_max + 1))
    res = find_tightness_example(args.kind, args.relation, space, budget=args.budget)
    print(res.summary())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="locdom", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a family graph as an edge list")
    g.add_argument("family", choices=sorted(GENERATORS))
    g.add_argument("n", type=int)
    g.add_argument("-m", "--mycielski", action="store_true", help="apply the Mycielski construction")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="test a vertex set against a code kind")
    c.add_argument("graph")
    c.add_argument("set", help="comma-separated 0-based vertices")
    c.add_argument("kind")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("solve", help="exact X-number of a graph")
    s.add_argument("graph")
    s.add_argument("kind")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--time-limit", type=float, default=None)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_solve)

    k = sub.add_parser("construct", help="build a validated witness set")
    k.add_argument("name", choices=sorted(CONSTRUCTIONS) + ["doubling", "old-lift", "total-dom-lift"])
    k.add_argument("n", type=int)
    k.add_argument("--family", choices=sorted(FAMILY_MAKERS), default="cycle")
    k.add_argument("--kind", default="LD")
    k.add_argument("--vertex", type=int, default=0, help="shadow index for the lifts")
    k.set_defaults(func=cmd_construct)

    f = sub.add_parser("formula", help="evaluate a closed-form value")
    f.add_argument("name", choices=sorted(F.FORMULAS))
    f.add_argument("n", type=int)
    f.set_defaults(func=cmd_formula)

    w = sub.add_parser("sweep", help="run a family sweep from a key=value config")
    w.add_argument("config")
    w.set_defaults(func=cmd_sweep)

    t = sub.add_parser("tightness", help="search for gamma(M(G)) = gamma(G) + 1")
    t.add_argument("kind")
    t.add_argument("--relation", choices=[LOWER_PLUS_ONE, OLD_PLUS_ONE], default=LOWER_PLUS_ONE)
    t.add_argument("--space", choices=sorted(FAMILY_MAKERS) + ["graphs"], default="cycle")
    t.add_argument("--n-min", type=int, default=3)
    t.add_argument("--n-max", type=int, default=9)
    t.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    t.set_defaults(func=cmd_tightness)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (OSError, GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (InvariantViolation, K.ConstructionError) as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
