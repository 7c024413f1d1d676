"""Command line entry point: inspect, verify, betti, shelling, dominate."""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .errors import CapExceeded, ParseError
from .graph import graph_square, minimal_dominating_sets, path_graph, read_graph
from .ideal import (
    SquarefreeIdeal,
    minimal_primes,
    neighborhood_ideal,
    ni_pn2,
    read_ideal,
    support_key,
)
from .resolution import (
    DEFAULT_MAX_AMBIENT,
    ORACLE_MAX_AMBIENT,
    betti_hochster,
    betti_koszul_oracle,
    pd_reg_depth,
    random_squarefree_ideal,
)
from .simplicial import (
    facet_complex,
    fh_vectors,
    find_shelling,
    is_shelling_order,
    paper_shelling_order,
    read_complex,
    stanley_reisner_complex,
)
from .verify import VerifyConfig, verify

RANDOM_SUITE_MAX_AMBIENT = 8


def _sets(sets) -> list[list[int]]:
    return [list(support_key(s)) for s in sets]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_ideal(args) -> SquarefreeIdeal:
    sources = [x is not None for x in (args.n, args.graph, args.ideal)]
    if sum(sources) != 1:
        raise ValueError("give exactly one of --n, --graph, --ideal")
    if args.n is not None:
        return ni_pn2(args.n)
    if args.graph is not None:
        g = read_graph(args.graph)
        if args.square:
            g = graph_square(g)
        return neighborhood_ideal(g)
    return read_ideal(args.ideal)


def _hochster_cap(args) -> int:
    return DEFAULT_MAX_AMBIENT if args.max_ambient is None else args.max_ambient


def _fh_doc(c) -> dict:
    fh = fh_vectors(c)
    return {"dim": fh.dim, "f": list(fh.f), "h": list(fh.h), "euler": fh.euler, "reduced_euler": fh.reduced_euler}


def cmd_inspect(args) -> int:
    ideal = _load_ideal(args)
    doc: dict = {"ambient_n": ideal.ambient_n, "generators": _sets(ideal.generators)}
    if ideal.unit or ideal.is_zero:
        doc["note"] = "unit ideal" if ideal.unit else "zero ideal"
    else:
        primes = minimal_primes(ideal)
        doc.update(minimal_primes=_sets(primes.primes), height=primes.height, bight=primes.bight)
        if ideal.ambient_n <= _hochster_cap(args):
            b = betti_hochster(ideal, args.field_char, _hochster_cap(args))
            inv = pd_reg_depth(b, ideal)
            doc["betti"] = b.to_json()
            doc.update(pd=inv.pd, reg=inv.reg, depth=inv.depth, dim=inv.dim)
        else:
            doc["betti"] = None
        doc["facet_complex"] = _fh_doc(facet_complex(ideal))
        doc["stanley_reisner_complex"] = _fh_doc(stanley_reisner_complex(ideal))
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
        return 0
    lines = [f"ambient n: {doc['ambient_n']}", f"generators: {_fmt_sets(doc['generators'])}"]
    if "height" in doc:
        lines.append(f"minimal primes: {_fmt_sets(doc['minimal_primes'])}")
        lines.append(f"height {doc['height']}, bight {doc['bight']}")
        if doc["betti"] is not None:
            b = betti_hochster(ideal, args.field_char, _hochster_cap(args))
            lines.append("betti table of S/I:")
            lines.append(b.render())
            lines.append(f"pd {doc['pd']}, reg {doc['reg']}, depth {doc['depth']}, dim {doc['dim']}")
        else:
            lines.append(f"betti table skipped: n above --max-ambient {_hochster_cap(args)}")
        for key in ("facet_complex", "stanley_reisner_complex"):
            fh = doc[key]
            lines.append(f"{key.replace('_', ' ')}: dim {fh['dim']}, f {tuple(fh['f'])}, h {tuple(fh['h'])}, "
                         f"chi {fh['euler']}, reduced chi {fh['reduced_euler']}")
    else:
        lines.append(doc["note"])
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _fmt_sets(sets) -> str:
    return ", ".join("{" + ",".join(map(str, s)) + "}" for s in sets)


def cmd_verify(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else None
    config = VerifyConfig(max_ambient=args.max_ambient, field_char=args.field_char, seed=args.seed, timing=args.timing)
    report = verify(args.n_from, args.n_to, checks, config)
    _emit(report.dumps(args.format), args.out)
    summary = report.summary
    if summary["fail"] or (args.strict and summary["indeterminate"]):
        return 1
    return 0


def cmd_betti(args) -> int:
    if args.random:
        rng = random.Random(args.seed)
        # the oracle visits all 2^n degrees, so keep the default suite small
        cap = RANDOM_SUITE_MAX_AMBIENT if args.max_ambient is None else min(args.max_ambient, ORACLE_MAX_AMBIENT)
        mismatches = []
        for k in range(args.random):
            ideal = random_squarefree_ideal(rng, rng.randint(2, cap))
            a = betti_hochster(ideal, args.field_char)
            b = betti_koszul_oracle(ideal, args.field_char)
            if a.multigraded != b.multigraded:
                mismatches.append(str(ideal))
        doc = {"random": args.random, "seed": args.seed, "max_ambient": cap, "mismatches": mismatches}
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
        return 1 if mismatches else 0
    ideal = _load_ideal(args)
    b = betti_hochster(ideal, args.field_char, _hochster_cap(args))
    status = 0
    doc = b.to_json(multigraded=args.multigraded)
    if args.oracle:
        o = betti_koszul_oracle(ideal, args.field_char)
        doc["oracle_agrees"] = o.multigraded == b.multigraded
        status = 0 if doc["oracle_agrees"] else 1
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        text = b.render() + f"\npd {b.pd}, reg {b.reg}\n"
        if args.oracle:
            text += f"oracle agrees: {doc['oracle_agrees']}\n"
        _emit(text, args.out)
    return status


def cmd_shelling(args) -> int:
    if args.complex is not None:
        c = read_complex(args.complex)
    else:
        c = facet_complex(_load_ideal(args))
    doc: dict = {"facets": _sets(c.facets)}
    if args.n is not None and args.n >= 7:
        doc["known_order"] = _sets(paper_shelling_order(args.n))
        doc["known_order_shells"] = is_shelling_order(c, paper_shelling_order(args.n))
    witness = find_shelling(c)
    doc["search"] = _sets(witness) if witness is not None else None
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"facets: {_fmt_sets(doc['facets'])}"]
        if "known_order" in doc:
            lines.append(f"known order {_fmt_sets(doc['known_order'])}: {'shelling' if doc['known_order_shells'] else 'not a shelling'}")
        lines.append(f"search: {_fmt_sets(doc['search']) if witness is not None else 'no shelling order exists'}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_dominate(args) -> int:
    if (args.n is None) == (args.graph is None):
        raise ValueError("give exactly one of --n, --graph")
    if args.n is not None:
        g = graph_square(path_graph(args.n))
    else:
        g = read_graph(args.graph)
        if args.square:
            g = graph_square(g)
    s = minimal_dominating_sets(g)
    doc = {"gamma": s.gamma, "gamma_prime": s.gamma_prime, "minimal_sets": _sets(s.minimal_sets)}
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(f"gamma {s.gamma}, gamma' {s.gamma_prime}\nminimal dominating sets ({len(s.minimal_sets)}): "
              f"{_fmt_sets(doc['minimal_sets'])}\n", args.out)
    return 0


def _common(p: argparse.ArgumentParser, formats=("json", "markdown"), default="markdown") -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.add_argument("--field-char", type=int, default=0, help="0 (rationals) or a prime")
    p.add_argument("--max-ambient", type=int, default=None, help=f"engine size cap (default {DEFAULT_MAX_AMBIENT})")


def _sources(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="built-in NI(P_n^2)")
    p.add_argument("--graph", help="graph file; uses its closed neighbourhood ideal")
    p.add_argument("--square", action="store_true", help="square the graph read from --graph first")
    p.add_argument("--ideal", help="ideal file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="neighborly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="dump every invariant of one ideal")
    _sources(p)
    _common(p)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("verify", help="compare formulas, recursion and engines over a range of n")
    p.add_argument("--from", dest="n_from", type=int)
    p.add_argument("--to", dest="n_to", type=int)
    p.add_argument("--checks", help="comma-separated check names (default: all)")
    p.add_argument("--format", choices=("json", "csv", "markdown"), default="json")
    p.add_argument("--out")
    p.add_argument("--field-char", type=int, default=0)
    p.add_argument("--max-ambient", type=int, default=None)
    p.add_argument("--strict", action="store_true", help="indeterminate verdicts also fail the run")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="record elapsed_ms (breaks byte-identical reports)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("betti", help="graded Betti table of S/I")
    _sources(p)
    _common(p)
    p.add_argument("--multigraded", action="store_true")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force Koszul oracle and compare")
    p.add_argument("--random", type=int, default=0, metavar="K", help="compare engine and oracle on K random ideals")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("shelling", help="check the known order and search for a shelling")
    _sources(p)
    p.add_argument("--complex", help="complex file (one facet per line)")
    _common(p)
    p.set_defaults(func=cmd_shelling)

    p = sub.add_parser("dominate", help="minimal dominating sets")
    p.add_argument("--n", type=int, help="use P_n^2")
    p.add_argument("--graph")
    p.add_argument("--square", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_dominate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, CapExceeded, ValueError) as exc:
        print(f"neighborly {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
