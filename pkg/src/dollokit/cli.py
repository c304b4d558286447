"""``dollo-kit`` command line front end.

Exit codes: 0 success, 1 verification failure, 2 input parse error,
3 validation error, 4 size cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import __version__
from .characters import CharacterVector, all_characters, read_characters
from .counting import dollo_count, dollo_count_all
from .errors import CapExceededError, ParseError, ValidationError
from .fitch import compare_scores, fig5_instance, fitch
from .labeling import dollo_labeling, dollo_score, fig2_instance, is_persistent
from .newick import LabelingReport, parse_newick, serialize_newick, write_labeling
from .oracle import COUNT_TABLE_CAP
from .tree import (Tree, generate_caterpillar, generate_fully_balanced,
                   generate_semi_caterpillar, random_tree, sackin_index)
from .verify import run_verification

log = logging.getLogger("dollokit")


def _read_source(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    if os.path.isfile(src):
        with open(src) as fh:
            return fh.read()
    return src


def _ints(text: str, count: int) -> list[int]:
    parts = text.split(",")
    if len(parts) != count:
        raise ParseError(f"expected {count} comma-separated integers, got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"expected integers, got {text!r}") from None


def load_tree(src: str, seed: int | None = None) -> Tree:
    """Resolve ``fb:h``, ``cat:n``, ``semicat:a,b``, ``random:n``, a path, ``-`` or inline Newick."""
    head, sep, rest = src.partition(":")
    if sep and head in ("fb", "cat", "semicat", "random") and "(" not in src:
        try:
            if head == "fb":
                return generate_fully_balanced(*_ints(rest, 1))
            if head == "cat":
                return generate_caterpillar(*_ints(rest, 1))
            if head == "semicat":
                a, b = _ints(rest, 2)
                return generate_semi_caterpillar(max(a, b), min(a, b))
            return random_tree(*_ints(rest, 1), seed=seed)
        except ParseError:
            raise
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
    return parse_newick(_read_source(src).strip())


def load_characters(src: str, tree: Tree) -> list[CharacterVector]:
    if src == "all":
        if tree.n > COUNT_TABLE_CAP:
            raise CapExceededError(f"'all' characters capped at n={COUNT_TABLE_CAP}")
        return list(all_characters(tree))
    if src == "-" or os.path.isfile(src):
        return read_characters(_read_source(src), tree)
    # inline: whitespace separates several characters
    return read_characters("\n".join(src.split()), tree)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_label(args) -> int:
    tree = load_tree(args.tree, args.seed)
    reports = []
    for f in load_characters(args.characters, tree):
        reports.append(LabelingReport.from_labeling(tree, f, dollo_labeling(tree, f)))
    if args.format == "json":
        _emit([json.loads(write_labeling(r, "json")) for r in reports])
    elif args.format == "tsv":
        sys.stdout.write("".join(write_labeling(r, "tsv") for r in reports))
    elif args.format == "newick":
        for r in reports:
            print(write_labeling(r, "annotated-newick"))
    else:
        for r in reports:
            birth = "->".join(map(str, r.birth_edge)) if r.birth_edge else "none"
            losses = ",".join(f"{p}->{c}" for p, c in r.loss_edges) or "none"
            print(f"{r.character}\tk={r.score_k}\tbirth={birth}\tlosses={losses}")
    return 0


def cmd_score(args) -> int:
    tree = load_tree(args.tree, args.seed)
    rows = [(str(f), dollo_score(tree, f)) for f in load_characters(args.characters, tree)]
    if args.format == "json":
        _emit([{"character": c, "k": k} for c, k in rows])
    else:
        for c, k in rows:
            print(f"{c}\t{k}")
    return 0


def cmd_persistent(args) -> int:
    tree = load_tree(args.tree, args.seed)
    rows = [(str(f), is_persistent(tree, f)) for f in load_characters(args.characters, tree)]
    if args.format == "json":
        _emit([{"character": c, "persistent": p} for c, p in rows])
    else:
        for c, p in rows:
            print(f"{c}\t{str(p).lower()}")
    return 0


def cmd_fitch(args) -> int:
    tree = load_tree(args.tree, args.seed)
    out = []
    for f in load_characters(args.characters, tree):
        res = fitch(tree, f)
        ext = [res.mp_extension[v] for v in range(len(tree))]
        out.append((f, res, ext))
    if args.format == "json":
        _emit([{
            "character": str(f),
            "parsimony_score": res.parsimony_score,
            "state_sets": [sorted(s) for s in res.state_sets],
            "mp_extension": ext,
            "mp_extension_newick": serialize_newick(tree, ext),
        } for f, res, ext in out])
    elif args.format == "tsv":
        print("character\tnode\tstate_set\tmp_state")
        for f, res, ext in out:
            for v in range(len(tree)):
                print(f"{f}\t{v}\t{''.join(map(str, sorted(res.state_sets[v])))}\t{ext[v]}")
    else:
        for f, res, ext in out:
            print(f"{f}\tl={res.parsimony_score}\t{serialize_newick(tree, ext)}")
    return 0


def cmd_compare(args) -> int:
    tree = load_tree(args.tree, args.seed)
    rows = []
    for f in load_characters(args.characters, tree):
        c = compare_scores(tree, f)
        rows.append({"character": str(f), "l": c.l, "k_f": c.k_f, "k_fbar": c.k_fbar,
                     "bound_ok": c.bound_ok, "gap": c.gap})
    if args.format == "json":
        _emit(rows)
    else:
        for r in rows:
            print("\t".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}"
                            for k, v in r.items()))
    return 0


def cmd_sackin(args) -> int:
    tree = load_tree(args.tree, args.seed)
    s = sackin_index(tree)
    if args.format == "json":
        _emit({"n": tree.n, "sackin": s})
    else:
        print(s)
    return 0


def cmd_count(args) -> int:
    tree = load_tree(args.tree, args.seed)
    if args.k is not None:
        value = dollo_count(tree, args.k)
        if args.format == "json":
            _emit({"n": tree.n, "k": args.k, "count": value})
        else:
            print(value)
        return 0
    table = dollo_count_all(tree, cumulative=args.cumulative)
    if args.format == "json":
        doc = {"n": table.n, "counts": list(table.counts)}
        if table.cumulative:
            doc["cumulative"] = list(table.cumulative)
        _emit(doc)
    elif args.format == "tsv":
        print("k\tD_k" + ("\tcumulative" if table.cumulative else ""))
        for k, c in enumerate(table.counts):
            extra = f"\t{table.cumulative[k]}" if table.cumulative else ""
            print(f"{k}\t{c}{extra}")
    else:
        print(" ".join(map(str, table.cumulative if table.cumulative else table.counts)))
    return 0


def cmd_generate(args) -> int:
    fam, p = args.family, args.params
    need = {"caterpillar": 1, "fb": 1, "fig2": 1, "random-shape": 1, "semicat": 2, "fig5": 2}[fam]
    if len(p) != need:
        raise ValidationError(f"{fam} takes {need} integer parameter(s)")
    chars: list[CharacterVector] = []
    try:
        if fam == "caterpillar":
            tree = generate_caterpillar(p[0])
        elif fam == "fb":
            tree = generate_fully_balanced(p[0])
        elif fam == "semicat":
            tree = generate_semi_caterpillar(max(p), min(p))
        elif fam == "random-shape":
            tree = random_tree(p[0], seed=args.seed)
        elif fam == "fig2":
            tree, f = fig2_instance(p[0])
            chars = [f]
        else:
            tree, f, fbar = fig5_instance(p[0], p[1])
            chars = [f, fbar]
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    print(serialize_newick(tree))
    if args.with_characters:
        for f in chars:
            print(f)
    return 0


def cmd_verify(args) -> int:
    report = run_verification(args.max_n)
    print(f"shapes tested: {report.shapes}")
    print(f"characters tested: {report.characters}")
    print(f"node-set queries tested: {report.node_set_queries}")
    for line in report.failures:
        print(f"FAIL {line}")
    print("all checks passed" if report.ok else f"{len(report.failures)} check(s) failed")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dollo-kit", description=(
        "Dollo-k labelings, scores and character counts on rooted binary trees."))
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_tree(p, formats=("text", "json")):
        p.add_argument("-t", "--tree", required=True,
                       help="Newick string, file, '-', or fb:h / cat:n / semicat:a,b / random:n")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("-f", "--format", choices=formats, default="text")
        return p

    def with_chars(p):
        p.add_argument("-c", "--characters", required=True,
                       help="inline characters, file, '-', or 'all'")
        return p

    with_chars(with_tree(sub.add_parser("label", help="Dollo-k labeling"),
                         ("text", "json", "tsv", "newick"))).set_defaults(func=cmd_label)
    with_chars(with_tree(sub.add_parser("score", help="Dollo score"))).set_defaults(func=cmd_score)
    with_chars(with_tree(sub.add_parser("persistent", help="persistence test"))
               ).set_defaults(func=cmd_persistent)
    with_chars(with_tree(sub.add_parser("fitch", help="Fitch parsimony"),
                         ("text", "json", "tsv"))).set_defaults(func=cmd_fitch)
    with_chars(with_tree(sub.add_parser("compare", help="Fitch vs Dollo scores"))
               ).set_defaults(func=cmd_compare)
    with_tree(sub.add_parser("sackin", help="Sackin index")).set_defaults(func=cmd_sackin)

    p = with_tree(sub.add_parser("count", help="number of Dollo-k characters"),
                  ("text", "json", "tsv"))
    p.add_argument("-k", "--k", type=int, default=None)
    p.add_argument("--cumulative", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("generate", help="print a tree from a named family")
    p.add_argument("family", choices=["caterpillar", "semicat", "fb", "fig2", "fig5", "random-shape"])
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--with-character", "--with-characters", dest="with_characters",
                   action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="cross-check fast algorithms against brute force")
    p.add_argument("max_n", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        log.error("parse error: %s", exc)
        return 2
    except CapExceededError as exc:
        log.error("cap exceeded: %s", exc)
        return 4
    except (ValidationError, ValueError) as exc:
        log.error("invalid input: %s", exc)
        return 3


if __name__ == "__main__":
    sys.exit(main())
