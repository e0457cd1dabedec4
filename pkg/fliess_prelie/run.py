#!/usr/bin/env python3
"""Command-line front end.

Every subcommand reads its operands with the text grammars of
``fliess_prelie.grammar`` and prints the result as text, or as JSON with
--json. Exit codes: 0 success, 1 verification failure or internal fault,
2 usage or parse error.
"""

import argparse
import contextlib
import json
import sys
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional

from fliess_prelie import admissible, census, grammar, hopf, morphisms, prelie, ptrees, report, verify
from fliess_prelie.config import Config, load_config
from fliess_prelie.errors import DomainError, FliessPrelieError, ParseError, StructureError
from fliess_prelie.fliess import NCSeries, compose, reduced_compose
from fliess_prelie.lincomb import LinComb
from fliess_prelie.words import lc_degree, shuffle_lc


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="Print the result as JSON")
    p.add_argument("--verbose", "-v", action="count", default=0, help="Increase verbosity")
    return p


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fliess-prelie",
        description="Exact computations in the Fliess composition group, its Hopf and prelie structures, and partitioned trees",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", metavar="command")
    common = _common()

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(
            name, help=help_text, parents=[common], formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )

    s = add("shuffle", "Shuffle product of two word combinations")
    s.add_argument("left", help='Word combination, e.g. "1*1 + 2*01"')
    s.add_argument("right")

    for name, text in (("compose", "Fliess composition c o d"), ("rcompose", "Reduced composition c õ d")):
        s = add(name, text)
        s.add_argument("left", help="Series c as a word combination")
        s.add_argument("right", help="Series d as a word combination")
        s.add_argument("--truncate", type=int, help="Truncate both series at this word length")

    s = add("coproduct", "Coproduct Delta(X_c) in H (x) H")
    s.add_argument("word", help='Binary word c, or a monomial combination with --monomial, e.g. "X{01}X{e}"')
    s.add_argument("--monomial", action="store_true", help="Read the operand as a combination of monomials")

    s = add("prelie-coproduct", "Prelie coproduct delta(X_c) in V (x) V")
    s.add_argument("word")

    s = add("kernel-delta", "Basis of ker(delta) in degree k")
    s.add_argument("--degree", type=int, required=True)

    s = add("prelie", "Prelie product u . v on word combinations")
    s.add_argument("left")
    s.add_argument("right")

    s = add("ptree-enum", "Enumerate partitioned trees")
    s.add_argument("--size", type=int, required=True, help="Number of vertices")
    s.add_argument("--decorations", type=int, default=1, help="Decorations 1..d")
    s.add_argument("--count", action="store_true", help="Print counts only (with the series count)")
    s.add_argument("--save", action="store_true", help="Save the census table under OUTPUT_DIR")

    for name, text in (("ptree-prelie", "Prelie product of partitioned trees"),
                       ("ptree-shuffle", "Shuffle of partitioned trees")):
        s = add(name, text)
        s.add_argument("left", help='Tree combination, e.g. "{2({1})} - 1/2*{1 1}"')
        s.add_argument("right")

    s = add("rigidity-delta", "Rigidity coproduct of a partitioned-tree combination")
    s.add_argument("tree")

    s = add("phi-cpl", "Image of partitioned trees on {1, 2} in words")
    s.add_argument("tree")

    s = add("phi-pl", "Image of rooted trees in words")
    s.add_argument("tree", help='Rooted-tree combination, e.g. "2(1)" or "l:3,2,1"')

    s = add("psi", "Image of rooted trees in partitioned trees on {1, 2}")
    s.add_argument("tree")

    s = add("m-eval", "Evaluate m_w in words")
    s.add_argument("word", help='Positive-integer word combination, e.g. "3,1"')

    s = add("m-prelie", "m_u . m_v in the m basis")
    s.add_argument("left", help="Admissible word u")
    s.add_argument("right", help="Admissible word v")

    s = add("to-m-basis", "Coordinates of a homogeneous word combination in the m basis")
    s.add_argument("element")
    s.add_argument("--degree", type=int, help="Degree of the element (inferred when omitted)")

    s = add("dendriform", "Dendriform products on positive-integer words")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--op", choices=["star", "left", "right"], default="star")

    s = add("dims", "Dimension table: dim V_k, dim H_k, admissible words, partitioned trees")
    s.add_argument("--degree", type=int, default=10, help="Largest degree k")
    s.add_argument("--decorations", type=int, default=1)
    s.add_argument("--save", action="store_true", help="Save the table under OUTPUT_DIR")

    s = add("verify", "Run verification suites")
    s.add_argument("suite", choices=list(verify.SUITES) + ["all"])
    s.add_argument("--size", type=int, help="Size bound (default VERIFY_SIZE)")
    s.add_argument("--seed", type=int, help="Random seed (default VERIFY_SEED)")
    s.add_argument("--instances", type=int, help="Random instances per property (default VERIFY_INSTANCES)")
    s.add_argument("--save", action="store_true", help="Write the Markdown report and results table")
    return p


# -- output -------------------------------------------------------------------------


def _progress(args: argparse.Namespace) -> contextlib.AbstractContextManager:
    """Progress lines go to stderr under --json so stdout stays a single JSON document."""
    return contextlib.redirect_stdout(sys.stderr) if args.json else contextlib.nullcontext()


def _emit(value: Any, as_json: bool, extra: Optional[Dict[str, Any]] = None) -> None:
    if as_json:
        payload = grammar.value_json(value)
        if extra:
            payload.update(extra)
        print(json.dumps(payload, indent=2))
    else:
        print(grammar.format_value(value))


def _emit_series(x: NCSeries, as_json: bool) -> None:
    if as_json:
        print(json.dumps(grammar.lincomb_json(x.body, {"truncation": x.truncation}), indent=2))
    else:
        print(x)


def _emit_list(items: List[Any], as_json: bool, key: str) -> None:
    if as_json:
        print(json.dumps({key: [grammar.value_json(i) for i in items]}, indent=2))
    else:
        for item in items:
            print(grammar.format_value(item))


def _emit_rows(rows: List[Dict[str, Any]], as_json: bool) -> None:
    if as_json:
        print(json.dumps(rows, indent=2))
        return
    if not rows:
        return
    headers = list(rows[0].keys())
    widths = [max(len(h), *(len(str(r[h])) for r in rows)) for h in headers]
    print("  ".join(h.rjust(w) for h, w in zip(headers, widths)))
    for r in rows:
        print("  ".join(str(r[h]).rjust(w) for h, w in zip(headers, widths)))


# -- commands -----------------------------------------------------------------------


def _series(text: str, truncate: Optional[int]) -> NCSeries:
    body = grammar.parse_word_lc(text)
    return NCSeries.exact(body) if truncate is None else NCSeries.truncated(body, truncate)


def _cmd_shuffle(args: argparse.Namespace, cfg: Config) -> int:
    _emit(shuffle_lc(grammar.parse_word_lc(args.left), grammar.parse_word_lc(args.right)), args.json)
    return 0


def _cmd_compose(args: argparse.Namespace, cfg: Config) -> int:
    op = compose if args.command == "compose" else reduced_compose
    _emit_series(op(_series(args.left, args.truncate), _series(args.right, args.truncate)), args.json)
    return 0


def _cmd_coproduct(args: argparse.Namespace, cfg: Config) -> int:
    if args.monomial:
        value = hopf.coproduct_lc(grammar.parse("monomial_lc", args.word))
    else:
        value = hopf.coproduct(grammar.parse("word", args.word))
    _emit(value, args.json)
    return 0


def _cmd_prelie_coproduct(args: argparse.Namespace, cfg: Config) -> int:
    _emit(hopf.prelie_coproduct(grammar.parse("word", args.word)), args.json)
    return 0


def _cmd_kernel_delta(args: argparse.Namespace, cfg: Config) -> int:
    _emit_list(hopf.kernel_prelie_coproduct(args.degree), args.json, "basis")
    return 0


def _cmd_prelie(args: argparse.Namespace, cfg: Config) -> int:
    _emit(prelie.prelie(grammar.parse_word_lc(args.left), grammar.parse_word_lc(args.right)), args.json)
    return 0


def _cmd_ptree_enum(args: argparse.Namespace, cfg: Config) -> int:
    if args.size > cfg.enum_max_vertices:
        raise DomainError(
            f"--size {args.size} exceeds ENUM_MAX_VERTICES={cfg.enum_max_vertices}; raise it to go further"
        )
    with _progress(args):
        if args.verbose:
            print(f"[run] Enumerating partitioned trees: n={args.size}, d={args.decorations} ...")
        trees = ptrees.pt_enumerate(args.size, args.decorations)
        if args.save:
            census.persist_table(
                census.census_rows(args.size, args.decorations), cfg.output_dir, f"ptree_census_d{args.decorations}"
            )
    if args.count:
        f, _ = ptrees.pt_counts_by_series(args.size, args.decorations)
        if args.json:
            print(json.dumps({"count": len(trees), "series": f[-1]}, indent=2))
        else:
            print(f"{len(trees)} (series: {f[-1]})")
        return 0
    if args.json:
        print(json.dumps({"count": len(trees), "trees": [grammar.basis_json(t) for t in trees]}, indent=2))
    else:
        for t in trees:
            print(t)
    return 0


def _cmd_ptree_binary(args: argparse.Namespace, cfg: Config) -> int:
    op = ptrees.pt_prelie if args.command == "ptree-prelie" else ptrees.pt_shuffle_lc
    _emit(op(grammar.parse("ptree_lc", args.left), grammar.parse("ptree_lc", args.right)), args.json)
    return 0


def _cmd_rigidity_delta(args: argparse.Namespace, cfg: Config) -> int:
    _emit(ptrees.pt_rigidity_coproduct(grammar.parse("ptree_lc", args.tree)), args.json)
    return 0


def _cmd_phi_cpl(args: argparse.Namespace, cfg: Config) -> int:
    _emit(morphisms.phi_cpl(grammar.parse("ptree_lc", args.tree)), args.json)
    return 0


def _cmd_phi_pl(args: argparse.Namespace, cfg: Config) -> int:
    _emit(morphisms.phi_pl(grammar.parse("rtree_lc", args.tree)), args.json)
    return 0


def _cmd_psi(args: argparse.Namespace, cfg: Config) -> int:
    _emit(morphisms.psi(grammar.parse("rtree_lc", args.tree)), args.json)
    return 0


def _cmd_m_eval(args: argparse.Namespace, cfg: Config) -> int:
    _emit(admissible.m_eval_lc(grammar.parse("posword_lc", args.word)), args.json)
    return 0


def _cmd_m_prelie(args: argparse.Namespace, cfg: Config) -> int:
    u = grammar.parse("posword", args.left)
    v = grammar.parse("posword", args.right)
    _emit(admissible.m_prelie(u, v), args.json)
    return 0


def _cmd_to_m_basis(args: argparse.Namespace, cfg: Config) -> int:
    x = grammar.parse_word_lc(args.element)
    if args.degree is not None:
        n = args.degree
    elif x:
        n = lc_degree(x)
    else:
        raise DomainError("--degree is required for the zero element")
    _emit(admissible.to_m_basis(x, n), args.json, {"degree": n} if args.json else None)
    return 0


_DENDRIFORM: Dict[str, Callable[[LinComb, LinComb], LinComb]] = {
    "star": admissible.star_lc,
    "left": admissible.left_lc,
    "right": admissible.right_lc,
}


def _cmd_dendriform(args: argparse.Namespace, cfg: Config) -> int:
    op = _DENDRIFORM[args.op]
    _emit(op(grammar.parse("posword_lc", args.left), grammar.parse("posword_lc", args.right)), args.json)
    return 0


def _cmd_dims(args: argparse.Namespace, cfg: Config) -> int:
    rows = census.dimension_rows(args.degree, args.decorations)
    _emit_rows(rows, args.json)
    if args.save:
        with _progress(args):
            census.persist_table(rows, cfg.output_dir, f"dims_d{args.decorations}")
    return 0


def _cmd_verify(args: argparse.Namespace, cfg: Config) -> int:
    size = args.size if args.size is not None else cfg.verify_size
    seed = args.seed if args.seed is not None else cfg.verify_seed
    instances = args.instances if args.instances is not None else cfg.verify_instances
    with _progress(args):
        if args.verbose:
            print(f"[run] Verifying suite={args.suite} size={size} seed={seed} instances={instances} ...")
        ctx = verify.verify(args.suite, size=size, seed=seed, instances=instances, verbose=args.verbose)
        if args.save:
            stamp = datetime.now().strftime("%Y%m%d-%H%M%S")
            stem = f"verify_{args.suite}_s{size}_seed{seed}"
            saved = census.persist_table([r.to_dict() for r in ctx["results"]], cfg.output_dir, stem)
            ctx["asof"] = stamp
            ctx["sources"] = [saved] if saved else []
            report.write_report(cfg.output_dir / f"{stem}.md", ctx)
    if args.json:
        print(json.dumps(
            {"suite": ctx["suite"], "size": size, "seed": seed, "passed": ctx["passed"],
             "results": [r.to_dict() for r in ctx["results"]]},
            indent=2,
        ))
    else:
        for r in ctx["results"]:
            if not r.passed:
                print(f"FAIL {r.suite}/{r.name}: {r.identity} ({r.failures}/{r.cases}) {r.example}")
    return 0 if ctx["passed"] else 1


COMMANDS: Dict[str, Callable[[argparse.Namespace, Config], int]] = {
    "shuffle": _cmd_shuffle,
    "compose": _cmd_compose,
    "rcompose": _cmd_compose,
    "coproduct": _cmd_coproduct,
    "prelie-coproduct": _cmd_prelie_coproduct,
    "kernel-delta": _cmd_kernel_delta,
    "prelie": _cmd_prelie,
    "ptree-enum": _cmd_ptree_enum,
    "ptree-prelie": _cmd_ptree_binary,
    "ptree-shuffle": _cmd_ptree_binary,
    "rigidity-delta": _cmd_rigidity_delta,
    "phi-cpl": _cmd_phi_cpl,
    "phi-pl": _cmd_phi_pl,
    "psi": _cmd_psi,
    "m-eval": _cmd_m_eval,
    "m-prelie": _cmd_m_prelie,
    "to-m-basis": _cmd_to_m_basis,
    "dendriform": _cmd_dendriform,
    "dims": _cmd_dims,
    "verify": _cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if not args.command:
        parser.print_help()
        return 2

    with _progress(args):
        cfg = load_config(create_output_dir=bool(getattr(args, "save", False)))
        if args.verbose > 1:
            print("[run] Configuration loaded:")
            print(f"  APP_ENV: {cfg.app_env}")
            print(f"  OUTPUT_DIR: {cfg.output_dir}")

    try:
        return COMMANDS[args.command](args, cfg)
    except (ParseError, DomainError, StructureError) as e:
        print(f"[run] Error: {e}", file=sys.stderr)
        return 2
    except FliessPrelieError as e:
        print(f"[run] Error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
