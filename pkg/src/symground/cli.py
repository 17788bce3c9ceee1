"""Command-line entry point: one subcommand per pipeline stage.

Exit codes: 0 ok, 1 domain failure (no parse, inconsistent, violation),
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .action_grammar import (
    TraceError, check_hierarchy, check_no_cross, load_links, load_trace, recheck_movement,
    trace_to_atoms, validate_movement,
)
from .atoms import AtomStore, from_text, to_text
from .chain import chain
from .generation import SearchBoundExceeded, generate, roundtrip
from .grounding import (
    DATA_ENV, ComprehensionError, LanguageBundle, Unexpressible, comprehend, express, ground,
    load_bundle, load_grounding_rules,
)
from .image_grammar import SceneError, load_scene, recheck, scene_to_atoms, validate_scene
from .linkgrammar import Dictionary, DictionaryError, ParseError, check_metarules, load_dictionary, parse, render
from .qualitative import (
    ALGEBRAS, AlgebraError, path_consistency, read_network, table_tsv,
)
from .rel2logic import RuleBase, apply, load_rules
from .relex import extract
from .sexpr import SexprError

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _bundle(args) -> LanguageBundle:
    """``--bundle NAME`` or ``--dict``/``--rules`` files (``--data`` overrides the env root)."""
    if getattr(args, "bundle", None):
        try:
            return load_bundle(args.bundle, args.data)
        except FileNotFoundError as exc:
            raise UsageError(str(exc)) from None
    if not getattr(args, "dict", None):
        raise UsageError("give --bundle NAME or --dict FILE")
    d = load_dictionary(_read(args.dict))
    rules = load_rules(_read(args.rules)) if getattr(args, "rules", None) else RuleBase()
    grounding = load_grounding_rules(_read(args.grounding)) if getattr(args, "grounding", None) else []
    return LanguageBundle(Path(args.dict).stem, d, rules, grounding)


def _dictionary(args) -> Dictionary:
    return _bundle(args).dictionary


def _sentence(args) -> str:
    if args.sentence is None:
        raise UsageError("--sentence is required")
    return args.sentence


# -- subcommands -------------------------------------------------------------------


def cmd_parse(args) -> int:
    d = _dictionary(args)
    result = parse(_sentence(args), d, walls=True if args.walls else None)
    if not result:
        print("no linkage", file=sys.stderr)
        return FAIL
    shown = result.linkages if args.all else result.linkages[:1]
    for k, lk in enumerate(shown):
        if args.all:
            print(f"linkage {k + 1} of {len(result)}")
        print(render(lk))
    if len(result) > 1 and not args.all:
        print(f"({len(result)} linkages; showing the top one)", file=sys.stderr)
    return OK


def cmd_relex(args) -> int:
    d = _dictionary(args)
    result = parse(_sentence(args), d)
    if not result:
        print("no linkage", file=sys.stderr)
        return FAIL
    print(extract(result.top, d).report(), end="")
    return OK


def cmd_logic(args) -> int:
    b = _bundle(args)
    result = parse(_sentence(args), b.dictionary)
    if not result:
        print("no linkage", file=sys.stderr)
        return FAIL
    res = apply(b.rules, extract(result.top, b.dictionary))
    print(to_text(res.store), end="")
    return OK


def cmd_comprehend(args) -> int:
    b = _bundle(args)
    c = comprehend(_sentence(args), b)
    if c.ambiguous:
        print(f"ambiguous: {c.alternatives} linkages per clause; using the top one", file=sys.stderr)
    print(to_text(c.store), end="")
    return OK


def _atoms_input(args, b: LanguageBundle) -> AtomStore:
    if getattr(args, "sentence", None):
        return comprehend(args.sentence, b).store
    if getattr(args, "atoms", None):
        return from_text(_read(args.atoms))
    raise UsageError("give --sentence S or --atoms FILE")


def cmd_ground(args) -> int:
    b = _bundle(args)
    g = ground(_atoms_input(args, b), b)
    print(g.text(), end="")
    for u in g.unmatched:
        print(f"unmatched: {u}", file=sys.stderr)
    return OK


def cmd_express(args) -> int:
    b = _bundle(args)
    if args.net:
        store = express(read_network(_read(args.net)), b)
    elif args.scene or args.trace:
        percepts = scene_to_atoms(load_scene(_read(args.scene))) if args.scene \
            else trace_to_atoms(load_trace(_read(args.trace)))
        store = express(ground(percepts, b.perception, instances=True), b)
    else:
        raise UsageError("give --net, --scene or --trace")
    print(to_text(store), end="")
    return OK


def cmd_generate(args) -> int:
    b = _bundle(args)
    if args.net:
        store = express(read_network(_read(args.net)), b)
    else:
        store = _atoms_input(args, b)
    out = generate(store, b, limit=args.limit)
    for g in out:
        print(g.text)
    return OK if out or not store.roots() else FAIL


def cmd_roundtrip(args) -> int:
    b = _bundle(args)
    bad = 0
    for line in _read(args.corpus).splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        r = roundtrip(s, b)
        status = "PASS" if r.ok else "FAIL"
        detail = r.generated if r.error is None else r.error
        print(f"{status}\t{s}\t{detail}")
        bad += not r.ok
    return OK if bad == 0 else FAIL


def cmd_scene_check(args) -> int:
    grammar = load_dictionary(_read(args.grammar))
    scene = load_scene(_read(args.scene))
    result = validate_scene(grammar, scene)
    if not result:
        print(result)
        return FAIL
    for l in result.links:
        print(f"{l.a} {l.a_label}+ -- {l.b_label}- {l.b}")
    if not recheck(grammar, scene, result):
        print("linkage failed the geometric re-check", file=sys.stderr)
        return FAIL
    if args.emit_atoms:
        print(to_text(scene_to_atoms(scene)), end="")
    return OK


def cmd_action_check(args) -> int:
    grammar = load_dictionary(_read(args.grammar))
    trace = load_trace(_read(args.trace))
    result = validate_movement(grammar, trace)
    status = OK
    if not result:
        print(result)
        return FAIL
    for l in result.links:
        print(f"{l.a} {l.a_label}+ -- {l.b_label}- {l.b}")
    if not recheck_movement(trace, result):
        status = FAIL
    h = check_hierarchy(trace)
    for v in h.violations:
        print(f"hierarchy: {v}")
        status = FAIL
    if args.no_cross:
        links = load_links(_read(args.links)) if args.links else result
        crossing_free = check_no_cross(trace, links)
        print("no-cross: ok" if crossing_free else "no-cross: links cross")
        if not crossing_free:
            status = FAIL
    if args.emit_atoms:
        print(to_text(trace_to_atoms(trace)), end="")
    return status


def cmd_reason(args) -> int:
    net = read_network(_read(args.net), args.algebra)
    refined = path_consistency(net)
    if refined is None:
        print("INCONSISTENT")
        return FAIL
    print(refined.to_text(), end="")
    return OK


def cmd_tables(args) -> int:
    print(table_tsv(ALGEBRAS[args.algebra]), end="")
    return OK


def cmd_chain(args) -> int:
    b = _bundle(args)
    if args.scene:
        source = load_scene(_read(args.scene))
    elif args.trace:
        source = load_trace(_read(args.trace))
    else:
        raise UsageError("give --scene or --trace")
    r = chain(source, b)
    for s in r.stated:
        print(f"{s.fact}\t{s.top}")
    for s in r.skipped:
        print(f"skipped: {s}", file=sys.stderr)
    return OK


# -- argument parsing -----------------------------------------------------------------


def _add_bundle(p, rules=True):
    p.add_argument("--bundle", help="bundle name under the data root, or a bundle directory")
    p.add_argument("--data", help=f"data root (overrides ${DATA_ENV})")
    p.add_argument("--dict", help="dictionary file (instead of --bundle)")
    if rules:
        p.add_argument("--rules", help="mapping rule file (with --dict)")
        p.add_argument("--grounding", help="grounding rule file (with --dict)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symground", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("parse", help="link-grammar parse")
    _add_bundle(p, rules=False)
    p.add_argument("--sentence")
    p.add_argument("--walls", action="store_true", help="insert LEFT-WALL")
    p.add_argument("--all", action="store_true", help="print every linkage")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("relex", help="dependency relations and attributes")
    _add_bundle(p, rules=False)
    p.add_argument("--sentence")
    p.set_defaults(func=cmd_relex)

    p = sub.add_parser("logic", help="mapping-rule output before normalization")
    _add_bundle(p)
    p.add_argument("--sentence")
    p.set_defaults(func=cmd_logic)

    p = sub.add_parser("comprehend", help="sentence to normalized atoms")
    _add_bundle(p)
    p.add_argument("--sentence")
    p.set_defaults(func=cmd_comprehend)

    p = sub.add_parser("ground", help="atoms to qualitative relations")
    _add_bundle(p)
    p.add_argument("--sentence")
    p.add_argument("--atoms", help="atom file (s-expressions)")
    p.set_defaults(func=cmd_ground)

    p = sub.add_parser("express", help="relations to canonical atoms")
    _add_bundle(p)
    p.add_argument("--net", help="network file: lines 'a b {REL,...}'")
    p.add_argument("--scene")
    p.add_argument("--trace")
    p.set_defaults(func=cmd_express)

    p = sub.add_parser("generate", help="atoms or a network to sentences")
    _add_bundle(p)
    p.add_argument("--atoms")
    p.add_argument("--net")
    p.add_argument("--sentence", help="comprehend this sentence first")
    p.add_argument("--limit", type=int, default=10)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("roundtrip", help="comprehend -> generate -> comprehend over a corpus")
    _add_bundle(p)
    p.add_argument("--corpus", required=True)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("scene-check", help="validate a scene against an image grammar")
    p.add_argument("--grammar", required=True)
    p.add_argument("--scene", required=True)
    p.add_argument("--emit-atoms", action="store_true")
    p.set_defaults(func=cmd_scene_check)

    p = sub.add_parser("action-check", help="validate a movement trace against an action grammar")
    p.add_argument("--grammar", required=True)
    p.add_argument("--trace", required=True)
    p.add_argument("--no-cross", action="store_true", help="check that dependency links do not cross")
    p.add_argument("--links", help="dependency links to check instead of the grammar linkage")
    p.add_argument("--emit-atoms", action="store_true")
    p.set_defaults(func=cmd_action_check)

    p = sub.add_parser("reason", help="path consistency on a constraint network")
    p.add_argument("--net", required=True)
    p.add_argument("--algebra", choices=sorted(ALGEBRAS))
    p.set_defaults(func=cmd_reason)

    p = sub.add_parser("tables", help="composition table as TSV")
    p.add_argument("--algebra", choices=["rcc8", "allen"], required=True)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("chain", help="scene or trace to sentences")
    _add_bundle(p)
    p.add_argument("--scene")
    p.add_argument("--trace")
    p.set_defaults(func=cmd_chain)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if not args.command:
        ap.print_usage(sys.stderr)
        return USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (DictionaryError, SexprError, AlgebraError, SceneError, TraceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (ParseError, ComprehensionError, Unexpressible, SearchBoundExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
