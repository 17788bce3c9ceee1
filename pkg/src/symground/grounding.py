"""Language bundles and the language <-> logic <-> relation morphisms.

A bundle directory holds ``bundle.json`` naming a dictionary, mapping rules,
grounding rules and the bundle's function words.  Grounding rule syntax::

    (ground po-verb
      (vars $x $y)
      (logic (EvaluationLink (PredicateNode "overlaps")
                             (ListLink (VariableNode "$x") (VariableNode "$y")))
             (InheritanceLink (SatisfyingSetLink (PredicateNode "overlaps"))
                              (ConceptNode "partially")))
      (relation rcc8 PO $x $y)
      (stv 1 1))

Several ``logic`` trees form a conjunction.  Perception rules may name a
relation set, e.g. ``(relation gao-h (O+ E) $x $y)``.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .atoms import (
    AtomKind, AtomStore, Tree, TruthValue, expr_to_tree, instance_atoms, instantiate,
    link, match_trees, node, normalize_instances, tree_nodes,
)
from .linkgrammar import Dictionary, ParseError, load_dictionary, parse, tokenize
from .qualitative import Algebra, ConstraintNetwork, algebra
from .rel2logic import AppliedResult, RuleBase, apply, load_rules
from .relex import DepGraph, extract
from .sexpr import Sym, SexprError, parse_all

DATA_ENV = "SYMGROUND_DATA"

RCC_PREDICATES = {
    "DC": "RCC_Disconnected", "EC": "RCC_Externally_Connected", "PO": "RCC_Partial_Overlap",
    "EQ": "RCC_Equal", "TPP": "RCC_Tangential_Proper_Part", "NTPP": "RCC_Non_Tangential_Proper_Part",
    "TPPi": "RCC_Tangential_Proper_Part_Inverse", "NTPPi": "RCC_Non_Tangential_Proper_Part_Inverse",
}


class ComprehensionError(ValueError):
    pass


class Unexpressible(ValueError):
    pass


def relation_predicate(alg: str, rel: str) -> str:
    if alg == "rcc8":
        return RCC_PREDICATES[rel]
    return f"{alg}_{rel}"


# -- grounding rules ----------------------------------------------------------------


@dataclass(frozen=True)
class GroundingRule:
    name: str
    varlist: tuple[str, str]
    logic: tuple[Tree, ...]
    algebra: str
    relations: tuple[str, ...]
    args: tuple[str, str]
    tv: TruthValue = TruthValue()

    @property
    def relation(self) -> str | None:
        return self.relations[0] if len(self.relations) == 1 else None

    def problems(self) -> list[str]:
        out = []
        logic_vars = {n for t in self.logic for k, n in tree_nodes(t)
                      if AtomKind(k) == AtomKind.VariableNode}
        if logic_vars != set(self.varlist) or set(self.args) != set(self.varlist):
            out.append(f"{self.name}: variable sets differ between logic and relation sides")
        alg = algebra(self.algebra)
        for r in self.relations:
            alg.bit(r)
        return out

    def to_atoms(self, store: AtomStore | None = None) -> int:
        """The rule as ``LambdaLink(vars, EquivalenceLink(logic, relation))``."""
        store = store if store is not None else AtomStore()
        body = self.logic[0] if len(self.logic) == 1 else link("AndLink", *self.logic)
        rel = self.relation or "|".join(self.relations)
        rhs = link("EvaluationLink", node("PredicateNode", relation_predicate(self.algebra, rel)),
                   link("ListLink", *(node("VariableNode", a) for a in self.args)))
        eq = store.add(link("EquivalenceLink", body, rhs), self.tv)
        return store.add(link("LambdaLink", link("ListLink", *(node("VariableNode", v) for v in self.varlist)),
                              store.key(eq)))


def load_grounding_rules(text: str) -> list[GroundingRule]:
    out = []
    for form in parse_all(text):
        if not (isinstance(form, list) and form and form[0] == Sym("ground")):
            raise SexprError("expected (ground ...)", *(_pos(form)))
        name = str(form[1])
        varlist, logic, rel, tv = (), [], None, TruthValue()
        for part in form[2:]:
            tag = str(part[0])
            if tag == "vars":
                varlist = tuple(str(v) for v in part[1:])
            elif tag == "logic":
                logic.extend(expr_to_tree(e) for e in part[1:])
            elif tag == "relation":
                rels = part[2]
                rels = tuple(str(r) for r in rels) if isinstance(rels, list) else (str(rels),)
                rel = (str(part[1]), rels, (str(part[3]), str(part[4])))
            elif tag == "stv":
                tv = TruthValue(float(str(part[1])), float(str(part[2])))
            else:
                raise SexprError(f"unknown grounding part {tag!r}", *(_pos(part)))
        if rel is None or not logic:
            raise SexprError(f"grounding rule {name} needs logic and relation", *(_pos(form)))
        out.append(GroundingRule(name, varlist, tuple(logic), rel[0], rel[1], rel[2], tv))
    return out


def _pos(expr):
    if isinstance(expr, Sym):
        return expr.line, expr.col
    if isinstance(expr, list) and expr:
        return _pos(expr[0])
    return 0, 0


# -- bundles ---------------------------------------------------------------------------


@dataclass
class LanguageBundle:
    name: str
    dictionary: Dictionary
    rules: RuleBase
    grounding: list[GroundingRule]
    perception: list[GroundingRule] = field(default_factory=list)
    function_words: list[str] = field(default_factory=list)
    max_tokens: int = 14

    def phrases(self) -> dict[tuple[str, str], list[str]]:
        """Relation -> content words of its canonical logic form (the lexical map)."""
        out: dict[tuple[str, str], list[str]] = {}
        for r in self.grounding:
            if r.relation is None:
                continue
            words = [n for t in r.logic for k, n in tree_nodes(t)
                     if AtomKind(k) in (AtomKind.PredicateNode, AtomKind.ConceptNode)]
            out.setdefault((r.algebra, r.relation), words)
        return out


def data_root(override: str | os.PathLike | None = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("symground") / "data"))


def bundle_names(root: str | os.PathLike | None = None) -> list[str]:
    base = data_root(root) / "bundles"
    return sorted(p.name for p in base.iterdir() if (p / "bundle.json").exists())


_CACHE: dict[tuple[str, str], LanguageBundle] = {}


def load_bundle(name_or_path: str | os.PathLike, root: str | os.PathLike | None = None) -> LanguageBundle:
    path = Path(name_or_path)
    if not (path / "bundle.json").exists():
        path = data_root(root) / "bundles" / str(name_or_path)
    if not (path / "bundle.json").exists():
        raise FileNotFoundError(f"no bundle {name_or_path!r}")
    key = (str(path.resolve()), "")
    if key in _CACHE:
        return _CACHE[key]
    meta = json.loads((path / "bundle.json").read_text(encoding="utf-8"))
    d = Dictionary()
    rules = RuleBase()
    ground: list[GroundingRule] = []
    perception: list[GroundingRule] = []
    words: list[str] = []
    for inc in meta.get("include", []):
        sub = load_bundle(path.parent / inc)
        d = d.merged(sub.dictionary)
        rules = rules.merged(sub.rules)
        ground += [g for g in sub.grounding if g.name not in {x.name for x in ground}]
        perception += [g for g in sub.perception if g.name not in {x.name for x in perception}]
        words += [w for w in sub.function_words if w not in words]
    for f in meta.get("dictionary", []):
        d = d.merged(load_dictionary((path / f).read_text(encoding="utf-8")))
    for f in meta.get("rules", []):
        rules = rules.merged(load_rules((path / f).read_text(encoding="utf-8")))
    own = []
    for f in meta.get("grounding", []):
        own += load_grounding_rules((path / f).read_text(encoding="utf-8"))
    # a bundle's own rules take precedence when expressing
    ground = own + [g for g in ground if g.name not in {x.name for x in own}]
    for f in meta.get("perception", []):
        perception += load_grounding_rules((path / f).read_text(encoding="utf-8"))
    words += [w for w in meta.get("function_words", []) if w not in words]
    b = LanguageBundle(meta.get("name", path.name), d, rules, ground, perception, words,
                       meta.get("max_tokens", 14))
    _CACHE[key] = b
    return b


# -- comprehension ------------------------------------------------------------------------


@dataclass
class Comprehension:
    store: AtomStore
    clauses: list[str]
    alternatives: list[int]
    deps: list[DepGraph]
    applied: list[AppliedResult]
    connective: str = "and"

    @property
    def ambiguous(self) -> bool:
        return any(n > 1 for n in self.alternatives)


_CONJ = re.compile(r"\s*,\s*(and|or)\s+", re.IGNORECASE)


def split_clauses(sentence: str) -> tuple[list[str], str]:
    parts = _CONJ.split(sentence.strip())
    clauses = [parts[0]] + parts[2::2]
    conns = {c.lower() for c in parts[1::2]}
    if len(conns) > 1:
        raise ComprehensionError("mixing ', and' with ', or' in one sentence is not supported")
    return [c.strip() for c in clauses if c.strip()], (conns.pop() if conns else "and")


def _subject_prefix(tokens: list[str], bundle: LanguageBundle) -> list[str]:
    quals = bundle.rules.qualifiers
    for k, t in enumerate(tokens):
        if t.lower() == "is":
            end = k + 1
            while end < len(tokens) and tokens[end].lower() in quals:
                end += 1
            return tokens[:end]
    return []


def comprehend(sentence: str, bundle: LanguageBundle, store: AtomStore | None = None) -> Comprehension:
    """parse -> extract -> apply -> normalize; the top-ranked linkage is used."""
    clauses, conn = split_clauses(sentence)
    d = bundle.dictionary
    toks = [tokenize(c, d) for c in clauses]
    # only the last clause may carry the final stop
    toks = [[t for t in ts if t != "."] for ts in toks[:-1]] + toks[-1:]
    return comprehend_tokens(toks, bundle, conn, store, clauses)


def comprehend_tokens(clauses: list[list[str]], bundle: LanguageBundle, conn: str = "and",
                      store: AtomStore | None = None, texts: list[str] | None = None) -> Comprehension:
    """``comprehend`` over already tokenized clauses."""
    store = store if store is not None else AtomStore()
    d = bundle.dictionary
    alternatives, deps, applied = [], [], []
    first_tokens: list[str] = []
    for k, toks in enumerate(clauses):
        try:
            result = parse(toks, d)
        except ParseError as exc:
            raise ComprehensionError(str(exc)) from None
        if not result and k > 0 and first_tokens:
            # elided subject: "X is A, or B" reads as "X is A, or X is B"
            try:
                result = parse(_subject_prefix(first_tokens, bundle) + list(toks), d)
            except ParseError:
                pass
        if not result:
            raise ComprehensionError(f"no parse for {' '.join(toks)!r}")
        if k == 0:
            first_tokens = list(toks)
        dep = extract(result.top, d)
        res = apply(bundle.rules, dep, store)
        alternatives.append(len(result))
        deps.append(dep)
        applied.append(res)
    if conn == "or" and len(applied) > 1:
        parts = []
        for res in applied:
            trees = [store.key(c) for c in res.core]
            parts.append(trees[0] if len(trees) == 1 else link("AndLink", *trees))
        store.add(link("OrLink", *parts))
    normalize_instances(store)
    texts = texts if texts is not None else [" ".join(t) for t in clauses]
    return Comprehension(store, texts, alternatives, deps, applied, conn)


# -- grounding ----------------------------------------------------------------------------


def _natural(name: str):
    return [int(p) if p.isdigit() else p for p in re.split(r"(\d+)", name)]


@dataclass(frozen=True)
class Fact:
    algebra: str
    x: str
    y: str
    mask: int

    def oriented(self) -> "Fact":
        if _natural(self.x) <= _natural(self.y):
            return self
        alg = algebra(self.algebra)
        return Fact(self.algebra, self.y, self.x, alg.converse_set(self.mask))

    def __str__(self):
        alg = algebra(self.algebra)
        return f"{self.algebra} {self.x} {self.y} {alg.format(self.mask)}"


@dataclass
class Grounding:
    facts: list[Fact]
    unmatched: list[str] = field(default_factory=list)

    def algebras(self) -> list[str]:
        return sorted({f.algebra for f in self.facts})

    def network(self, alg: str | Algebra) -> ConstraintNetwork:
        a = algebra(alg) if isinstance(alg, str) else alg
        net = ConstraintNetwork(a)
        for f in sorted(self.facts, key=lambda f: (_natural(f.x), _natural(f.y))):
            if f.algebra == a.name:
                net.set(f.x, f.y, f.mask)
        return net

    def relations(self) -> dict[tuple[str, str, str], int]:
        out: dict[tuple[str, str, str], int] = {}
        for f in self.facts:
            key = (f.algebra, f.x, f.y)
            out[key] = out.get(key, algebra(f.algebra).full) & f.mask
        return out

    def text(self) -> str:
        lines = []
        for (alg, x, y), m in sorted(self.relations().items(), key=lambda kv: (kv[0][0], _natural(kv[0][1]), _natural(kv[0][2]))):
            lines.append(f"{alg} {x} {y} {algebra(alg).format(m)}")
        return "\n".join(lines) + ("\n" if lines else "")


def _is_instance_level(store: AtomStore, i: int) -> bool:
    ids = {i} | store.descendants(i)
    return any(store[a].name is not None and "@" in store[a].name for a in ids)


def _is_scaffolding(store: AtomStore, i: int) -> bool:
    a = store[i]
    kinds = {store[t].kind for t in store.descendants(i)}
    return bool(kinds & {AtomKind.DefinedLinguisticPredicateNode, AtomKind.DefinedLinguisticConceptNode,
                         AtomKind.InterpretationNode, AtomKind.SpecificEntityNode}) or \
        (a.kind in (AtomKind.InheritanceLink, AtomKind.ImplicationLink)
         and store[a.targets[0]].kind.is_node and store[a.targets[1]].kind.is_node)


def assertions(store: AtomStore, instances: bool = False) -> list[int]:
    """Root atoms that carry content: not linguistic scaffolding, general-level unless ``instances``."""
    return [i for i in store.roots()
            if not store[i].kind.is_node and not _is_scaffolding(store, i)
            and (instances or not _is_instance_level(store, i))]


def _match_rules(rules: list[GroundingRule], store: AtomStore, allowed: set[int], must: int | None = None):
    found = []
    used: set[int] = set()
    for rule in rules:
        for b in match_trees(list(rule.logic), list(rule.varlist), store, allowed):
            trees = {v: store.key(a) for v, a in b.items()}
            ids = {store.find(instantiate(t, trees, set(rule.varlist))) for t in rule.logic}
            if must is not None and must not in ids:
                continue
            x, y = (store[b[v]].name for v in rule.args)
            if x is None or y is None:
                continue
            alg = algebra(rule.algebra)
            found.append((Fact(rule.algebra, x, y, alg.rset(rule.relations)).oriented(), rule, b))
            used |= ids
    return found, used


def ground(store: AtomStore, rules: list[GroundingRule] | LanguageBundle,
           instances: bool = False) -> Grounding:
    """Relation facts for every grounding-rule match over the asserted atoms."""
    if isinstance(rules, LanguageBundle):
        rules = rules.grounding
    roots = assertions(store, instances)
    plain = {i for i in roots if store[i].kind not in (AtomKind.NotLink, AtomKind.OrLink)}
    facts, used = _match_rules(rules, store, plain)
    out = [f for f, _, _ in facts]
    consumed = set(used)
    for i in roots:
        a = store[i]
        if a.kind == AtomKind.NotLink:
            child = a.targets[0]
            found, u = _match_rules(rules, store, plain | {child}, must=child)
            if found:
                for f, _, _ in found:
                    alg = algebra(f.algebra)
                    out.append(Fact(f.algebra, f.x, f.y, alg.full & ~f.mask))
                consumed.add(i)
        elif a.kind == AtomKind.OrLink:
            merged: dict = {}
            ok = True
            for child in a.targets:
                c = store[child]
                allowed = set(c.targets) if c.kind == AtomKind.AndLink else {child}
                found, _ = _match_rules(rules, store, allowed)
                if len(found) != 1:
                    ok = False
                    break
                f = found[0][0]
                key = (f.algebra, f.x, f.y)
                merged[key] = merged.get(key, 0) | f.mask
            if ok and len(merged) == 1:
                (alg, x, y), m = next(iter(merged.items()))
                out.append(Fact(alg, x, y, m))
                consumed.add(i)
    unmatched = [store.text(i) for i in roots if i not in consumed]
    return Grounding(out, unmatched)


# -- expression ------------------------------------------------------------------------


def _rule_for(bundle_rules: list[GroundingRule], alg: str, rel: str) -> GroundingRule | None:
    for r in bundle_rules:
        if r.algebra == alg and r.relation == rel:
            return r
    return None


def express_relation(alg: str, rel: str, x: str, y: str, bundle: LanguageBundle) -> list[Tree]:
    """Canonical logic trees for one base relation, swapping arguments via the converse if needed."""
    a = algebra(alg)
    rule = _rule_for(bundle.grounding, alg, rel)
    if rule is None:
        rule = _rule_for(bundle.grounding, alg, a.converse(rel))
        x, y = y, x
    if rule is None:
        raise Unexpressible(f"bundle {bundle.name} has no phrase for {alg} {rel}")
    bx, by = rule.args
    binding = {bx: node("ConceptNode", x), by: node("ConceptNode", y)}
    return [instantiate(t, binding, set(rule.varlist)) for t in rule.logic]


def express(facts, bundle: LanguageBundle, store: AtomStore | None = None) -> AtomStore:
    """Inverse of ``ground`` for singleton (and complemented singleton) relation sets."""
    store = store if store is not None else AtomStore()
    if isinstance(facts, ConstraintNetwork):
        net = facts
        items = [(net.algebra.name, a, b, m) for (a, b), m in net.constraints.items()]
    elif isinstance(facts, Grounding):
        items = [(alg, x, y, m) for (alg, x, y), m in facts.relations().items()]
    else:
        items = [(f.algebra, f.x, f.y, f.mask) for f in facts]
    for alg, x, y, m in items:
        a = algebra(alg)
        names = a.names(m)
        if len(names) == 1:
            for t in express_relation(alg, names[0], x, y, bundle):
                store.add(t)
        elif len(names) == len(a.relations) - 1:
            missing = a.names(a.full & ~m)[0]
            trees = express_relation(alg, missing, x, y, bundle)
            if len(trees) != 1:
                raise Unexpressible(f"negated {alg} {missing} has no single-atom form in {bundle.name}")
            store.add(link("NotLink", trees[0]))
        elif m != a.full:
            raise Unexpressible(f"{alg} {x} {y} {a.format(m)} is neither a base relation nor its complement")
    return store
