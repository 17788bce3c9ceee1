"""Mapping rules (G, A) from dependency graphs to atoms.

Rule file syntax (s-expressions, ``;`` comments)::

    (qualifier often 0.7)
    (rule svo
      (vars $v $s $o)
      (g (_subj $v $s) (_obj $v $o))
      (absent-attr NEGATIVE-FLAG $v)
      (a (EvaluationLink (PredicateNode $v) (ListLink (ConceptNode $s) (ConceptNode $o))))
      (map (_subj $v $s) ())
      (map (_obj $v $o) ()))

Template nodes whose name starts with ``$`` are slots filled with the word
instance bound to that variable.  ``map`` sends each edge of G to the
hyperlink of A at the given child-index path.

Guards: ``(absent (REL $x _))``, ``(attr NAME $x VALUE)``,
``(absent-attr NAME $x)``, ``(not-qualifier $x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .atoms import (
    AtomKind, AtomStore, Tree, TruthValue, expr_to_tree, link, node, tree_nodes,
)
from .relex import RELATION_NAMES, DepGraph, DepRelation
from .sexpr import Sym, SexprError, parse_all

LINGUISTIC_KINDS = {
    AtomKind.DefinedLinguisticConceptNode,
    AtomKind.DefinedLinguisticPredicateNode,
    AtomKind.InterpretationNode,
}

Edge = tuple  # (relation name, var, var)


@dataclass(frozen=True)
class Guard:
    kind: str          # absent | attr | absent-attr | not-qualifier
    args: tuple


@dataclass(frozen=True)
class MappingRule:
    name: str
    varlist: tuple[str, ...]
    edges: tuple[Edge, ...]
    template: Tree
    edgemap: tuple[tuple[Edge, tuple[int, ...]], ...]
    guards: tuple[Guard, ...] = ()

    def template_vars(self) -> list[str]:
        out = []
        for k, name in tree_nodes(self.template):
            if isinstance(name, str) and name.startswith("$") and name not in out:
                out.append(name)
        return out


@dataclass
class RuleBase:
    rules: list[MappingRule] = field(default_factory=list)
    qualifiers: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        names = [r.name for r in self.rules]
        dup = {n for n in names if names.count(n) > 1}
        if dup:
            raise ValueError(f"duplicate rule names {sorted(dup)}")

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def merged(self, other: "RuleBase") -> "RuleBase":
        have = {r.name for r in self.rules}
        return RuleBase(self.rules + [r for r in other.rules if r.name not in have],
                        {**self.qualifiers, **other.qualifiers})


def _sym(x) -> str:
    return x.name if isinstance(x, Sym) else str(x)


def _subtree(tree: Tree, path: tuple[int, ...]) -> Tree | None:
    for i in path:
        kind, rest = tree
        if AtomKind(kind).is_node or not (0 <= i < len(rest)):
            return None
        tree = rest[i]
    return tree


def _slot_vars(tree: Tree) -> set[str]:
    return {name for k, name in tree_nodes(tree)
            if isinstance(name, str) and name.startswith("$")}


def load_rules(text: str) -> RuleBase:
    rules: list[MappingRule] = []
    qualifiers: dict[str, float] = {}
    for form in parse_all(text):
        if not isinstance(form, list) or not form or not isinstance(form[0], Sym):
            raise SexprError("expected (rule ...) or (qualifier ...)", 0, 0)
        head = form[0]
        if head.name == "qualifier":
            qualifiers[_sym(form[1])] = float(_sym(form[2]))
            continue
        if head.name != "rule":
            raise SexprError(f"unknown form {head.name!r}", head.line, head.col)
        name = _sym(form[1])
        varlist: tuple = ()
        edges: list = []
        template = None
        edgemap: list = []
        guards: list = []
        for part in form[2:]:
            tag = _sym(part[0])
            if tag == "vars":
                varlist = tuple(_sym(v) for v in part[1:])
            elif tag == "g":
                edges.extend(tuple(_sym(x) for x in e) for e in part[1:])
            elif tag == "a":
                template = expr_to_tree(part[1])
            elif tag == "map":
                edge = tuple(_sym(x) for x in part[1])
                path = tuple(int(_sym(x)) for x in part[2])
                edgemap.append((edge, path))
            elif tag in ("absent",):
                guards.append(Guard(tag, tuple(_sym(x) for x in part[1])))
            elif tag in ("attr", "absent-attr", "not-qualifier"):
                guards.append(Guard(tag, tuple(_sym(x) for x in part[1:])))
            else:
                raise SexprError(f"unknown rule part {tag!r}", part[0].line, part[0].col)
        if template is None:
            raise SexprError(f"rule {name} has no template", head.line, head.col)
        rules.append(MappingRule(name, varlist, tuple(edges), template, tuple(edgemap), tuple(guards)))
    return RuleBase(rules, qualifiers)


def validate_rule(rule: MappingRule) -> list[str]:
    """Violations of the variable-list and single-hyperedge conditions."""
    problems = []
    g_vars = []
    for e in rule.edges:
        if e[0] not in RELATION_NAMES:
            problems.append(f"edge {e} uses unknown relation {e[0]}")
        for v in e[1:]:
            if v not in g_vars:
                g_vars.append(v)
    a_vars = rule.template_vars()
    if set(rule.varlist) != set(g_vars):
        problems.append(f"vars {list(rule.varlist)} differ from G variables {g_vars}")
    if set(rule.varlist) != set(a_vars):
        problems.append(f"vars {list(rule.varlist)} differ from A variables {a_vars}")
    if len(set(rule.varlist)) != len(rule.varlist):
        problems.append("duplicate variable in vars")
    mapped: dict[Edge, list] = {}
    for edge, path in rule.edgemap:
        mapped.setdefault(edge, []).append(path)
    for e in rule.edges:
        paths = mapped.get(e, [])
        if len(paths) != 1:
            problems.append(f"edge {e} maps to {len(paths)} hyperedges (need exactly one)")
            continue
        target = _subtree(rule.template, paths[0])
        if target is None or AtomKind(target[0]).is_node:
            problems.append(f"edge {e} maps to {paths[0]}, which is not a hyperlink of A")
            continue
        missing = set(e[1:]) - _slot_vars(target)
        if missing:
            problems.append(f"hyperedge for {e} does not contain {sorted(missing)}")
    for edge in mapped:
        if edge not in rule.edges:
            problems.append(f"map entry for {edge}, which is not an edge of G")
    for kind, name in tree_nodes(rule.template):
        k = AtomKind(kind)
        if k.is_node and not str(name).startswith("$") and k not in LINGUISTIC_KINDS:
            problems.append(f"template node {k.value} {name!r} is neither a word slot nor a linguistic node")
    return problems


# -- application -----------------------------------------------------------------


@dataclass(frozen=True)
class RuleApplication:
    rule: str
    binding: tuple[tuple[str, int], ...]   # variable -> token index
    edge_atoms: tuple[tuple[Edge, int], ...]
    root: int


@dataclass
class AppliedResult:
    store: AtomStore
    produced: set[int]
    core: list[int]
    applications: list[RuleApplication]
    instances: dict[int, str]


def _matches(rule: MappingRule, dep: DepGraph, qualifiers) -> Iterator[dict[str, int]]:
    rels = sorted(dep.relations)

    def rec(k: int, b: dict):
        if k == len(rule.edges):
            yield dict(b)
            return
        name, x, y = rule.edges[k]
        for r in rels:
            if r.name != name:
                continue
            if b.get(x, r.head) != r.head or b.get(y, r.dependent) != r.dependent:
                continue
            if x != y and r.head == r.dependent:
                continue
            nb = dict(b)
            nb[x] = r.head
            nb[y] = r.dependent
            if len(set(nb.values())) != len(nb):
                continue
            yield from rec(k + 1, nb)

    for b in rec(0, {}):
        if all(_guard_ok(g, b, dep, qualifiers) for g in rule.guards):
            yield b


def _guard_ok(g: Guard, b: dict, dep: DepGraph, qualifiers) -> bool:
    if g.kind == "absent":
        name, x, y = g.args
        return not any(r.name == name and r.head == b[x] and (y == "_" or r.dependent == b.get(y))
                       for r in dep.relations)
    if g.kind == "attr":
        name, x, value = g.args
        return dep.attr(name, b[x]) == value
    if g.kind == "absent-attr":
        name, x = g.args
        return dep.attr(name, b[x]) is None
    if g.kind == "not-qualifier":
        return dep.lemma(b[g.args[0]]) not in qualifiers
    raise ValueError(f"unknown guard {g.kind}")


def _fill(tree: Tree, names: dict[str, str]) -> Tree:
    kind, rest = tree
    if AtomKind(kind).is_node:
        if isinstance(rest, str) and rest.startswith("$"):
            return (AtomKind(kind), names[rest])
        return tree
    return (kind, tuple(_fill(c, names) for c in rest))


def apply(rules: RuleBase, dep: DepGraph, store: AtomStore | None = None) -> AppliedResult:
    """Fire every rule on ``dep`` and add scaffolding for each word instance."""
    store = store if store is not None else AtomStore()
    produced: set[int] = set()
    core: list[int] = []
    applications: list[RuleApplication] = []
    quals = rules.qualifiers
    heads = {r.head for r in dep.relations}
    in_rel = {r.head for r in dep.relations} | {r.dependent for r in dep.relations}
    content = [t.index for t in dep.tokens
               if (t.index in in_rel or t.pos == "noun") and t.lemma not in quals and t.pos != "wall"]
    inst: dict[int, str] = {i: store.fresh_name(dep.tokens[i].inst) for i in content}

    qualifier_tv: dict[int, TruthValue] = {}
    for r in sorted(dep.relations):
        if r.name == "_advmod" and dep.lemma(r.dependent) in quals:
            qualifier_tv[r.head] = TruthValue(quals[dep.lemma(r.dependent)], 1.0)

    for rule in rules:
        for b in _matches(rule, dep, quals):
            tv = qualifier_tv.get(b[rule.varlist[0]]) if rule.varlist else None
            tree = _fill(rule.template, {v: inst[i] for v, i in b.items()})
            root = store.add(tree, tv)
            produced.add(root)
            produced |= store.descendants(root)
            if root not in core:
                core.append(root)
            edge_atoms = []
            for edge, path in rule.edgemap:
                edge_atoms.append((edge, store.find(_subtree(tree, path))))
            applications.append(RuleApplication(rule.name, tuple(sorted(b.items())),
                                                tuple(edge_atoms), root))

    def add(tree):
        i = store.add(tree)
        produced.add(i)
        produced.update(store.descendants(i))

    C, P = AtomKind.ConceptNode, AtomKind.PredicateNode
    for i in content:
        t = dep.tokens[i]
        name = inst[i]
        if i in heads:
            add(link("ImplicationLink", node(P, name), node(P, t.lemma)))
        else:
            add(link("InheritanceLink", node(C, name), node(C, t.lemma)))
        if t.pos == "noun" and dep.attr("definite-FLAG", i) == "T":
            add(link("EvaluationLink", node("DefinedLinguisticPredicateNode", "definite"),
                     link("ListLink", node(C, name))))
        g = dep.attr("gender", i) if t.proper else None
        if g:
            # a gendered proper name is a specific entity
            se = node("SpecificEntityNode", name)
            add(link("InheritanceLink", se, node("DefinedLinguisticConceptNode", g)))
            add(link("InheritanceLink", se, node(C, t.lemma)))
        if "-" in t.lemma and t.lemma.rsplit("-", 1)[1].isdigit():
            add(link("EvaluationLink", node("DefinedLinguisticPredicateNode", "number"),
                     link("ListLink", node(C, name), node("NumberNode", t.lemma.rsplit("-", 1)[1]))))
        tense = dep.attr("tense", i)
        if tense and i in heads:
            add(link("InheritanceLink", node(P, name), node("DefinedLinguisticConceptNode", tense)))
    sentence = store.fresh_name("sentence")
    add(link("InheritanceLink",
             node("InterpretationNode", f"{sentence}_parse_0_interpretation_$X"),
             node("DefinedLinguisticConceptNode", "DeclarativeSpeechAct")))
    return AppliedResult(store, produced, core, applications, inst)
