"""Typed, deduplicated hypergraph store for logic expressions.

Atoms are either nodes (kind + name) or links (kind + ordered targets).  An
atom's *key* is a nested tuple -- ``(kind, name)`` for nodes and
``(kind, (child_key, ...))`` for links -- and doubles as a store-independent
tree, which is what patterns and templates are written in.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .sexpr import SexprError, Sym, parse_all, quote


class AtomKind(str, Enum):
    ConceptNode = "ConceptNode"
    PredicateNode = "PredicateNode"
    NumberNode = "NumberNode"
    VariableNode = "VariableNode"
    SpecificEntityNode = "SpecificEntityNode"
    InterpretationNode = "InterpretationNode"
    DefinedLinguisticConceptNode = "DefinedLinguisticConceptNode"
    DefinedLinguisticPredicateNode = "DefinedLinguisticPredicateNode"
    EvaluationLink = "EvaluationLink"
    InheritanceLink = "InheritanceLink"
    ImplicationLink = "ImplicationLink"
    ListLink = "ListLink"
    AndLink = "AndLink"
    OrLink = "OrLink"
    NotLink = "NotLink"
    LambdaLink = "LambdaLink"
    EquivalenceLink = "EquivalenceLink"
    SatisfyingSetLink = "SatisfyingSetLink"

    def __str__(self):
        return self.value

    @property
    def is_node(self) -> bool:
        return self.value.endswith("Node")


NODE_KINDS = frozenset(k for k in AtomKind if k.is_node)
LINK_KINDS = frozenset(k for k in AtomKind if not k.is_node)

# confidence = count / (count + KAPPA)
KAPPA = 1.0

Tree = tuple  # (kind, name) | (kind, (Tree, ...))


@dataclass(frozen=True)
class TruthValue:
    strength: float = 1.0
    count: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.strength <= 1.0:
            raise ValueError(f"strength {self.strength} outside [0, 1]")
        if self.count < 0:
            raise ValueError(f"negative count {self.count}")

    @property
    def confidence(self) -> float:
        return self.count / (self.count + KAPPA)

    @classmethod
    def from_confidence(cls, strength: float, confidence: float) -> "TruthValue":
        if not 0.0 <= confidence < 1.0:
            raise ValueError("confidence must lie in [0, 1)")
        return cls(strength, KAPPA * confidence / (1.0 - confidence))


DEFAULT_TV = TruthValue()


@dataclass(frozen=True)
class Atom:
    kind: AtomKind
    name: str | None = None
    targets: tuple[int, ...] = ()


def node(kind: Union[AtomKind, str], name: str) -> Tree:
    kind = AtomKind(kind)
    if not kind.is_node:
        raise ValueError(f"{kind} is not a node kind")
    return (kind, name)


def link(kind: Union[AtomKind, str], *children: Tree) -> Tree:
    kind = AtomKind(kind)
    if kind.is_node:
        raise ValueError(f"{kind} is not a link kind")
    return (kind, tuple(children))


def is_node_tree(tree: Tree) -> bool:
    return AtomKind(tree[0]).is_node


def tree_text(tree: Tree) -> str:
    kind, rest = tree
    if AtomKind(kind).is_node:
        return f"({kind} {quote(rest)})"
    return f"({kind} " + " ".join(tree_text(c) for c in rest) + ")"


def tree_nodes(tree: Tree) -> Iterator[Tree]:
    """Every node leaf of ``tree``, left to right."""
    if is_node_tree(tree):
        yield tree
    else:
        for child in tree[1]:
            yield from tree_nodes(child)


@dataclass(frozen=True)
class AtomPattern:
    """An atom tree whose listed VariableNode leaves are binding sites."""

    tree: Tree
    varlist: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.varlist)) != len(self.varlist):
            raise ValueError("duplicate variable in varlist")
        used = {n for k, n in tree_nodes(self.tree) if k == AtomKind.VariableNode}
        missing = used - set(self.varlist)
        if missing:
            raise ValueError(f"variables {sorted(missing)} not declared in varlist")

    @classmethod
    def of(cls, tree: Tree) -> "AtomPattern":
        """Pattern whose varlist is every VariableNode in order of appearance."""
        seen: list[str] = []
        for k, n in tree_nodes(tree):
            if k == AtomKind.VariableNode and n not in seen:
                seen.append(n)
        return cls(tree, tuple(seen))


Binding = dict  # variable name -> atom id


class AtomStore:
    """Deduplicating atom table; atom ids are dense integers in insertion order."""

    def __init__(self):
        self._atoms: list[Atom] = []
        self._tvs: list[TruthValue] = []
        self._index: dict[tuple, int] = {}
        self._by_kind: dict[AtomKind, list[int]] = {}
        self._keys: list[Tree] = []
        self.counters: dict[str, int] = {}

    # -- basic access -------------------------------------------------------

    def __len__(self) -> int:
        return len(self._atoms)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self._atoms)))

    def __getitem__(self, atom_id: int) -> Atom:
        return self._atoms[atom_id]

    def __contains__(self, tree: Tree) -> bool:
        return self.find(tree) is not None

    def tv(self, atom_id: int) -> TruthValue:
        return self._tvs[atom_id]

    def set_tv(self, atom_id: int, tv: TruthValue) -> None:
        self._tvs[atom_id] = tv

    def key(self, atom_id: int) -> Tree:
        return self._keys[atom_id]

    def text(self, atom_id: int) -> str:
        return tree_text(self._keys[atom_id])

    def of_kind(self, kind: AtomKind) -> list[int]:
        return list(self._by_kind.get(AtomKind(kind), ()))

    def find(self, tree: Tree) -> int | None:
        return self._index.get(_freeze(tree))

    # -- construction ---------------------------------------------------------

    def intern(
        self,
        kind: Union[AtomKind, str],
        name_or_targets: Union[str, Sequence[int]],
        tv: TruthValue | None = None,
    ) -> int:
        kind = AtomKind(kind)
        if kind.is_node:
            if not isinstance(name_or_targets, str):
                raise ValueError(f"{kind} needs a name")
            key = (kind, name_or_targets)
            atom = Atom(kind, name_or_targets)
        else:
            if isinstance(name_or_targets, str):
                raise ValueError(f"name given for link kind {kind}")
            targets = tuple(name_or_targets)
            for t in targets:
                if not (isinstance(t, int) and 0 <= t < len(self._atoms)):
                    raise ValueError(f"unresolvable target id {t!r}")
            key = (kind, tuple(self._keys[t] for t in targets))
            atom = Atom(kind, None, targets)
        existing = self._index.get(key)
        if existing is not None:
            if tv is not None and tv.count > self._tvs[existing].count:
                self._tvs[existing] = tv
            return existing
        atom_id = len(self._atoms)
        self._atoms.append(atom)
        self._tvs.append(tv if tv is not None else DEFAULT_TV)
        self._keys.append(key)
        self._index[key] = atom_id
        self._by_kind.setdefault(kind, []).append(atom_id)
        return atom_id

    def add(self, tree: Tree, tv: TruthValue | None = None) -> int:
        """Intern a whole tree bottom-up; ``tv`` applies to the root only."""
        kind, rest = tree
        if AtomKind(kind).is_node:
            return self.intern(kind, rest, tv)
        return self.intern(kind, [self.add(c) for c in rest], tv)

    def fresh_name(self, base: str) -> str:
        if not base:
            raise ValueError("empty instance base")
        k = self.counters.get(base, 0) + 1
        self.counters[base] = k
        return f"{base}@{k}"

    def fresh_instance(self, base: str, kind: AtomKind = AtomKind.ConceptNode) -> int:
        return self.intern(kind, self.fresh_name(base))

    def copy(self) -> "AtomStore":
        other = AtomStore()
        for i in self:
            a = self._atoms[i]
            other.intern(a.kind, a.name if a.kind.is_node else a.targets, self._tvs[i])
        other.counters = dict(self.counters)
        return other

    def update(self, other: "AtomStore") -> dict[int, int]:
        """Copy every atom of ``other`` into this store; returns the id map."""
        mapping: dict[int, int] = {}
        for i in other:
            a = other[i]
            if a.kind.is_node:
                mapping[i] = self.intern(a.kind, a.name, other.tv(i))
            else:
                mapping[i] = self.intern(a.kind, [mapping[t] for t in a.targets], other.tv(i))
        return mapping

    # -- structure --------------------------------------------------------------

    def roots(self) -> list[int]:
        """Atoms that are not the target of any link, in id order."""
        targeted = {t for a in self._atoms for t in a.targets}
        return [i for i in self if i not in targeted]

    def descendants(self, atom_id: int) -> set[int]:
        out: set[int] = set()
        todo = list(self._atoms[atom_id].targets)
        while todo:
            t = todo.pop()
            if t not in out:
                out.add(t)
                todo.extend(self._atoms[t].targets)
        return out

    def signature(self) -> frozenset:
        return frozenset(zip(self._keys, self._tvs))

    def __eq__(self, other):
        if not isinstance(other, AtomStore):
            return NotImplemented
        return self.signature() == other.signature()

    def __repr__(self):
        return f"<AtomStore {len(self)} atoms>"


def _freeze(tree: Tree) -> tuple:
    kind, rest = tree
    kind = AtomKind(kind)
    if kind.is_node:
        return (kind, rest)
    return (kind, tuple(_freeze(c) for c in rest))


# -- pattern matching -----------------------------------------------------------


def _unify(store: AtomStore, tree: Tree, atom_id: int, varset, binding: dict) -> Iterator[dict]:
    kind, rest = tree
    kind = AtomKind(kind)
    if kind == AtomKind.VariableNode and rest in varset:
        bound = binding.get(rest)
        if bound is None:
            b = dict(binding)
            b[rest] = atom_id
            yield b
        elif bound == atom_id:
            yield binding
        return
    atom = store[atom_id]
    if atom.kind != kind:
        return
    if kind.is_node:
        if atom.name == rest:
            yield binding
        return
    if len(rest) != len(atom.targets):
        return
    yield from _unify_seq(store, rest, atom.targets, varset, binding)


def _unify_seq(store, trees, ids, varset, binding):
    if not trees:
        yield binding
        return
    for b in _unify(store, trees[0], ids[0], varset, binding):
        yield from _unify_seq(store, trees[1:], ids[1:], varset, b)


def _candidates(store: AtomStore, tree: Tree, varset) -> Iterable[int]:
    kind, rest = tree
    if AtomKind(kind) == AtomKind.VariableNode and rest in varset:
        return iter(store)
    return store.of_kind(AtomKind(kind))


def match_trees(
    trees: Sequence[Tree],
    varlist: Sequence[str],
    store: AtomStore,
    allowed: Iterable[int] | None = None,
) -> list[Binding]:
    """Bindings making every tree in ``trees`` an existing atom (a conjunction).

    ``allowed`` restricts which atoms the top of each tree may land on.
    """
    varset = frozenset(varlist)
    allowed_set = set(allowed) if allowed is not None else None
    results: list[dict] = [{}]
    for tree in trees:
        step: list[dict] = []
        cands = [c for c in _candidates(store, tree, varset)
                 if allowed_set is None or c in allowed_set]
        for b in results:
            for c in cands:
                step.extend(_unify(store, tree, c, varset, b))
        results = step
    seen = set()
    unique = []
    for b in results:
        sig = tuple(b.get(v) for v in varlist)
        if sig not in seen:
            seen.add(sig)
            unique.append(b)
    unique.sort(key=lambda b: tuple(store.text(b[v]) if v in b else "" for v in varlist))
    return unique


def match(pattern: AtomPattern, store: AtomStore) -> list[Binding]:
    return match_trees([pattern.tree], pattern.varlist, store)


def instantiate(tree: Tree, binding: Mapping[str, Tree], varset) -> Tree:
    kind, rest = tree
    kind = AtomKind(kind)
    if kind == AtomKind.VariableNode and rest in varset:
        if rest not in binding:
            raise KeyError(f"unbound variable {rest}")
        return binding[rest]
    if kind.is_node:
        return tree
    return (kind, tuple(instantiate(c, binding, varset) for c in rest))


def substitute(pattern: AtomPattern, binding: Mapping[str, int], store: AtomStore,
               tv: TruthValue | None = None) -> int:
    missing = [v for v in pattern.varlist if v not in binding]
    if missing:
        raise KeyError(f"unbound variable(s) {missing}")
    trees = {v: store.key(binding[v]) for v in pattern.varlist}
    return store.add(instantiate(pattern.tree, trees, set(pattern.varlist)), tv)


# -- text format ---------------------------------------------------------------


def _num(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def _render(store: AtomStore, atom_id: int, top: bool) -> str:
    a = store[atom_id]
    tv = store.tv(atom_id)
    parts = [a.kind.value]
    if top or tv != DEFAULT_TV:
        parts.append(f"(stv {_num(tv.strength)} {_num(tv.count)})")
    if a.kind.is_node:
        parts.append(quote(a.name))
    else:
        parts.extend(_render(store, t, False) for t in a.targets)
    return "(" + " ".join(parts) + ")"


def to_text(store: AtomStore) -> str:
    return "".join(_render(store, r, True) + "\n" for r in store.roots())


def from_text(text: str, store: AtomStore | None = None) -> AtomStore:
    store = store if store is not None else AtomStore()
    try:
        exprs = parse_all(text)
    except SexprError:
        raise
    for e in exprs:
        _read_atom(e, store)
    return store


def _read_atom(expr, store: AtomStore) -> int:
    if not isinstance(expr, list) or not expr or not isinstance(expr[0], Sym):
        line, col = _where(expr)
        raise SexprError("expected (Kind ...)", line, col)
    head = expr[0]
    try:
        kind = AtomKind(head.name)
    except ValueError:
        raise SexprError(f"unknown atom kind {head.name!r}", head.line, head.col) from None
    rest = expr[1:]
    tv = None
    if rest and isinstance(rest[0], list) and rest[0] and rest[0][0] == Sym("stv"):
        stv = rest[0]
        try:
            tv = TruthValue(float(stv[1].name), float(stv[2].name))
        except (IndexError, AttributeError, ValueError) as exc:
            raise SexprError(f"bad stv: {exc}", head.line, head.col) from None
        rest = rest[1:]
    if kind.is_node:
        if len(rest) != 1 or not isinstance(rest[0], str):
            raise SexprError(f"{kind} takes one quoted name", head.line, head.col)
        return store.intern(kind, rest[0], tv)
    return store.intern(kind, [_read_atom(r, store) for r in rest], tv)


def _where(expr) -> tuple[int, int]:
    if isinstance(expr, Sym):
        return expr.line, expr.col
    if isinstance(expr, list) and expr:
        return _where(expr[0])
    return 0, 0


def parse_tree(text: str) -> Tree:
    """Parse a single atom s-expression into a tree (no store involved)."""
    exprs = parse_all(text)
    if len(exprs) != 1:
        raise ValueError("expected exactly one expression")
    return expr_to_tree(exprs[0])


def expr_to_tree(expr) -> Tree:
    if not isinstance(expr, list) or not expr or not isinstance(expr[0], Sym):
        line, col = _where(expr)
        raise SexprError("expected (Kind ...)", line, col)
    try:
        kind = AtomKind(expr[0].name)
    except ValueError:
        raise SexprError(f"unknown atom kind {expr[0].name!r}", expr[0].line, expr[0].col) from None
    rest = [r for r in expr[1:] if not (isinstance(r, list) and r and r[0] == Sym("stv"))]
    if kind.is_node:
        if len(rest) != 1 or not isinstance(rest[0], (str, Sym)):
            raise SexprError(f"{kind} takes one name", expr[0].line, expr[0].col)
        return (kind, str(rest[0]))
    return (kind, tuple(expr_to_tree(r) for r in rest))


# -- instance normalization -------------------------------------------------------

_INSTANCE = re.compile(r"^(.+?)@.+$")

_SCAFFOLD_KINDS = (AtomKind.InheritanceLink, AtomKind.ImplicationLink)


def instance_atoms(store: AtomStore) -> dict[int, Tree]:
    """Instance atoms (``x@k`` with an inheritance/implication link) -> their general tree."""
    out: dict[int, Tree] = {}
    for kind in _SCAFFOLD_KINDS:
        for lid in store.of_kind(kind):
            src = store[lid].targets[0]
            a = store[src]
            if a.kind.is_node and a.name is not None:
                m = _INSTANCE.match(a.name)
                if m:
                    out[src] = (a.kind, m.group(1))
    return out


def _generalize(store: AtomStore, atom_id: int, inst: dict[int, Tree]) -> Tree:
    if atom_id in inst:
        return inst[atom_id]
    a = store[atom_id]
    if a.kind.is_node:
        return store.key(atom_id)
    return (a.kind, tuple(_generalize(store, t, inst) for t in a.targets))


def _carry_tvs(store: AtomStore, src: int, dst: int) -> None:
    """Nested links keep their truth values in the general copy."""
    for a, b in zip(store[src].targets, store[dst].targets):
        if a != b and not store[a].kind.is_node:
            if store.tv(a) != DEFAULT_TV:
                store.set_tv(b, store.tv(a))
            _carry_tvs(store, a, b)


def normalize_instances(store: AtomStore) -> AtomStore:
    """Add general copies of every top-level link that mentions instances.

    A link is scaffolding when it is the inheritance/implication link that
    declares an instance.  Only root links are copied (nested links are
    generalized as part of their root), so a link under a NotLink never
    reappears as a bare assertion.  Runs to a fixpoint; existing atoms are
    untouched.
    """
    while True:
        inst = instance_atoms(store)
        if not inst:
            return store
        before = len(store)
        for lid in store.roots():
            a = store[lid]
            if a.kind.is_node:
                continue
            if a.kind in _SCAFFOLD_KINDS and a.targets[0] in inst:
                continue
            if a.kind == AtomKind.ListLink:
                continue
            if not (store.descendants(lid) & inst.keys()):
                continue
            gid = store.add(_generalize(store, lid, inst), store.tv(lid))
            _carry_tvs(store, lid, gid)
        if len(store) == before:
            return store


def strip_instance_numbers(text: str) -> str:
    """Replace ``@<suffix>`` instance tags so stores compare up to renumbering."""
    return re.sub(r'@[0-9A-Za-z]+', "@*", text)


def structure(store: AtomStore) -> list[str]:
    """Sorted atom texts with instance numbers erased (renumbering-invariant view)."""
    return sorted(strip_instance_numbers(store.text(i)) + f" {store.tv(i)}" for i in store)
