"""Sentence generation by inverting the comprehension pipeline.

Candidates are word sequences over the words that name the target atoms plus
the bundle's function words.  A left-to-right stack recognizer over the
dictionary's disjuncts prunes orders that cannot complete to a planar,
connected linkage; survivors are comprehended and kept when every target
atom comes back (expressiveness) and no single word can be dropped
(aesthetics).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product

from .atoms import AtomKind, AtomStore, Tree, TruthValue, tree_nodes, tree_text
from .grounding import (
    ComprehensionError, LanguageBundle, Unexpressible, assertions, comprehend_tokens,
)
from .linkgrammar import NUMBER, WALL, Dictionary, ParseError, merge_labels, parse


class SearchBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Generated:
    text: str
    tokens: tuple[str, ...]
    rank: tuple

    def __str__(self):
        return self.text


@dataclass
class GenerationTask:
    """Target atoms and, per target, the mapping rules whose template fits it."""
    targets: list[tuple[Tree, TruthValue]]
    rules: dict[Tree, list[str]] = field(default_factory=dict)

    def unexpressible(self) -> list[Tree]:
        return [t for t, _ in self.targets if not self.rules.get(t)]


# -- vocabulary ----------------------------------------------------------------


def _fits(template: Tree, tree: Tree) -> bool:
    tk, tr = template
    k, r = tree
    if AtomKind(tk) != AtomKind(k):
        return False
    if AtomKind(tk).is_node:
        return (isinstance(tr, str) and tr.startswith("$")) or tr == r
    return len(tr) == len(r) and all(_fits(a, b) for a, b in zip(tr, r))


def word_index(d: Dictionary) -> dict[str, set[str]]:
    """Atom name -> dictionary words whose instance form or lemma is that name."""
    out: dict[str, set[str]] = {}
    for e in d.entries.values():
        if e.word in (WALL, NUMBER):
            continue
        for name in {d.inst_form(e.word), d.lemma(e.word)}:
            out.setdefault(name, set()).add(e.word)
    return out


_NUMBERED = re.compile(r"^(?P<base>.+)-(?P<n>\d+)$")


def name_slots(name: str, index: dict[str, set[str]]) -> list[frozenset[str]] | None:
    """Word slots that spell one atom name, or None when some part has no word."""
    if name in index:
        return [frozenset(index[name])]
    m = _NUMBERED.match(name)
    if m and m.group("base") in index:
        return [frozenset(index[m.group("base")]), frozenset([m.group("n")])]
    if "/" in name:
        parts = [name_slots(p, index) for p in name.split("/")]
        if all(p is not None for p in parts):
            return [s for p in parts for s in p]
    return None


# -- recognizer search -----------------------------------------------------------


@dataclass
class _Search:
    d: Dictionary
    slots: list[frozenset[str]]
    function_words: list[str]
    max_tokens: int
    budget: int
    repeat: int = 2
    nodes: int = 0

    def run(self) -> list[tuple[str, ...]]:
        self.disj = {}
        words = set(self.function_words) | {w for s in self.slots for w in s}
        for w in words:
            self.disj[w] = self.d.disjuncts(w)
        self.max_left = max((len(x.left) for ds in self.disj.values() for x in ds), default=0)
        self.found: set[tuple[str, ...]] = set()
        self.dead: set = set()
        start = [WALL] if self.d.walls else []
        used = tuple(0 for _ in self.function_words)
        for dj in (self.d.disjuncts(WALL) if start else [None]):
            stack = [(c.label, 0) for c in reversed(dj.right)] if dj is not None else []
            parent = [0] if start else []
            self._extend(start, stack, parent, tuple(range(len(self.slots))), used)
        return sorted(self.found)

    def _state(self, n_words, stack, parent, remaining, used):
        words, comps = {}, {}
        entries = []
        for label, j in stack:
            r = _find(parent, j)
            entries.append((label, words.setdefault(j, len(words)), comps.setdefault(r, len(comps))))
        return (n_words, tuple(entries), remaining, used)

    def _extend(self, seq, stack, parent, remaining, used) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBoundExceeded("search bound exceeded")
        n_words = len(seq) - (1 if self.d.walls else 0)
        if n_words > 0 and not stack:
            if not remaining and self._connected(parent):
                self.found.add(tuple(seq))
                return True
            return False
        room = self.max_tokens - n_words
        if room <= 0 or len(remaining) > room or len(stack) > room * self.max_left:
            return False
        key = self._state(n_words, stack, parent, remaining, used)
        if key in self.dead:
            return False
        choices: dict[str, tuple] = {}
        for k, slot_i in enumerate(remaining):
            for w in self.slots[slot_i]:
                choices.setdefault(w, (remaining[:k] + remaining[k + 1:], used))
        for f, w in enumerate(self.function_words):
            if used[f] < self.repeat:
                choices.setdefault(w, (remaining, used[:f] + (used[f] + 1,) + used[f + 1:]))
        pos = len(seq)
        any_found = False
        for w in sorted(choices):
            for dj in self.disj[w]:
                st = list(stack)
                par = parent + [pos]
                ok = True
                partners = set()
                for c in dj.left:
                    if not st:
                        ok = False
                        break
                    label, j = st.pop()
                    if j in partners or merge_labels(label, c.label) is None:
                        ok = False
                        break
                    partners.add(j)
                    _union(par, j, pos)
                if not ok or (seq and not dj.left and not dj.right):
                    continue
                st.extend((c.label, pos) for c in reversed(dj.right))
                if not self._viable(st, par):
                    continue
                rem, u = choices[w]
                if self._extend(seq + [w], st, par, rem, u):
                    any_found = True
        if not any_found:
            self.dead.add(key)
        return any_found

    @staticmethod
    def _connected(parent) -> bool:
        return len({_find(parent, i) for i in range(len(parent))}) <= 1

    @staticmethod
    def _viable(stack, parent) -> bool:
        roots = {_find(parent, i) for i in range(len(parent))}
        if len(roots) <= 1:
            return True
        open_roots = {_find(parent, j) for _, j in stack}
        return roots <= open_roots


def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def _union(parent, a, b):
    ra, rb = _find(parent, a), _find(parent, b)
    if ra != rb:
        parent[max(ra, rb)] = min(ra, rb)


# -- generation ----------------------------------------------------------------------


def _surface(tokens) -> str:
    words = [t.replace("_", " ") for t in tokens if t != WALL]
    text = " ".join(words).replace(" .", ".").replace(" ,", ",")
    return text[:1].upper() + text[1:] if text else text


def _expresses(tokens: list[str], targets, bundle: LanguageBundle) -> bool:
    try:
        c = comprehend_tokens([tokens], bundle)
    except (ComprehensionError, ParseError):
        return False
    roots = set(c.store.roots())
    for tree, tv in targets:
        i = c.store.find(tree)
        if i is None or i not in roots or c.store.tv(i) != tv:
            return False
    return True


def _aesthetic(tokens: list[str], targets, bundle: LanguageBundle) -> bool:
    for k in range(len(tokens)):
        shorter = tokens[:k] + tokens[k + 1:]
        if not shorter:
            continue
        try:
            ok = bool(parse(shorter, bundle.dictionary))
        except ParseError:
            ok = False
        if ok and _expresses(shorter, targets, bundle):
            return False
    return True


def _head(store: AtomStore, i: int):
    """(predicate, arguments) of an EvaluationLink, looking through NotLink."""
    a = store[i]
    if a.kind == AtomKind.NotLink:
        h = _head(store, a.targets[0])
        return None if h is None else ("not",) + h
    if a.kind == AtomKind.EvaluationLink and store[a.targets[1]].kind == AtomKind.ListLink:
        return (store.key(a.targets[0]), tuple(store[a.targets[1]].targets))
    return None


def partition(store: AtomStore, ids: list[int] | None = None) -> list[list[int]]:
    """One group per core relation atom, with the modifiers of its predicate.

    A subject-only reading ``P(s)`` joins the group of ``P(s, o)``.
    """
    roots = assertions(store) if ids is None else list(ids)
    modifiers: dict[Tree, list[int]] = {}
    cores = []
    for i in roots:
        a = store[i]
        t0 = store[a.targets[0]] if a.targets else None
        if a.kind == AtomKind.InheritanceLink and t0 is not None and t0.kind == AtomKind.SatisfyingSetLink:
            modifiers.setdefault(store.key(t0.targets[0]), []).append(i)
        else:
            cores.append(i)
    heads = {i: _head(store, i) for i in cores}
    full = [i for i in cores if heads[i] is None or len(heads[i][-1]) != 1]
    groups = []
    for i in full:
        h = heads[i]
        group = [i]
        if h is not None:
            group += [j for j in cores if j not in full and heads[j] is not None
                      and heads[j][:-1] == h[:-1] and heads[j][-1] == h[-1][:1]]
            group += modifiers.get(h[-2], [])
        groups.append(group)
    grouped = {j for g in groups for j in g}
    for i in cores:
        if i not in grouped:
            h = heads[i]
            groups.append([i] + (modifiers.get(h[-2], []) if h is not None else []))
            grouped.add(i)
    groups += [[i] for i in roots if i not in grouped and not any(i in g for g in groups)]
    return groups


def task(store: AtomStore, group: list[int], bundle: LanguageBundle) -> GenerationTask:
    targets = [(store.key(i), store.tv(i)) for i in group]
    rules = {t: [r.name for r in bundle.rules if _fits(r.template, t)] for t, _ in targets}
    return GenerationTask(targets, rules)


def _clause_candidates(store: AtomStore, group: list[int], bundle: LanguageBundle,
                       budget: int) -> list[Generated]:
    gt = task(store, group, bundle)
    bad = gt.unexpressible()
    if bad:
        raise Unexpressible(f"no mapping rule produces {tree_text(bad[0])}")
    index = word_index(bundle.dictionary)
    counts: dict[str, int] = {}
    slots_of: dict[str, list[frozenset[str]]] = {}
    for tree, _ in gt.targets:
        local: dict[str, int] = {}
        for kind, name in tree_nodes(tree):
            if AtomKind(kind) not in (AtomKind.ConceptNode, AtomKind.PredicateNode):
                continue
            s = name_slots(name, index)
            if s is None:
                raise Unexpressible(f"no word for {name!r} in {tree_text(tree)}")
            slots_of[name] = s
            local[name] = local.get(name, 0) + 1
        for name, k in local.items():
            counts[name] = max(counts.get(name, 0), k)
    slots = [s for name in sorted(counts) for _ in range(counts[name]) for s in slots_of[name]]
    for _, tv in gt.targets:
        if tv != TruthValue():
            for q, s in sorted(bundle.rules.qualifiers.items()):
                if abs(s - tv.strength) < 1e-9 and tv.count == 1:
                    slots.append(frozenset([q]))
                    break
            else:
                raise Unexpressible(f"no qualifier for truth value {tv}")
            break
    content = {w for s in slots for w in s}
    fwords = sorted(w for w in bundle.function_words if w not in content)
    search = _Search(bundle.dictionary, slots, fwords, bundle.max_tokens, budget)
    out = []
    for seq in search.run():
        tokens = [t for t in seq if t != WALL]
        result = parse(tokens, bundle.dictionary)
        if not result or not _expresses(tokens, gt.targets, bundle):
            continue
        if not _aesthetic(tokens, gt.targets, bundle):
            continue
        top = result.top
        rank = (len(tokens), top.cost[1], _surface(tokens))
        out.append(Generated(_surface(tokens), tuple(tokens), rank))
    out.sort(key=lambda g: g.rank)
    return out


def _join(picks, conn: str, limit: int) -> list[Generated]:
    combos = []
    for pick in product(*[c[:limit] for c in picks]):
        tokens = []
        for k, g in enumerate(pick):
            if k:
                tokens += [",", conn]
            tokens += [t for t in g.tokens if t != "."]
        rank = (sum(g.rank[0] for g in pick), sum(g.rank[1] for g in pick), _surface(tokens))
        combos.append(Generated(_surface(tokens), tuple(tokens), rank))
    combos.sort(key=lambda g: g.rank)
    return combos


def _clauses(tokens: tuple[str, ...]) -> tuple[list[list[str]], str]:
    out, conn, cur = [], "and", []
    k = 0
    while k < len(tokens):
        if tokens[k] == "," and k + 1 < len(tokens) and tokens[k + 1] in ("and", "or"):
            out.append(cur)
            conn, cur = tokens[k + 1], []
            k += 2
            continue
        cur.append(tokens[k])
        k += 1
    return out + [cur], conn


def generate(atoms: AtomStore, bundle: LanguageBundle, limit: int = 10,
             budget: int = 200_000) -> list[Generated]:
    """Ranked sentences whose comprehension contains every target atom.

    Several relation atoms become clauses joined by ", and"; a single
    disjunction becomes clauses joined by ", or".
    """
    roots = assertions(atoms)
    if not roots:
        return []
    ors = [i for i in roots if atoms[i].kind == AtomKind.OrLink]
    if ors:
        if len(roots) != 1:
            raise Unexpressible("a disjunction can only be stated on its own")
        conn, groups = "or", []
        for child in atoms[ors[0]].targets:
            c = atoms[child]
            ids = list(c.targets) if c.kind == AtomKind.AndLink else [child]
            sub = partition(atoms, ids)
            if len(sub) != 1:
                raise Unexpressible(f"disjunct {atoms.text(child)} needs more than one clause")
            groups.append(sub[0])
        targets = [(atoms.key(ors[0]), atoms.tv(ors[0]))]
    else:
        conn, groups = "and", partition(atoms)
        targets = [(atoms.key(i), atoms.tv(i)) for i in roots]
    per_group = [_clause_candidates(atoms, g, bundle, budget) for g in groups]
    if any(not c for c in per_group):
        return []
    if len(per_group) == 1:
        return per_group[0][:limit]
    out = []
    for g in _join(per_group, conn, limit):
        clauses, c = _clauses(g.tokens)
        try:
            comp = comprehend_tokens(clauses, bundle, c)
        except (ComprehensionError, ParseError):
            continue
        found = set(comp.store.roots())
        if all(comp.store.find(t) in found and comp.store.tv(comp.store.find(t)) == tv for t, tv in targets):
            out.append(g)
    return out[:limit]


@dataclass
class RoundTrip:
    sentence: str
    generated: str | None
    same_atoms: bool
    same_grounding: bool
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.same_atoms and self.same_grounding


def roundtrip(sentence: str, bundle: LanguageBundle) -> RoundTrip:
    """comprehend -> generate -> comprehend, comparing atoms and grounding."""
    from .atoms import structure
    from .grounding import comprehend, ground

    try:
        first = comprehend(sentence, bundle)
        out = generate(first.store, bundle, limit=1)
        if not out:
            return RoundTrip(sentence, None, False, False, "no sentence generated")
        second = comprehend(out[0].text, bundle)
    except (ComprehensionError, Unexpressible, SearchBoundExceeded, ParseError) as exc:
        return RoundTrip(sentence, None, False, False, str(exc))
    same_atoms = structure(first.store) == structure(second.store)
    same_ground = ground(first.store, bundle).text() == ground(second.store, bundle).text()
    return RoundTrip(sentence, out[0].text, same_atoms, same_ground)
