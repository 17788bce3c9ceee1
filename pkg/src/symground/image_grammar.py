"""Image grammars: link-grammar dictionaries over visual entity types.

Connector labels read ``ref_axis_rel`` plus a sign.  ``ref`` is the partner's
entity type, or an ``s-t`` pair naming both ends.  The sign says where the
partner lies along the axis: ``+`` toward larger coordinates (right on ``h``,
up on ``v``).  ``rel`` is a G/A/O letter or an RCC-8 relation name.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .atoms import AtomStore, TruthValue, link, node
from .linkgrammar import Connector, Dictionary, Disjunct
from .qualitative import RCC8_NAMES, allen_classify, box_rcc8, coarsen_to_gao

AXES = ("h", "v", "d")
GAO_LETTERS = ("G", "A", "O", "E")
_LABEL = re.compile(r"^(?P<ref>.+)_(?P<axis>[hvd])_(?P<rel>[A-Za-z]+)$")


class SceneError(ValueError):
    pass


@dataclass(frozen=True)
class ImageLabel:
    ref: str
    axis: str
    relation: str

    @classmethod
    def parse(cls, text: str) -> "ImageLabel":
        m = _LABEL.match(text)
        if not m:
            raise SceneError(f"bad image connector label {text!r}")
        rel = m.group("rel")
        if rel not in GAO_LETTERS and rel not in RCC8_NAMES:
            raise SceneError(f"unknown relation {rel!r} in {text!r}")
        return cls(m.group("ref"), m.group("axis"), rel)

    def __str__(self):
        return f"{self.ref}_{self.axis}_{self.relation}"


@dataclass(frozen=True)
class SceneEntity:
    id: str
    type: str
    extent: tuple[tuple[str, tuple[int, int]], ...]

    def __post_init__(self):
        for axis, (a, b) in self.extent:
            if not a < b:
                raise SceneError(f"degenerate {axis} extent for {self.id}")

    def on(self, axis: str) -> tuple[int, int]:
        for a, iv in self.extent:
            if a == axis:
                return iv
        raise SceneError(f"axis {axis!r} not declared for {self.id}")

    def translated(self, offsets: dict[str, int]) -> "SceneEntity":
        return SceneEntity(self.id, self.type, tuple(
            (a, (lo + offsets.get(a, 0), hi + offsets.get(a, 0))) for a, (lo, hi) in self.extent))


@dataclass
class Scene:
    entities: list[SceneEntity]
    axes: tuple[str, ...] = ("h", "v")

    def __post_init__(self):
        ids = [e.id for e in self.entities]
        if len(ids) != len(set(ids)):
            raise SceneError("duplicate entity ids")

    def without(self, entity_id: str) -> "Scene":
        return Scene([e for e in self.entities if e.id != entity_id], self.axes)

    def translated(self, **offsets: int) -> "Scene":
        return Scene([e.translated(offsets) for e in self.entities], self.axes)


_EXTENT = re.compile(r"^([hvd]):\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]$")


def load_scene(text: str) -> Scene:
    """One entity per line: ``id type h:[a,b] v:[c,d]``; ``#`` starts a comment."""
    ents = []
    axes: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 3:
            raise SceneError(f"line {lineno}: expected 'id type axis:[a,b] ...'")
        ext = []
        for p in parts[2:]:
            m = _EXTENT.match(p)
            if not m:
                raise SceneError(f"line {lineno}: bad extent {p!r}")
            ext.append((m.group(1), (int(m.group(2)), int(m.group(3)))))
            if m.group(1) not in axes:
                axes.append(m.group(1))
        ents.append(SceneEntity(parts[0], parts[1], tuple(ext)))
    return Scene(ents, tuple(a for a in AXES if a in axes) or ("h", "v"))


def classify_pair(a: SceneEntity, b: SceneEntity, axis: str) -> str:
    """GAO relation of ``a`` to ``b`` along ``axis`` (sign + when a comes first)."""
    return coarsen_to_gao(allen_classify(a.on(axis), b.on(axis)))


def rcc8_boxes(a: SceneEntity, b: SceneEntity) -> str:
    return box_rcc8(a.on("h"), a.on("v"), b.on("h"), b.on("v"))


# -- generic connector satisfaction ---------------------------------------------------


@dataclass(frozen=True)
class SpaceLink:
    a: str           # entity holding the + connector
    a_label: str
    b: str           # entity holding the - connector
    b_label: str

    def __str__(self):
        return f"{self.a} {self.a_label}+ -- {self.b_label}- {self.b}"


@dataclass
class SpaceLinkage:
    links: list[SpaceLink]
    disjuncts: dict[str, Disjunct]

    def pairs(self) -> list[tuple[str, str]]:
        return [(l.a, l.b) for l in self.links]


@dataclass
class Violations:
    messages: list[str]

    def __bool__(self):
        return False

    def __str__(self):
        return "\n".join(self.messages)


class _Engine:
    """Shared search used by scene and movement validation.

    ``partner_label(item, label)`` gives (partner type set, label the partner
    must carry); ``holds(item, label, sign, partner)`` checks geometry;
    ``slot(label)`` names the exclusion slot (at most one link per pair and slot).
    """

    def __init__(self, items, types, grammar: Dictionary, partner_label, holds, slot):
        self.items = items
        self.types = types
        self.grammar = grammar
        self.partner_label = partner_label
        self.holds = holds
        self.slot = slot

    def candidates(self, i: int, c: Connector) -> list[tuple[int, str]]:
        out = []
        want_types, plabel = self.partner_label(self.items[i], c.label)
        for j, other in enumerate(self.items):
            if j == i or self.types[j] not in want_types:
                continue
            if self.holds(self.items[i], c.label, c.direction, other):
                out.append((j, plabel))
        return out

    def solve(self) -> SpaceLinkage | Violations:
        disj = []
        for it, t in zip(self.items, self.types):
            e = self.grammar.entry(t)
            if e is None:
                raise SceneError(f"unknown entity type {t!r}")
            disj.append(e.disjuncts)
        problems = self._local_problems(disj)
        if problems:
            return Violations(problems)
        for choice in itertools.product(*[range(len(d)) for d in disj]):
            chosen = [disj[i][k] for i, k in enumerate(choice)]
            links = self._match(chosen)
            if links is not None:
                return SpaceLinkage(links, {self._id(i): chosen[i] for i in range(len(self.items))})
        return Violations(["no consistent choice of disjuncts satisfies every connector"])

    def _id(self, i: int) -> str:
        return self.items[i].id

    def _local_problems(self, disj) -> list[str]:
        out = []
        for i, ds in enumerate(disj):
            per_disjunct = []
            for d in ds:
                bad = []
                for c in d.left + d.right:
                    ok = False
                    for j, plabel in self.candidates(i, c):
                        want = "-" if c.direction == "+" else "+"
                        if any(pc.label == plabel and pc.direction == want
                               for pd in disj[j] for pc in pd.left + pd.right):
                            ok = True
                            break
                    if not ok:
                        bad.append(f"{c.label}{c.direction}")
                per_disjunct.append(bad)
            if ds and all(per_disjunct):
                names = sorted({b for bad in per_disjunct for b in bad})
                out.append(f"{self._id(i)} ({self.types[i]}): unsatisfied connector "
                           + ", ".join(names))
        return out

    def _match(self, chosen: list[Disjunct]) -> list[SpaceLink] | None:
        pending = [(i, k, c) for i, d in enumerate(chosen) for k, c in enumerate(d.left + d.right)]
        used: set[tuple[int, int]] = set()
        slots: set[tuple[int, int, str]] = set()
        links: list[SpaceLink] = []

        def rec(pos: int) -> bool:
            while pos < len(pending) and (pending[pos][0], pending[pos][1]) in used:
                pos += 1
            if pos == len(pending):
                return True
            i, k, c = pending[pos]
            slot = self.slot(c.label)
            want = "-" if c.direction == "+" else "+"
            for j, plabel in self.candidates(i, c):
                key = (min(i, j), max(i, j), slot)
                if key in slots:
                    continue
                pd = chosen[j]
                for pk, pc in enumerate(pd.left + pd.right):
                    if (j, pk) in used or pc.label != plabel or pc.direction != want:
                        continue
                    if not self.holds(self.items[j], pc.label, pc.direction, self.items[i]):
                        continue
                    used.update({(i, k), (j, pk)})
                    slots.add(key)
                    if c.direction == "+":
                        links.append(SpaceLink(self._id(i), c.label, self._id(j), pc.label))
                    else:
                        links.append(SpaceLink(self._id(j), pc.label, self._id(i), c.label))
                    if rec(pos + 1):
                        return True
                    links.pop()
                    slots.discard(key)
                    used.difference_update({(i, k), (j, pk)})
                    break  # identical free connectors on j are interchangeable
            return False

        return links if rec(0) else None


# -- scenes ------------------------------------------------------------------------------


def _scene_engine(grammar: Dictionary, scene: Scene) -> _Engine:
    types = [e.type for e in scene.entities]
    known = set(types) | {e.word for e in grammar.entries.values()}

    def split_ref(ref: str):
        if ref in known:
            return None
        if "-" in ref:
            for k in range(1, ref.count("-") + 1):
                parts = ref.split("-")
                s, t = "-".join(parts[:k]), "-".join(parts[k:])
                if s in known and t in known:
                    return s, t
        return None

    def partner_label(ent: SceneEntity, label: str):
        lab = ImageLabel.parse(label)
        pair = split_ref(lab.ref)
        if pair:
            s, t = pair
            want = {t} if ent.type == s else {s} if ent.type == t else set()
            return want, label
        return {lab.ref}, f"{ent.type}_{lab.axis}_{lab.relation}"

    def holds(ent: SceneEntity, label: str, sign: str, other: SceneEntity) -> bool:
        lab = ImageLabel.parse(label)
        if lab.axis not in scene.axes:
            raise SceneError(f"axis {lab.axis!r} is not declared by the scene")
        g = classify_pair(ent, other, lab.axis)
        # partner in the + direction means ent comes first along the axis
        if lab.relation in GAO_LETTERS:
            if g == "E":
                return lab.relation in ("E", "O")
            return g[0] == lab.relation and g[1] == sign
        if rcc8_boxes(ent, other) != lab.relation:
            return False
        lo_a, hi_a = ent.on(lab.axis)
        lo_b, hi_b = other.on(lab.axis)
        if (lo_a, hi_a) == (lo_b, hi_b):
            return False
        ahead = (lo_b, hi_b) > (lo_a, hi_a)
        return ahead == (sign == "+")

    def slot(label: str) -> str:
        return ImageLabel.parse(label).axis

    return _Engine(scene.entities, types, grammar, partner_label, holds, slot)


def validate_scene(grammar: Dictionary, scene: Scene) -> SpaceLinkage | Violations:
    """First satisfying linkage in deterministic order, or the list of violations."""
    return _scene_engine(grammar, scene).solve()


def recheck(grammar: Dictionary, scene: Scene, linkage: SpaceLinkage) -> bool:
    """Geometric re-verification of every link (soundness check)."""
    eng = _scene_engine(grammar, scene)
    by_id = {e.id: e for e in scene.entities}
    return all(eng.holds(by_id[l.a], l.a_label, "+", by_id[l.b])
               and eng.holds(by_id[l.b], l.b_label, "-", by_id[l.a]) for l in linkage.links)


REL_WORD = {"G": "gap", "A": "abut", "O": "overlap", "E": "overlap"}


def scene_to_atoms(scene: Scene, store: AtomStore | None = None, by_type: bool = False) -> AtomStore:
    """Geometric facts as ``EvaluationLink(rel_axis, ListLink(a, b))``.

    Pairs are ordered so ``a`` comes first along the axis; an equal-start
    overlap is symmetric and is emitted in both orders.  Externally connected
    boxes also get an ``adjacent`` fact.
    """
    store = store if store is not None else AtomStore()
    fact = TruthValue(1.0, 1.0)
    ents = scene.entities

    def name(e: SceneEntity) -> str:
        return e.type if by_type else e.id

    def emit(pred: str, a: SceneEntity, b: SceneEntity):
        store.add(link("EvaluationLink", node("PredicateNode", pred),
                       link("ListLink", node("ConceptNode", name(a)), node("ConceptNode", name(b)))), fact)

    for x in range(len(ents)):
        for y in range(x + 1, len(ents)):
            a, b = ents[x], ents[y]
            for axis in scene.axes:
                g = classify_pair(a, b, axis)
                pred = f"{REL_WORD[g[0]]}_{axis}"
                if g == "E":
                    emit(pred, a, b)
                    emit(pred, b, a)
                elif g.endswith("+"):
                    emit(pred, a, b)
                else:
                    emit(pred, b, a)
            if "h" in scene.axes and "v" in scene.axes and rcc8_boxes(a, b) == "EC":
                emit("adjacent", a, b)
    return store
