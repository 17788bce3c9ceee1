"""Action grammars over animations, movement traces and hierarchy checks.

Connector labels read ``name_r`` plus a sign, where ``r`` is a G/A/O letter
(case-insensitive; ``a`` is abut, i.e. Allen *meets*) or an Allen relation
name.  For letters the sign says where the partner lies in time (``+`` later).
For Allen names ``+`` marks the entity as the relation's first argument.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .atoms import AtomStore, TruthValue, link, node
from .image_grammar import SceneError, SpaceLinkage, Violations, _Engine
from .linkgrammar import Dictionary, Linkage, is_planar
from .qualitative import ALLEN_NAMES, IntInterval, allen_classify, coarsen_to_gao

CONTAINED = ("during", "starts", "finishes", "equal")


class TraceError(ValueError):
    pass


@dataclass(frozen=True)
class AnimationType:
    name: str
    actuators: frozenset[str]
    param_box: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        if not self.actuators:
            raise TraceError(f"animation {self.name} has no actuators")

    @property
    def arity(self) -> int:
        return len(self.param_box)

    def recognizes(self, params) -> bool:
        return len(params) == self.arity and all(lo <= p <= hi for p, (lo, hi) in zip(params, self.param_box))


@dataclass(frozen=True)
class AnimationInstance:
    id: str
    type: str
    interval: IntInterval
    params: tuple[float, ...] = ()
    parent: str | None = None

    def on(self, axis: str = "t") -> tuple[int, int]:
        return (self.interval.start, self.interval.end)

    def shifted(self, k: int) -> "AnimationInstance":
        return AnimationInstance(self.id, self.type, self.interval.shifted(k), self.params, self.parent)


@dataclass
class MovementTrace:
    instances: list[AnimationInstance]
    types: dict[str, AnimationType] = field(default_factory=dict)

    def __post_init__(self):
        ids = [i.id for i in self.instances]
        if len(ids) != len(set(ids)):
            raise TraceError("duplicate instance ids")
        by_id = {i.id: i for i in self.instances}
        for inst in self.instances:
            seen = set()
            cur = inst
            while cur.parent is not None:
                if cur.id in seen:
                    raise TraceError(f"parent cycle through {inst.id}")
                seen.add(cur.id)
                if cur.parent not in by_id:
                    raise TraceError(f"{cur.id}: unknown parent {cur.parent}")
                cur = by_id[cur.parent]

    def get(self, iid: str) -> AnimationInstance:
        for i in self.instances:
            if i.id == iid:
                return i
        raise KeyError(iid)

    def shifted(self, k: int) -> "MovementTrace":
        return MovementTrace([i.shifted(k) for i in self.instances], self.types)

    def order(self) -> list[str]:
        """Linear order for planarity: start tick, then id."""
        return [i.id for i in sorted(self.instances, key=lambda i: (i.interval.start, i.id))]


_IV = re.compile(r"^\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]$")
_BOX = re.compile(r"^\[\s*([-+.\deE]+)\s*,\s*([-+.\deE]+)\s*\]$")


def _num(s: str) -> float | None:
    try:
        return float(s)
    except ValueError:
        return None


def load_trace(text: str) -> MovementTrace:
    """Instances ``id type [start,end] params... parent?``.

    Animation types may be declared on lines ``type NAME act1,act2 [lo,hi]...``.
    """
    insts = []
    types: dict[str, AnimationType] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "type":
            if len(parts) < 3:
                raise TraceError(f"line {lineno}: expected 'type NAME actuators [lo,hi]...'")
            boxes = []
            for p in parts[3:]:
                m = _BOX.match(p)
                if not m:
                    raise TraceError(f"line {lineno}: bad parameter box {p!r}")
                boxes.append((float(m.group(1)), float(m.group(2))))
            types[parts[1]] = AnimationType(parts[1], frozenset(parts[2].split(",")), tuple(boxes))
            continue
        if len(parts) < 3:
            raise TraceError(f"line {lineno}: expected 'id type [start,end] ...'")
        m = _IV.match(parts[2])
        if not m:
            raise TraceError(f"line {lineno}: bad interval {parts[2]!r}")
        params, parent = [], None
        for p in parts[3:]:
            v = _num(p)
            if v is not None and parent is None:
                params.append(v)
            elif p.startswith("parent="):
                parent = p[len("parent="):]
            elif parent is None:
                parent = p
            else:
                raise TraceError(f"line {lineno}: unexpected {p!r}")
        try:
            iv = IntInterval(int(m.group(1)), int(m.group(2)))
        except ValueError as exc:
            raise TraceError(f"line {lineno}: {exc}") from None
        insts.append(AnimationInstance(parts[0], parts[1], iv, tuple(params), parent))
    return MovementTrace(insts, types)


def parse_action_label(label: str) -> tuple[str, str]:
    ref, sep, rel = label.rpartition("_")
    if not sep or not ref:
        raise TraceError(f"bad action connector label {label!r}")
    if rel.upper() in ("G", "A", "O", "E") or rel in ALLEN_NAMES:
        return ref, rel
    raise TraceError(f"unknown relation {rel!r} in {label!r}")


def action_holds(inst: AnimationInstance, label: str, sign: str, other: AnimationInstance) -> bool:
    _, rel = parse_action_label(label)
    if rel in ALLEN_NAMES:
        if sign == "+":
            return allen_classify(inst.on(), other.on()) == rel
        return allen_classify(other.on(), inst.on()) == rel
    g = coarsen_to_gao(allen_classify(inst.on(), other.on()))
    if g == "E":
        return rel.upper() in ("E", "O")
    return g[0] == rel.upper() and g[1] == sign


def _engine(grammar: Dictionary, trace: MovementTrace) -> _Engine:
    types = [i.type for i in trace.instances]

    def partner_label(inst: AnimationInstance, label: str):
        ref, rel = parse_action_label(label)
        return {ref}, f"{inst.type}_{rel}"

    return _Engine(trace.instances, types, grammar, partner_label, action_holds, lambda label: "t")


def validate_movement(grammar: Dictionary, trace: MovementTrace) -> SpaceLinkage | Violations:
    problems = []
    for inst in trace.instances:
        t = trace.types.get(inst.type)
        if t is not None and not t.recognizes(inst.params):
            problems.append(f"{inst.id} ({inst.type}): parameters {list(inst.params)} outside the legal box")
    if problems:
        return Violations(problems)
    return _engine(grammar, trace).solve()


def recheck_movement(trace: MovementTrace, linkage: SpaceLinkage) -> bool:
    return all(action_holds(trace.get(l.a), l.a_label, "+", trace.get(l.b))
               and action_holds(trace.get(l.b), l.b_label, "-", trace.get(l.a)) for l in linkage.links)


@dataclass
class HierarchyReport:
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_hierarchy(trace: MovementTrace) -> HierarchyReport:
    out = []
    for child in trace.instances:
        if child.parent is None:
            continue
        parent = trace.get(child.parent)
        ct, pt = trace.types.get(child.type), trace.types.get(parent.type)
        if ct is None or pt is None:
            out.append(f"{child.id}: animation type of child or parent is not declared")
        elif not ct.actuators <= pt.actuators:
            extra = sorted(ct.actuators - pt.actuators)
            out.append(f"{child.id}: actuators {extra} not among parent {parent.id}'s")
        rel = allen_classify(child.on(), parent.on())
        if rel not in CONTAINED:
            out.append(f"{child.id}: interval is {rel} parent {parent.id}, not contained in it")
    return HierarchyReport(out)


def check_no_cross(trace: MovementTrace, links) -> bool:
    """True iff no two dependency links cross in the (start, id) order."""
    if isinstance(links, SpaceLinkage):
        links = links.pairs()
    pos = {iid: k for k, iid in enumerate(trace.order())}
    return is_planar([(pos[a], pos[b]) for a, b in links])


def trace_to_atoms(trace: MovementTrace, store: AtomStore | None = None, by_type: bool = False) -> AtomStore:
    """``EvaluationLink(allen-relation, ListLink(a, b))`` for every instance pair."""
    store = store if store is not None else AtomStore()
    names = {i.id: (i.type if by_type else i.id) for i in trace.instances}
    insts = trace.instances
    for x in range(len(insts)):
        for y in range(x + 1, len(insts)):
            a, b = insts[x], insts[y]
            rel = allen_classify(a.on(), b.on())
            store.add(link("EvaluationLink", node("PredicateNode", rel),
                           link("ListLink", node("ConceptNode", names[a.id]),
                                node("ConceptNode", names[b.id]))), TruthValue(1.0, 1.0))
    return store


def load_links(text: str) -> list[tuple[str, str]]:
    """Dependency links between animation ids, one ``a b`` pair per line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise TraceError(f"line {lineno}: expected 'a b'")
        out.append((parts[0], parts[1]))
    return out
