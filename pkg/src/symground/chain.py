"""Percepts and movements to sentences: percept atoms -> relations -> logic -> English."""

from __future__ import annotations

from dataclasses import dataclass, field

from .action_grammar import MovementTrace, trace_to_atoms
from .atoms import AtomStore
from .generation import Generated, SearchBoundExceeded, generate
from .grounding import Fact, Grounding, LanguageBundle, Unexpressible, _natural, express, ground
from .image_grammar import Scene, scene_to_atoms
from .qualitative import algebra


@dataclass
class Stated:
    fact: Fact
    sentences: list[Generated]

    @property
    def top(self) -> str:
        return self.sentences[0].text


@dataclass
class ChainResult:
    percepts: AtomStore
    grounding: Grounding
    relations: list[Fact]
    stated: list[Stated] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def sentences(self) -> list[str]:
        return [s.top for s in self.stated]


def type_relations(g: Grounding, types: dict[str, str]) -> list[Fact]:
    """Lift instance relations to entity types: the union over instance pairs."""
    out: dict[tuple[str, str, str], int] = {}
    for (alg, x, y), m in g.relations().items():
        tx, ty = types.get(x, x), types.get(y, y)
        if tx == ty:
            continue
        f = Fact(alg, tx, ty, m).oriented()
        key = (alg, f.x, f.y)
        out[key] = out.get(key, 0) | f.mask
    return [Fact(a, x, y, m) for (a, x, y), m in
            sorted(out.items(), key=lambda kv: (kv[0][0], _natural(kv[0][1]), _natural(kv[0][2])))]


def chain(source: Scene | MovementTrace, bundle: LanguageBundle, by_type: bool = True,
          limit: int = 3) -> ChainResult:
    """Describe every single-relation fact of a scene or trace in the bundle's English."""
    if isinstance(source, Scene):
        percepts = scene_to_atoms(source)
        types = {e.id: e.type for e in source.entities}
    else:
        percepts = trace_to_atoms(source)
        types = {i.id: i.type for i in source.instances}
    g = ground(percepts, bundle.perception, instances=True)
    if by_type:
        facts = type_relations(g, types)
    else:
        facts = [Fact(a, x, y, m) for (a, x, y), m in g.relations().items()]
    result = ChainResult(percepts, g, facts)
    for f in facts:
        alg = algebra(f.algebra)
        if len(alg.names(f.mask)) != 1:
            result.skipped.append(f"{f}: not a single base relation")
            continue
        try:
            sentences = generate(express([f], bundle), bundle, limit=limit)
        except (Unexpressible, SearchBoundExceeded) as exc:
            result.skipped.append(f"{f}: {exc}")
            continue
        if sentences:
            result.stated.append(Stated(f, sentences))
        else:
            result.skipped.append(f"{f}: no sentence found")
    return result
