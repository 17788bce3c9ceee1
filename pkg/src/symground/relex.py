"""Dependency extraction from linkages with voice normalization."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .linkgrammar import WALL, Dictionary, Linkage, PROPER_SUBSCRIPTS

RELATION_NAMES = ("_subj", "_obj", "_advmod")

GENDERS = {"f": "female", "m": "male"}
_LABEL_HEAD = re.compile(r"^([A-Z]+)")


@dataclass(frozen=True)
class Token:
    index: int
    word: str        # dictionary spelling
    lemma: str
    inst: str        # base used for instance names
    pos: str
    subscript: str

    @property
    def proper(self) -> bool:
        return self.subscript in PROPER_SUBSCRIPTS


@dataclass(frozen=True, order=True)
class DepRelation:
    name: str
    head: int
    dependent: int

    def __post_init__(self):
        if self.name not in RELATION_NAMES:
            raise ValueError(f"unknown relation {self.name!r}")
        if self.head == self.dependent:
            raise ValueError("relation head equals dependent")


@dataclass(frozen=True, order=True)
class Attribute:
    name: str
    token: int
    value: str


@dataclass
class DepGraph:
    tokens: list[Token]
    relations: set[DepRelation] = field(default_factory=set)
    attributes: set[Attribute] = field(default_factory=set)
    unhandled: list[tuple[int, int, str]] = field(default_factory=list)

    def lemma(self, i: int) -> str:
        return self.tokens[i].lemma

    def attr(self, name: str, i: int) -> str | None:
        for a in self.attributes:
            if a.name == name and a.token == i:
                return a.value
        return None

    def relation_triples(self) -> set[tuple[str, str, str]]:
        return {(r.name, self.lemma(r.head), self.lemma(r.dependent)) for r in self.relations}

    def attribute_triples(self) -> set[tuple[str, str, str]]:
        return {(a.name, self.lemma(a.token), a.value) for a in self.attributes}

    def report(self) -> str:
        lines = ["Dependency relations:", ""]
        for r in sorted(self.relations, key=lambda r: (r.name, r.head, r.dependent)):
            lines.append(f"    {r.name}({self.lemma(r.head)}, {self.lemma(r.dependent)})")
        lines += ["", "Attributes:", ""]
        for a in sorted(self.attributes, key=lambda a: (a.token, a.name)):
            lines.append(f"    {a.name}({self.lemma(a.token)}, {a.value})")
        return "\n".join(lines) + "\n"


def lemma(word: str, dictionary: Dictionary) -> str:
    return dictionary.lemma(word)


def _head(label: str) -> str:
    m = _LABEL_HEAD.match(label)
    return m.group(1) if m else label


def _tokens(linkage: Linkage, d: Dictionary) -> list[Token]:
    out = []
    for i, t in enumerate(linkage.tokens):
        e = d.entry(t)
        if t == WALL:
            out.append(Token(i, WALL, WALL, WALL, "wall", "w"))
            continue
        sub = e.subscript if e else ""
        if t.isdigit():
            out.append(Token(i, t, t, t, "number", "#"))
            continue
        out.append(Token(i, d.spelling(t), d.lemma(t), d.inst_form(t), e.pos if e else "", sub))
    return out


def extract(linkage: Linkage, dictionary: Dictionary) -> DepGraph:
    """Apply the fixed link-label rule table to one linkage.

    Passive, copular and light-verb frames are rewritten so that the semantic
    predicate heads ``_subj``/``_obj``; voice does not survive extraction.
    """
    d = dictionary
    toks = _tokens(linkage, d)
    n = len(toks)
    subj_of: dict[int, int] = {}
    obj_of: dict[int, int] = {}
    advmods: list[tuple[int, int]] = []
    definite: set[int] = set()
    complement: dict[int, tuple[str, int]] = {}   # aux -> (kind, complement)
    mv: dict[int, list[int]] = {}
    pobj: dict[int, int] = {}
    negated: set[int] = set()
    numbers: dict[int, int] = {}
    particles: dict[int, int] = {}
    unhandled = []

    for i, j, label in linkage.links:
        h = _head(label)
        if h == "S":
            subj_of[j] = i
        elif h == "O":
            obj_of[i] = j
        elif h == "E":
            advmods.append((j, i))
        elif h == "D":
            if toks[i].lemma.lower() == "the":
                definite.add(j)
        elif h in ("Pv", "P"):
            complement[i] = (label[:2] if len(label) > 1 else "Pa", j)
        elif h == "MV":
            mv.setdefault(i, []).append(j)
        elif h == "J":
            pobj[i] = j
        elif h == "N":
            negated.add(i)
        elif h == "NM":
            numbers[i] = j
        elif h == "K":
            particles[i] = j
        elif h in ("W", "Xp", "X", "RW") or label.startswith("W"):
            continue
        else:
            unhandled.append((i, j, label))

    # number and particle merges rewrite lemmas/instance bases
    for i, j in numbers.items():
        t = toks[i]
        toks[i] = Token(i, t.word, f"{t.lemma}-{toks[j].word}", f"{t.inst}-{toks[j].word}", t.pos, t.subscript)
    for i, j in particles.items():
        t, p = toks[i], toks[j]
        toks[i] = Token(i, t.word, f"{t.lemma}/{p.lemma}", f"{t.inst}/{p.inst}", t.pos, t.subscript)

    relations: set[DepRelation] = set()
    attributes: set[Attribute] = set()
    tense_of: dict[int, str] = {}
    redirect: dict[int, int] = {}  # token whose modifiers move to a new predicate

    def tense(i: int) -> str | None:
        sub = toks[i].subscript
        if sub == "v":
            return "present"
        if sub == "v-d":
            return "past"
        return None

    for aux, (kind, comp) in complement.items():
        subj = subj_of.get(aux)
        t = tense(aux)
        if aux in negated:
            negated.add(comp)
        if kind == "Pv":
            if toks[comp].lemma in d.light_verbs:
                # "X is done PREP Y": the preposition carries the relation
                for q in mv.get(comp, []):
                    if q in pobj:
                        if subj is not None:
                            relations.add(DepRelation("_subj", q, subj))
                        relations.add(DepRelation("_obj", q, pobj[q]))
                        redirect[comp] = q
                        if t:
                            tense_of[q] = t
                        if comp in negated:
                            negated.add(q)
                        break
                continue
            if subj is not None:
                relations.add(DepRelation("_obj", comp, subj))
            for q in mv.get(comp, []):
                if toks[q].lemma.lower() == "by" and q in pobj:
                    relations.add(DepRelation("_subj", comp, pobj[q]))
        elif kind == "Pp":
            if subj is not None:
                relations.add(DepRelation("_subj", comp, subj))
            if comp in pobj:
                relations.add(DepRelation("_obj", comp, pobj[comp]))
        else:
            if subj is not None:
                relations.add(DepRelation("_subj", comp, subj))
            for q in mv.get(comp, []):
                if q in pobj:
                    relations.add(DepRelation("_obj", comp, pobj[q]))
        if t:
            tense_of[comp] = t

    for verb, subj in subj_of.items():
        if verb in complement:
            continue
        relations.add(DepRelation("_subj", verb, subj))
    for verb, obj in obj_of.items():
        relations.add(DepRelation("_obj", verb, obj))
    for head, adv in advmods:
        relations.add(DepRelation("_advmod", redirect.get(head, head), adv))

    heads = {r.head for r in relations}
    for i, tok in enumerate(toks):
        if tok.pos == "wall":
            continue
        if tok.pos:
            attributes.add(Attribute("pos", i, tok.pos))
        if tok.pos == "verb" and i not in complement and i not in redirect:
            t = tense(i)
            if t:
                tense_of.setdefault(i, t)
        if tok.pos == "noun":
            plural = tok.word.lower() in d.plurals
            attributes.add(Attribute("noun_number", i, "plural" if plural else "singular"))
            if i in definite or tok.proper:
                attributes.add(Attribute("definite-FLAG", i, "T"))
            if tok.subscript in GENDERS:
                attributes.add(Attribute("gender", i, GENDERS[tok.subscript]))
    for i, t in tense_of.items():
        if i in heads or toks[i].pos == "verb":
            attributes.add(Attribute("tense", i, t))
    for i in negated:
        if i in heads:
            attributes.add(Attribute("NEGATIVE-FLAG", i, "T"))
    return DepGraph(toks, relations, attributes, unhandled)
