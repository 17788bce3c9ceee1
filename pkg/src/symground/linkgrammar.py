"""Link-grammar dictionaries, disjunct expansion and exhaustive planar parsing.

Dictionary syntax::

    % comment to end of line
    a.d the.d: D+;
    cat.n snake.n: D- & (O- or S+);
    overlaps.v: {E-} & S- & O+;        % {X} is short for (X or ())
    #lemma chased chase;               % directives start with '#'

Within a disjunct the connectors of each direction are listed nearest-first:
in ``D- & O-`` the ``D`` link must attach to a strictly nearer word than ``O``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence, Union

log = logging.getLogger(__name__)

WALL = "LEFT-WALL"
NUMBER = "<number>"

POS_BY_SUBSCRIPT = {
    "n": "noun", "b": "noun", "f": "noun", "m": "noun", "l": "noun",
    "v": "verb", "v-d": "verb", "a": "adj", "e": "adv", "d": "det",
    "p": "prep", "x": "punctuation", "c": "conj", "w": "wall", "#": "noun",
}
PROPER_SUBSCRIPTS = {"b", "f", "m"}


class DictionaryError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class ParseError(ValueError):
    """Raised for sentences containing words the dictionary does not know."""


# -- connectors and expressions -----------------------------------------------------

_LABEL = re.compile(r"^[A-Za-z][A-Za-z0-9_\-*]*$")


@dataclass(frozen=True, order=True)
class Connector:
    label: str
    direction: str  # "+" links rightward, "-" leftward

    def __post_init__(self):
        if self.direction not in "+-" or len(self.direction) != 1:
            raise ValueError(f"bad direction {self.direction!r}")
        if not _LABEL.match(self.label):
            raise ValueError(f"bad connector label {self.label!r}")

    def __str__(self):
        return self.label + self.direction


@dataclass(frozen=True)
class And:
    items: tuple

    def __str__(self):
        return "(" + " & ".join(map(str, self.items)) + ")" if self.items else "()"


@dataclass(frozen=True)
class Or:
    items: tuple

    def __str__(self):
        return "(" + " or ".join(map(str, self.items)) + ")"


ConnectorExpr = Union[Connector, And, Or]
EMPTY = And(())


@dataclass(frozen=True)
class Disjunct:
    left: tuple[Connector, ...] = ()
    right: tuple[Connector, ...] = ()

    def __str__(self):
        return " ".join(map(str, self.left + self.right)) or "()"


def expand(expr: ConnectorExpr) -> list[Disjunct]:
    """Distribute OR over AND; each result lists connectors nearest-first."""
    seqs = _dnf(expr)
    out: list[Disjunct] = []
    seen = set()
    for seq in seqs:
        d = Disjunct(tuple(c for c in seq if c.direction == "-"),
                     tuple(c for c in seq if c.direction == "+"))
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out


def _dnf(expr) -> list[tuple[Connector, ...]]:
    if isinstance(expr, Connector):
        return [(expr,)]
    if isinstance(expr, Or):
        return [s for item in expr.items for s in _dnf(item)]
    result: list[tuple] = [()]
    for item in expr.items:
        result = [a + b for a in result for b in _dnf(item)]
    return result


_HEAD = re.compile(r"^([A-Z]+)([a-z0-9*]*)$")


@lru_cache(maxsize=None)
def merge_labels(a: str, b: str) -> str | None:
    """Merged link label if ``a`` and ``b`` are compatible, else None.

    Labels of the form UPPER+lower compare their uppercase heads exactly and
    their lowercase subscripts position by position, a missing position acting
    as a wildcard (so ``Ss`` links to ``S``).  Other labels must be identical.
    """
    ma, mb = _HEAD.match(a), _HEAD.match(b)
    if not (ma and mb):
        return a if a == b else None
    if ma.group(1) != mb.group(1):
        return None
    sa, sb = ma.group(2), mb.group(2)
    merged = []
    for i in range(max(len(sa), len(sb))):
        x = sa[i] if i < len(sa) else "*"
        y = sb[i] if i < len(sb) else "*"
        if x == "*":
            merged.append(y)
        elif y == "*" or x == y:
            merged.append(x)
        else:
            return None
    return ma.group(1) + "".join(merged).rstrip("*")


# -- dictionary ---------------------------------------------------------------------


@dataclass
class Entry:
    word: str          # spelling as written in the dictionary (no subscript)
    subscript: str     # e.g. "v-d"; "" when absent
    expr: ConnectorExpr
    disjuncts: tuple[Disjunct, ...] = ()

    @property
    def pos(self) -> str:
        return POS_BY_SUBSCRIPT.get(self.subscript, "")


@dataclass
class Dictionary:
    entries: dict[str, Entry] = field(default_factory=dict)
    lemmas: dict[str, str] = field(default_factory=dict)
    inst_forms: dict[str, str] = field(default_factory=dict)
    plurals: set[str] = field(default_factory=set)
    light_verbs: set[str] = field(default_factory=set)

    @property
    def walls(self) -> bool:
        return WALL.lower() in self.entries

    @property
    def subscripts(self) -> dict[str, str]:
        return {e.word: e.subscript for e in self.entries.values()}

    def __contains__(self, word: str) -> bool:
        return self.entry(word) is not None

    def entry(self, word: str) -> Entry | None:
        e = self.entries.get(word.lower())
        if e is None and word.isdigit():
            e = self.entries.get(NUMBER)
        return e

    def disjuncts(self, word: str) -> tuple[Disjunct, ...]:
        e = self.entry(word)
        if e is None:
            raise ParseError(f"unknown word {word!r}")
        return e.disjuncts

    def spelling(self, word: str) -> str:
        e = self.entry(word)
        if e is None or e.word == NUMBER:
            return word
        return e.word

    def lemma(self, word: str) -> str:
        key = self.spelling(word)
        return self.lemmas.get(key.lower(), key)

    def inst_form(self, word: str) -> str:
        key = self.spelling(word)
        return self.inst_forms.get(key.lower(), self.lemma(word))

    def words(self) -> list[str]:
        return [e.word for k, e in self.entries.items()]

    def idioms(self) -> dict[tuple[str, ...], str]:
        return {tuple(e.word.lower().split("_")): e.word
                for e in self.entries.values() if "_" in e.word.strip("_")}

    def merged(self, other: "Dictionary") -> "Dictionary":
        """A new dictionary with ``other``'s entries layered over this one's."""
        return Dictionary({**self.entries, **other.entries},
                          {**self.lemmas, **other.lemmas},
                          {**self.inst_forms, **other.inst_forms},
                          self.plurals | other.plurals,
                          self.light_verbs | other.light_verbs)


_EXPR_TOKEN = re.compile(
    r"\s*(?:(?P<punct>[(){}&|∧∨])|(?P<conn>[A-Za-z][A-Za-z0-9_\-*]*[+\-])|(?P<word>[A-Za-z]+))"
)


def _linecol(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _ExprParser:
    def __init__(self, text: str, start: int, end: int):
        self.text = text
        self.pos = start
        self.end = end
        self.tok = None
        self._advance()

    def _err(self, msg, pos=None):
        line, col = _linecol(self.text, self.pos if pos is None else pos)
        raise DictionaryError(msg, line, col)

    def _advance(self):
        while self.pos < self.end and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= self.end:
            self.tok = None
            return
        m = _EXPR_TOKEN.match(self.text, self.pos, self.end)
        if not m:
            self._err(f"unexpected character {self.text[self.pos]!r}")
        self.tok_pos = m.start(m.lastgroup)
        if m.group("punct"):
            p = m.group("punct")
            self.tok = {"∧": "&", "∨": "|"}.get(p, p)
        elif m.group("conn"):
            self.tok = ("conn", m.group("conn"))
        else:
            w = m.group("word").lower()
            if w == "or":
                self.tok = "|"
            elif w == "and":
                self.tok = "&"
            else:
                self._err(f"unexpected word {m.group('word')!r}", m.start("word"))
        self.pos = m.end()

    def parse(self):
        if self.tok is None:
            return EMPTY
        e = self._expr()
        if self.tok is not None:
            self._err(f"unexpected token {self.tok!r}", self.tok_pos)
        return e

    def _expr(self):
        items = [self._term()]
        while self.tok == "|":
            self._advance()
            items.append(self._term())
        return items[0] if len(items) == 1 else Or(tuple(items))

    def _term(self):
        items = [self._factor()]
        while self.tok == "&":
            self._advance()
            items.append(self._factor())
        return items[0] if len(items) == 1 else And(tuple(items))

    def _factor(self):
        tok = self.tok
        if isinstance(tok, tuple):
            self._advance()
            label = tok[1][:-1]
            return Connector(label, tok[1][-1])
        if tok in ("(", "{"):
            close = ")" if tok == "(" else "}"
            self._advance()
            if self.tok == close:
                self._advance()
                return EMPTY
            inner = self._expr()
            if self.tok != close:
                self._err(f"expected {close!r}")
            self._advance()
            return Or((inner, EMPTY)) if close == "}" else inner
        self._err("expected connector or '('" if tok is not None else "unexpected end of expression")


def parse_expr(text: str) -> ConnectorExpr:
    text = text.replace("−", "-")
    return _ExprParser(text, 0, len(text)).parse()


def load_dictionary(text: str) -> Dictionary:
    text = text.replace("−", "-")
    # blank out comments while keeping offsets stable for error positions
    clean = re.sub(r"%[^\n]*", lambda m: " " * len(m.group()), text)
    d = Dictionary()
    pos = 0
    while True:
        semi = clean.find(";", pos)
        if semi < 0:
            rest = clean[pos:]
            if rest.strip():
                line, col = _linecol(text, pos + len(rest) - len(rest.lstrip()))
                raise DictionaryError("missing ';'", line, col)
            break
        stmt = clean[pos:semi]
        start = pos + len(stmt) - len(stmt.lstrip())
        if stmt.strip():
            _statement(d, text, clean, start, semi)
        pos = semi + 1
    return d


def _statement(d: Dictionary, text: str, clean: str, start: int, end: int) -> None:
    stmt = clean[start:end]
    if stmt.startswith("#"):
        parts = stmt[1:].split()
        name, args = parts[0], parts[1:]
        if name == "lemma" and len(args) == 2:
            d.lemmas[args[0].lower()] = args[1]
        elif name == "inst" and len(args) == 2:
            d.inst_forms[args[0].lower()] = args[1]
        elif name == "plural" and args:
            d.plurals.update(a.lower() for a in args)
        elif name == "light" and args:
            d.light_verbs.update(args)
        else:
            line, col = _linecol(text, start)
            raise DictionaryError(f"bad directive {stmt.strip()!r}", line, col)
        return
    colon = clean.find(":", start, end)
    if colon < 0:
        line, col = _linecol(text, start)
        raise DictionaryError("expected 'words: expression'", line, col)
    words = clean[start:colon].split()
    if not words:
        line, col = _linecol(text, start)
        raise DictionaryError("no words before ':'", line, col)
    expr = _ExprParser(clean, colon + 1, end).parse()
    disjuncts = tuple(expand(expr))
    for w in words:
        if w == ".":
            base, sub = ".", "x"
        else:
            base, _, sub = w.partition(".")
        if not re.match(r"^[^\s:;]+$", base):
            line, col = _linecol(text, start)
            raise DictionaryError(f"bad word {w!r}", line, col)
        key = base.lower()
        if key in d.entries:
            log.warning("duplicate dictionary entry for %r; last one wins", base)
        d.entries[key] = Entry(base, sub, expr, disjuncts)


# -- tokenization -------------------------------------------------------------------

_PUNCT = re.compile(r"[.,;!?]")


def tokenize(sentence: str, dictionary: Dictionary | None = None) -> list[str]:
    """Split off punctuation and merge dictionary idioms (``a_b_c``) greedily."""
    raw: list[str] = []
    for chunk in sentence.split():
        lead = []
        while chunk and _PUNCT.match(chunk[0]):
            lead.append(chunk[0])
            chunk = chunk[1:]
        trail = []
        while chunk and _PUNCT.match(chunk[-1]):
            trail.insert(0, chunk[-1])
            chunk = chunk[:-1]
        raw.extend(lead)
        if chunk:
            raw.append(chunk)
        raw.extend(trail)
    if dictionary is None:
        return raw
    idioms = dictionary.idioms()
    if not idioms:
        return raw
    longest = max(len(k) for k in idioms)
    out: list[str] = []
    i = 0
    while i < len(raw):
        for n in range(min(longest, len(raw) - i), 1, -1):
            key = tuple(t.lower() for t in raw[i:i + n])
            if key in idioms:
                out.append(idioms[key])
                i += n
                break
        else:
            out.append(raw[i])
            i += 1
    return out


# -- linkages -----------------------------------------------------------------------

Link = tuple  # (i, j, label) with i < j


def crossing_pairs(links: Iterable[tuple]) -> list[tuple]:
    """All pairs of links (i, j), (k, l) with i < k < j < l."""
    spans = sorted({(min(a, b), max(a, b)) for a, b, *_ in links})
    out = []
    for x, (i, j) in enumerate(spans):
        for k, l in spans[x + 1:]:
            if i < k < j < l or k < i < l < j:
                out.append(((i, j), (k, l)))
    return out


def is_planar(links: Iterable[tuple]) -> bool:
    return not crossing_pairs(links)


@dataclass(frozen=True)
class Linkage:
    tokens: tuple[str, ...]
    links: tuple[Link, ...]
    disjuncts: tuple[Disjunct, ...] | None = None

    @property
    def cost(self) -> tuple[int, int]:
        return (len(self.links), sum(j - i for i, j, _ in self.links))

    def rank_key(self):
        return (*self.cost, tuple((lab, i, j) for i, j, lab in self.links))

    def neighbours(self, i: int) -> list[tuple[int, str]]:
        out = []
        for a, b, lab in self.links:
            if a == i:
                out.append((b, lab))
            elif b == i:
                out.append((a, lab))
        return out

    def link_set(self) -> set[tuple[str, str, str]]:
        return {(lab, self.tokens[i], self.tokens[j]) for i, j, lab in self.links}


@dataclass
class ParseResult:
    tokens: tuple[str, ...]
    linkages: list[Linkage]

    def __len__(self):
        return len(self.linkages)

    def __iter__(self):
        return iter(self.linkages)

    def __bool__(self):
        return bool(self.linkages)

    @property
    def costs(self) -> list[tuple[int, int]]:
        return [lk.cost for lk in self.linkages]

    @property
    def top(self) -> Linkage | None:
        return self.linkages[0] if self.linkages else None


def _reversed_disjuncts(dis: Sequence[Disjunct]):
    # recursion consumes connectors farthest-first
    return [(tuple(reversed(d.left)), tuple(reversed(d.right))) for d in dis]


def parse(tokens: Sequence[str] | str, dictionary: Dictionary,
          walls: bool | None = None) -> ParseResult:
    """Every planar, connected linkage of ``tokens``, ranked by cost.

    Ranking: fewer links, then smaller total link length, then labels.
    """
    if isinstance(tokens, str):
        tokens = tokenize(tokens, dictionary)
    tokens = list(tokens)
    if walls is None:
        walls = dictionary.walls
    if walls:
        if WALL.lower() not in dictionary.entries:
            raise ParseError("walls requested but the dictionary has no LEFT-WALL entry")
        tokens = [WALL] + [t for t in tokens if t != WALL]
    for t in tokens:
        if t not in dictionary:
            raise ParseError(f"unknown word {t!r}")
    n = len(tokens)
    if n == 0:
        return ParseResult((), [])
    raw = [dictionary.disjuncts(t) for t in tokens]
    far = [_reversed_disjuncts(d) for d in raw]
    memo: dict = {}

    def region(L: int, R: int, l: tuple, r: tuple) -> list:
        key = (L, R, l, r)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out: list = []
        if R == L + 1:
            if not l and not r:
                out.append((frozenset(), frozenset()))
            memo[key] = out
            return out
        if not l and not r:
            memo[key] = out
            return out
        for W in range(L + 1, R):
            for di, (dl, dr) in enumerate(far[W]):
                lab_l = merge_labels(l[0].label, dl[0].label) if (l and dl) else None
                lab_r = merge_labels(dr[0].label, r[0].label) if (dr and r) else None
                lefts = region(L, W, l[1:], dl[1:]) if lab_l else []
                rights = region(W, R, dr[1:], r[1:]) if lab_r else []
                choice = frozenset({(W, di)})
                if lefts and rights:
                    for (a_links, a_ch), (b_links, b_ch) in product(lefts, rights):
                        out.append((a_links | b_links | {(L, W, lab_l), (W, R, lab_r)},
                                    a_ch | b_ch | choice))
                if lefts:
                    for (a_links, a_ch), (b_links, b_ch) in product(lefts, region(W, R, dr, r)):
                        out.append((a_links | b_links | {(L, W, lab_l)}, a_ch | b_ch | choice))
                if rights and not l:
                    for (a_links, a_ch), (b_links, b_ch) in product(region(L, W, l, dl), rights):
                        out.append((a_links | b_links | {(W, R, lab_r)}, a_ch | b_ch | choice))
        memo[key] = out
        return out

    found: dict = {}
    for d0, (dl, dr) in enumerate(far[0]):
        if dl:
            continue
        for links, choices in region(0, n, dr, ()):
            ch = dict(choices)
            ch[0] = d0
            disj = tuple(raw[i][ch[i]] for i in range(n))
            lk = Linkage(tuple(tokens), tuple(sorted(links)), disj)
            found.setdefault((lk.links, disj), lk)
    linkages = sorted(found.values(), key=Linkage.rank_key)
    return ParseResult(tuple(tokens), linkages)


@dataclass(frozen=True)
class MetaruleReport:
    planar: bool
    connected: bool
    exclusion: bool
    ordering: bool

    @property
    def ok(self) -> bool:
        return self.planar and self.connected and self.exclusion and self.ordering


def check_metarules(linkage: Linkage | Iterable[tuple], n_tokens: int | None = None) -> MetaruleReport:
    """Evaluate the four metarules independently of how the linkage was made."""
    if isinstance(linkage, Linkage):
        links = list(linkage.links)
        n = len(linkage.tokens)
        disjuncts = linkage.disjuncts
    else:
        links = [tuple(x) for x in linkage]
        n = n_tokens if n_tokens is not None else (max((max(a, b) for a, b, *_ in links), default=-1) + 1)
        disjuncts = None
    planar = is_planar(links)
    pairs = [(min(a, b), max(a, b)) for a, b, *_ in links]
    exclusion = len(pairs) == len(set(pairs))
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    connected = n <= 1 or len({find(i) for i in range(n)}) == 1
    ordering = True
    if disjuncts is not None:
        for i, d in enumerate(disjuncts):
            left = sorted(((a, lab) for a, b, lab in links if b == i), key=lambda x: -x[0])
            right = sorted(((b, lab) for a, b, lab in links if a == i), key=lambda x: x[0])
            if len(left) != len(d.left) or len(right) != len(d.right):
                ordering = False
                break
            if any(merge_labels(c.label, lab) is None for c, (_, lab) in zip(d.left, left)) or \
               any(merge_labels(c.label, lab) is None for c, (_, lab) in zip(d.right, right)):
                ordering = False
                break
    return MetaruleReport(planar, connected, exclusion, ordering)


def render(linkage: Linkage) -> str:
    """ASCII arc diagram plus a machine-readable ``(i j LABEL)`` list."""
    toks = list(linkage.tokens)
    starts = []
    col = 0
    for t in toks:
        starts.append(col + len(t) // 2)
        col += len(t) + 1
    width = col
    rows: list[list[str]] = []
    order = sorted(linkage.links, key=lambda x: (x[1] - x[0], x[0]))
    levels: list[list[tuple[int, int]]] = []
    placed = []
    for i, j, lab in order:
        a, b = starts[i], starts[j]
        lvl = 0
        while lvl < len(levels) and any(not (b < x or a > y) for x, y in levels[lvl]):
            lvl += 1
        if lvl == len(levels):
            levels.append([])
        levels[lvl].append((a, b))
        placed.append((lvl, a, b, lab))
    nlev = len(levels)
    grid = [[" "] * width for _ in range(2 * nlev)]
    for lvl, a, b, lab in placed:
        top = 2 * (nlev - 1 - lvl)
        for x in range(a, b + 1):
            grid[top][x] = "-"
        grid[top][a] = grid[top][b] = "+"
        mid = a + (b - a - len(lab)) // 2 + 1
        for k, ch in enumerate(lab):
            if a < mid + k < b:
                grid[top][mid + k] = ch
        for y in range(top + 1, 2 * nlev):
            for x in (a, b):
                if grid[y][x] == " ":
                    grid[y][x] = "|"
    lines = ["".join(r).rstrip() for r in grid]
    lines.append(" ".join(toks))
    lines.extend(f"({i} {j} {lab})" for i, j, lab in linkage.links)
    return "\n".join(lines)
