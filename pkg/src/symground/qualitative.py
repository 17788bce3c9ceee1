"""RCC-8 and Allen interval algebras: oracles, converses, composition, path consistency.

Relation sets are plain ``int`` bitmasks over an algebra's base relations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _tables

RCC8_NAMES = ("DC", "EC", "PO", "EQ", "TPP", "NTPP", "TPPi", "NTPPi")
ALLEN_NAMES = ("before", "meets", "overlaps", "starts", "during", "finishes", "equal",
               "after", "met-by", "overlapped-by", "started-by", "contains", "finished-by")
GAO_NAMES = ("G+", "A+", "O+", "E", "O-", "A-", "G-")


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Algebra:
    name: str
    relations: tuple[str, ...]
    converses: Mapping[str, str]
    identity: str
    table: Mapping[tuple[str, str], frozenset] | None = field(default=None, compare=False, hash=False)

    @cached_property
    def index(self) -> dict[str, int]:
        return {r: i for i, r in enumerate(self.relations)}

    @property
    def full(self) -> int:
        return (1 << len(self.relations)) - 1

    def bit(self, r: str) -> int:
        try:
            return 1 << self.index[r]
        except KeyError:
            raise AlgebraError(f"{r!r} is not a {self.name} relation") from None

    def rset(self, rels: Iterable[str]) -> int:
        out = 0
        for r in rels:
            out |= self.bit(r)
        return out

    def names(self, mask: int) -> list[str]:
        return [r for i, r in enumerate(self.relations) if mask >> i & 1]

    def converse(self, r: str) -> str:
        if r not in self.index:
            raise AlgebraError(f"{r!r} is not a {self.name} relation")
        return self.converses[r]

    def converse_set(self, mask: int) -> int:
        return self._conv_masks[mask] if mask <= self.full else self.rset(self.converse(r) for r in self.names(mask))

    @cached_property
    def _conv_masks(self) -> list[int]:
        single = [self.bit(self.converses[r]) for r in self.relations]
        out = [0] * (self.full + 1)
        for m in range(1, self.full + 1):
            low = m & -m
            out[m] = out[m ^ low] | single[low.bit_length() - 1]
        return out

    def compose(self, r1: str, r2: str) -> int:
        if self.table is None:
            raise AlgebraError(f"{self.name} has no composition table")
        self.bit(r1), self.bit(r2)
        return self.rset(self.table[(r1, r2)])

    @cached_property
    def _comp_bits(self) -> list[list[int]]:
        return [[self.compose(a, b) for b in self.relations] for a in self.relations]

    def compose_sets(self, s1: int, s2: int) -> int:
        out = 0
        cb = self._comp_bits
        for i in range(len(self.relations)):
            if s1 >> i & 1:
                row = cb[i]
                for j in range(len(self.relations)):
                    if s2 >> j & 1:
                        out |= row[j]
        return out

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.names(mask)) + "}"

    def parse_set(self, text: str) -> int:
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        parts = [p.strip() for p in body.split(",") if p.strip()]
        return self.rset(parts)


_RCC_CONV = {"DC": "DC", "EC": "EC", "PO": "PO", "EQ": "EQ",
             "TPP": "TPPi", "NTPP": "NTPPi", "TPPi": "TPP", "NTPPi": "NTPP"}
_ALLEN_CONV = dict(zip(ALLEN_NAMES[:7], ("after", "met-by", "overlapped-by", "started-by",
                                         "contains", "finished-by", "equal")))
_ALLEN_CONV.update({v: k for k, v in _ALLEN_CONV.items()})
_GAO_CONV = {"G+": "G-", "G-": "G+", "A+": "A-", "A-": "A+", "O+": "O-", "O-": "O+", "E": "E"}

RCC8 = Algebra("rcc8", RCC8_NAMES, _RCC_CONV, "EQ", _tables.RCC8_TABLE)
ALLEN = Algebra("allen", ALLEN_NAMES, _ALLEN_CONV, "equal", _tables.ALLEN_TABLE)
GAO_H = Algebra("gao-h", GAO_NAMES, _GAO_CONV, "E")
GAO_V = Algebra("gao-v", GAO_NAMES, _GAO_CONV, "E")
ALGEBRAS = {a.name: a for a in (RCC8, ALLEN, GAO_H, GAO_V)}


def algebra(name: str) -> Algebra:
    try:
        return ALGEBRAS[name]
    except KeyError:
        raise AlgebraError(f"unknown algebra {name!r}") from None


# -- oracles ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntInterval:
    start: int
    end: int

    def __post_init__(self):
        if not self.start < self.end:
            raise ValueError(f"degenerate interval [{self.start},{self.end}]")

    def shifted(self, k: int) -> "IntInterval":
        return IntInterval(self.start + k, self.end + k)


def allen_classify(x: IntInterval | tuple, y: IntInterval | tuple) -> str:
    a, b = (x.start, x.end) if isinstance(x, IntInterval) else x
    c, d = (y.start, y.end) if isinstance(y, IntInterval) else y
    if not (a < b and c < d):
        raise ValueError("degenerate interval")
    if b < c:
        return "before"
    if d < a:
        return "after"
    if b == c:
        return "meets"
    if d == a:
        return "met-by"
    if a == c and b == d:
        return "equal"
    if a == c:
        return "starts" if b < d else "started-by"
    if b == d:
        return "finishes" if a > c else "finished-by"
    if c < a and b < d:
        return "during"
    if a < c and d < b:
        return "contains"
    return "overlaps" if a < c else "overlapped-by"


def coarsen_to_gao(r: str) -> str:
    """Gap / abut / overlap with a sign: + when x lies first along the axis."""
    fixed = {"before": "G+", "after": "G-", "meets": "A+", "met-by": "A-"}
    if r in fixed:
        return fixed[r]
    if r in ("overlaps", "contains", "finished-by"):
        return "O+"
    if r in ("overlapped-by", "during", "finishes"):
        return "O-"
    if r in ("equal", "starts", "started-by"):
        return "E"
    raise AlgebraError(f"{r!r} is not an Allen relation")


Cell = tuple[int, int]
_NEIGH = [(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1)]


@dataclass(frozen=True)
class GridRegion:
    """A finite union of closed unit cells; cell (i, j) is [i,i+1]x[j,j+1]."""

    cells: frozenset[Cell]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("empty region")

    @classmethod
    def of(cls, cells: Iterable[Cell]) -> "GridRegion":
        return cls(frozenset(map(tuple, cells)))

    @classmethod
    def box(cls, x0: int, y0: int, w: int, h: int) -> "GridRegion":
        return cls(frozenset((x0 + i, y0 + j) for i in range(w) for j in range(h)))

    def halo(self) -> frozenset[Cell]:
        """Cells whose closure meets this region's closure."""
        return frozenset((x + dx, y + dy) for x, y in self.cells for dx, dy in _NEIGH)


def connected(x: GridRegion, y: GridRegion) -> bool:
    return not x.halo().isdisjoint(y.cells)


def _interior_part(x: GridRegion, y: GridRegion) -> bool:
    return x.halo() <= y.cells


def rcc8_classify(x: GridRegion, y: GridRegion) -> str:
    if not connected(x, y):
        return "DC"
    if x.cells.isdisjoint(y.cells):
        return "EC"
    if x.cells == y.cells:
        return "EQ"
    if x.cells < y.cells:
        return "NTPP" if _interior_part(x, y) else "TPP"
    if y.cells < x.cells:
        return "NTPPi" if _interior_part(y, x) else "TPPi"
    return "PO"


def box_rcc8(hx: tuple[int, int], vx: tuple[int, int], hy: tuple[int, int], vy: tuple[int, int]) -> str:
    """RCC-8 relation between two closed axis-aligned boxes, from per-axis intervals."""
    rh, rv = allen_classify(hx, hy), allen_classify(vx, vy)
    if rh in ("before", "after") or rv in ("before", "after"):
        return "DC"
    if rh in ("meets", "met-by") or rv in ("meets", "met-by"):
        return "EC"
    if rh == "equal" and rv == "equal":
        return "EQ"
    inside = ("during", "starts", "finishes", "equal")
    holds = ("contains", "started-by", "finished-by", "equal")
    if rh in inside and rv in inside:
        return "NTPP" if rh == "during" and rv == "during" else "TPP"
    if rh in holds and rv in holds:
        return "NTPPi" if rh == "contains" and rv == "contains" else "TPPi"
    return "PO"


# -- composition tables from the oracles --------------------------------------------


def _compose_from_matrix(rel: np.ndarray, alg: Algebra, min_count: int = 1):
    """Triple witness counts via one-hot matrix products.

    rel[x, y] holds the relation index between domain objects x and y.
    Returns counts[r1, r2, r3] = number of (x, z) pairs with some y witnessing.
    """
    k = len(alg.relations)
    onehot = [(rel == r).astype(np.float32) for r in range(k)]
    counts = np.zeros((k, k, k), dtype=np.int64)
    for a in range(k):
        for b in range(k):
            reach = (onehot[a] @ onehot[b]) > 0
            if not reach.any():
                continue
            vals = rel[reach]
            counts[a, b] = np.bincount(vals, minlength=k)
    return counts


def allen_domain(max_endpoint: int = 12) -> list[tuple[int, int]]:
    return [(a, b) for a in range(max_endpoint + 1) for b in range(a + 1, max_endpoint + 1)]


def _relation_matrix(domain, classify, alg: Algebra) -> np.ndarray:
    idx = alg.index
    n = len(domain)
    rel = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(domain):
        for j, y in enumerate(domain):
            rel[i, j] = idx[classify(x, y)]
    return rel


def allen_table_from_oracle(max_endpoint: int = 12) -> dict[tuple[str, str], frozenset]:
    dom = allen_domain(max_endpoint)
    counts = _compose_from_matrix(_relation_matrix(dom, allen_classify, ALLEN), ALLEN)
    return _table_from_counts(counts, ALLEN)


def rcc8_box_domain(canvas: int = 8, max_side: int | None = None) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Axis-aligned boxes with corners on a ``canvas``-square integer grid."""
    max_side = canvas if max_side is None else max_side
    sides = [(a, a + w) for w in range(1, max_side + 1) for a in range(0, canvas - w + 1)]
    return [(h, v) for h in sides for v in sides]


def _box_combine_table() -> np.ndarray:
    idx = ALLEN.index
    out = np.empty((13, 13), dtype=np.int64)
    reps = {}
    for x in allen_domain(4):
        for y in allen_domain(4):
            reps.setdefault(allen_classify(x, y), (x, y))
    for rh, (hx, hy) in reps.items():
        for rv, (vx, vy) in reps.items():
            out[idx[rh], idx[rv]] = RCC8.index[box_rcc8(hx, vx, hy, vy)]
    return out


def box_relation_matrix(dom) -> np.ndarray:
    """RCC-8 relation indices between all pairs of boxes, vectorized per axis."""
    sides = sorted({b[0] for b in dom} | {b[1] for b in dom})
    sidx = {s: i for i, s in enumerate(sides)}
    allen = _relation_matrix(sides, allen_classify, ALLEN)
    hi = np.array([sidx[b[0]] for b in dom])
    vi = np.array([sidx[b[1]] for b in dom])
    combine = _box_combine_table()
    return combine[allen[np.ix_(hi, hi)], allen[np.ix_(vi, vi)]]


def rcc8_table_from_oracle(canvas: int = 8, max_side: int | None = None) -> dict[tuple[str, str], frozenset]:
    dom = rcc8_box_domain(canvas, max_side)
    return _table_from_counts(_compose_from_matrix(box_relation_matrix(dom), RCC8), RCC8)


def _table_from_counts(counts: np.ndarray, alg: Algebra) -> dict[tuple[str, str], frozenset]:
    names = alg.relations
    return {(names[a], names[b]): frozenset(names[c] for c in np.nonzero(counts[a, b])[0])
            for a in range(len(names)) for b in range(len(names))}


def table_tsv(alg: Algebra) -> str:
    rows = ["\t".join([alg.name] + list(alg.relations))]
    for a in alg.relations:
        cells = [",".join(alg.names(alg.compose(a, b))) for b in alg.relations]
        rows.append("\t".join([a] + cells))
    return "\n".join(rows) + "\n"


# -- constraint networks --------------------------------------------------------------


class Inconsistent(Exception):
    """Raised or returned when a network has an empty relation set."""


@dataclass
class ConstraintNetwork:
    algebra: Algebra
    variables: list[str] = field(default_factory=list)
    constraints: dict[tuple[str, str], int] = field(default_factory=dict)

    def _order(self, a: str, b: str) -> bool:
        return self.variables.index(a) < self.variables.index(b)

    def add_variable(self, v: str) -> None:
        if v not in self.variables:
            self.variables.append(v)

    def get(self, a: str, b: str) -> int:
        if a == b:
            return self.algebra.bit(self.algebra.identity)
        if self._order(a, b):
            return self.constraints.get((a, b), self.algebra.full)
        return self.algebra.converse_set(self.constraints.get((b, a), self.algebra.full))

    def set(self, a: str, b: str, mask: int) -> None:
        """Intersect the stored constraint with ``mask``."""
        self.add_variable(a)
        self.add_variable(b)
        if a == b:
            return
        if not self._order(a, b):
            a, b, mask = b, a, self.algebra.converse_set(mask)
        self.constraints[(a, b)] = self.constraints.get((a, b), self.algebra.full) & mask

    def copy(self) -> "ConstraintNetwork":
        return ConstraintNetwork(self.algebra, list(self.variables), dict(self.constraints))

    def explicit(self) -> dict[tuple[str, str], int]:
        """Every ordered pair i<j including unconstrained (full) ones."""
        vs = self.variables
        return {(vs[i], vs[j]): self.get(vs[i], vs[j])
                for i in range(len(vs)) for j in range(i + 1, len(vs))}

    def __eq__(self, other):
        if not isinstance(other, ConstraintNetwork):
            return NotImplemented
        return (self.algebra.name == other.algebra.name
                and set(self.variables) == set(other.variables)
                and all(self.get(a, b) == other.get(a, b)
                        for a in self.variables for b in self.variables))

    def to_text(self) -> str:
        lines = []
        for (a, b), m in sorted(self.explicit().items(), key=lambda kv: (self.variables.index(kv[0][0]), self.variables.index(kv[0][1]))):
            if m != self.algebra.full or (a, b) in self.constraints:
                lines.append(f"{a} {b} {self.algebra.format(m)}")
        return "\n".join(lines) + ("\n" if lines else "")


def read_network(text: str, alg: Algebra | str | None = None) -> ConstraintNetwork:
    """Lines ``a b {REL,...}``; ``# algebra NAME`` or the relation names pick the algebra."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "algebra" and alg is None:
                alg = parts[1]
            continue
        lines.append(line)
    if isinstance(alg, str):
        alg = algebra(alg)
    if alg is None:
        names = set()
        for line in lines:
            body = line.split(None, 2)[2] if len(line.split(None, 2)) == 3 else ""
            names.update(p.strip() for p in body.strip("{} ").split(",") if p.strip())
        alg = RCC8 if names and names <= set(RCC8_NAMES) else ALLEN
    net = ConstraintNetwork(alg)
    for line in lines:
        parts = line.split(None, 2)
        if len(parts) != 3:
            raise ValueError(f"bad network line {line!r}")
        net.set(parts[0], parts[1], alg.parse_set(parts[2]))
    return net


def path_consistency(net: ConstraintNetwork, schedule: random.Random | None = None) -> ConstraintNetwork | None:
    """Algebraic closure; returns the refined copy, or None when inconsistent.

    ``schedule`` shuffles the refinement order (the fixpoint does not depend on it).
    """
    alg = net.algebra
    vs = list(net.variables)
    n = len(vs)
    R = [[alg.full] * n for _ in range(n)]
    for i in range(n):
        R[i][i] = alg.bit(alg.identity)
        for j in range(i + 1, n):
            m = net.get(vs[i], vs[j])
            R[i][j] = m
            R[j][i] = alg.converse_set(m)
    if any(R[i][j] == 0 for i in range(n) for j in range(n)):
        return None
    queue = [(i, j) for i in range(n) for j in range(n) if i != j]
    if schedule is not None:
        schedule.shuffle(queue)
    pending = set(queue)
    while queue:
        i, j = queue.pop(0) if schedule is None else queue.pop(schedule.randrange(len(queue)))
        pending.discard((i, j))
        for k in range(n):
            if k == i or k == j:
                continue
            # refine R[i][k] through j and R[k][j] through i
            for a, b, c in ((i, j, k), (k, i, j)):
                new = R[a][c] & alg.compose_sets(R[a][b], R[b][c])
                if new != R[a][c]:
                    if new == 0:
                        return None
                    R[a][c] = new
                    R[c][a] = alg.converse_set(new)
                    for pair in ((a, c), (c, a)):
                        if pair not in pending:
                            pending.add(pair)
                            queue.append(pair)
    out = ConstraintNetwork(alg, vs, {})
    for i in range(n):
        for j in range(i + 1, n):
            if R[i][j] != alg.full or (vs[i], vs[j]) in net.constraints or (vs[j], vs[i]) in net.constraints:
                out.constraints[(vs[i], vs[j])] = R[i][j]
    return out


# -- exhaustive model search (test oracle) ------------------------------------------


def allen_model_exists(net: ConstraintNetwork, max_endpoint: int = 7) -> bool:
    """Backtracking search for integer intervals with endpoints 0..max_endpoint."""
    dom = allen_domain(max_endpoint)
    return _model_exists(net, len(dom), _relation_matrix(dom, allen_classify, ALLEN))


def rcc8_model_exists(net: ConstraintNetwork, canvas: int = 7) -> bool:
    """Backtracking search over axis-aligned boxes on a small canvas."""
    rel = _cached_box_matrix(canvas)
    return _model_exists(net, rel.shape[0], rel)


@lru_cache(maxsize=4)
def _cached_box_matrix(canvas: int) -> np.ndarray:
    return box_relation_matrix(rcc8_box_domain(canvas))


def _model_exists(net: ConstraintNetwork, size: int, rel: np.ndarray) -> bool:
    """Backtracking search with arc consistency over a finite witness domain."""
    alg = net.algebra
    vs = net.variables
    n = len(vs)
    bits = np.left_shift(1, rel)
    allowed = {}
    for a in range(n):
        for b in range(n):
            m = net.get(vs[a], vs[b])
            if a != b and m != alg.full:
                allowed[(a, b)] = (bits & m) != 0

    def arc_consistent(domains: list[np.ndarray]) -> bool:
        changed = True
        while changed:
            changed = False
            for (a, b), ok in allowed.items():
                supported = (ok[:, domains[b]]).any(axis=1) & domains[a]
                if not supported.any():
                    return False
                if (supported != domains[a]).any():
                    domains[a] = supported
                    changed = True
        return True

    def rec(domains: list[np.ndarray]) -> bool:
        if not arc_consistent(domains):
            return False
        open_vars = [v for v in range(n) if domains[v].sum() > 1]
        if not open_vars:
            return True
        k = min(open_vars, key=lambda v: int(domains[v].sum()))
        for cand in np.nonzero(domains[k])[0]:
            nxt = [d.copy() for d in domains]
            nxt[k] = np.zeros(size, dtype=bool)
            nxt[k][cand] = True
            if rec(nxt):
                return True
        return False

    return rec([np.ones(size, dtype=bool) for _ in range(n)])


def random_network(alg: Algebra, n_vars: int, rng: random.Random, density: float = 0.6) -> ConstraintNetwork:
    """Singleton-or-universal constraints between ``n_vars`` variables."""
    vs = [f"v{i}" for i in range(n_vars)]
    net = ConstraintNetwork(alg, list(vs))
    for i, j in itertools.combinations(range(n_vars), 2):
        if rng.random() < density:
            net.set(vs[i], vs[j], alg.bit(rng.choice(alg.relations)))
    return net
