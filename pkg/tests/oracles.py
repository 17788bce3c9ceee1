"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import random

from symground.linkgrammar import Dictionary, Linkage, is_planar, load_dictionary, merge_labels

LABELS = ("A", "B", "Ca", "Cb", "C")
WEIGHTS = (4, 2, 1, 1, 2)


def _connected(n: int, pairs) -> bool:
    seen, todo = {0}, [0]
    adj = {i: set() for i in range(n)}
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    while todo:
        for j in adj[todo.pop()] - seen:
            seen.add(j)
            todo.append(j)
    return len(seen) == n


def _labels_for(tokens_dis, pairs):
    """Link labels if every connector is used once in nearest-first order, else None."""
    left = {i: sorted((a for a, b in pairs if b == i), reverse=True) for i in range(len(tokens_dis))}
    right = {i: sorted(b for a, b in pairs if a == i) for i in range(len(tokens_dis))}
    for i, d in enumerate(tokens_dis):
        if len(left[i]) != len(d.left) or len(right[i]) != len(d.right):
            return None
    out = {}
    for a, b in pairs:
        lab = merge_labels(tokens_dis[a].right[right[a].index(b)].label,
                           tokens_dis[b].left[left[b].index(a)].label)
        if lab is None:
            return None
        out[(a, b)] = lab
    return out


def brute_force_linkages(tokens: list[str], d: Dictionary) -> set:
    """Every (links, disjuncts) pair found by enumerating link subsets outright."""
    n = len(tokens)
    spans = [(i, j) for i in range(n) for j in range(i + 1, n)]
    choices = [d.disjuncts(t) for t in tokens]
    found = set()
    for k in range(len(spans) + 1):
        for pairs in itertools.combinations(spans, k):
            if not is_planar(pairs) or not _connected(n, pairs):
                continue
            fits = [[dj for dj in choices[i]
                     if len(dj.left) == sum(b == i for _, b in pairs)
                     and len(dj.right) == sum(a == i for a, _ in pairs)] for i in range(n)]
            for dis in itertools.product(*fits):
                labels = _labels_for(dis, pairs)
                if labels is None:
                    continue
                links = tuple(sorted((a, b, labels[(a, b)]) for a, b in pairs))
                found.add((links, dis))
    return found


def parser_linkages(result) -> set:
    return {(lk.links, lk.disjuncts) for lk in result.linkages}


def _random_side(rng: random.Random, sign: str) -> list[str]:
    k = rng.choice((0, 1, 1, 2))
    return [lab + sign for lab in rng.choices(LABELS, WEIGHTS, k=k)]


def _planted_links(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """A random connected planar link set over ``n`` tokens."""
    pairs: list[tuple[int, int]] = []
    spans = [(i, j) for i in range(n) for j in range(i + 1, n)]
    while not _connected(n, pairs):
        p = rng.choice(spans)
        if p not in pairs and is_planar(pairs + [p]):
            pairs.append(p)
    for p in rng.sample(spans, k=min(len(spans), rng.randint(0, 2))):
        if p not in pairs and is_planar(pairs + [p]):
            pairs.append(p)
    return pairs


def _ends(rng: random.Random) -> tuple[str, str]:
    lab = rng.choices(LABELS, WEIGHTS)[0]
    if lab == "C" and rng.random() < 0.5:
        return rng.choice([("Ca", "C"), ("C", "Cb"), ("Ca", "Ca")])
    return lab, lab


def random_instance(rng: random.Random, n_words: int = 3, max_len: int = 5):
    """A small random dictionary and a sentence over its words.

    Most instances plant one linkage so the sentence has at least one parse;
    the rest are unconstrained noise.
    """
    words = [f"w{i}" for i in range(n_words)]
    n = rng.randint(1, max_len)
    sentence = [rng.choice(words) for _ in range(n)]
    alts: dict[str, list[str]] = {w: [] for w in words}
    if rng.random() < 0.7:
        left: dict[int, list] = {i: [] for i in range(n)}
        right: dict[int, list] = {i: [] for i in range(n)}
        for a, b in _planted_links(rng, n):
            ra, lb = _ends(rng)
            right[a].append((b, ra + "+"))
            left[b].append((a, lb + "-"))
        for i, w in enumerate(sentence):
            conns = [c for _, c in sorted(left[i], reverse=True)] + [c for _, c in sorted(right[i])]
            alts[w].append("(" + " & ".join(conns) + ")" if conns else "()")
    for w in words:
        for _ in range(rng.randint(0 if alts[w] else 1, 2)):
            conns = _random_side(rng, "-") + _random_side(rng, "+")
            alts[w].append("(" + " & ".join(conns) + ")" if conns else "()")
    text = "\n".join(f"{w}: {' or '.join(dict.fromkeys(a))};" for w, a in alts.items())
    return load_dictionary(text), sentence, text
