"""Seeded generators for star, two-center and identical-tree configurations."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from .errors import OutOfSupportedRange
from .graph import ColoredMultigraph
from .latin import LatinSquare

KINDS = ("different-centers", "same-center", "two-centers", "identical-trees")


def star_graph(n: int, centers: Sequence[int]) -> ColoredMultigraph:
    """Graph whose color c class is the spanning star centered at centers[c]."""
    triples = [(hub, x, c) for c, hub in enumerate(centers) for x in range(n) if x != hub]
    return ColoredMultigraph.from_triples(n, triples, len(centers))


def tree_copies(n: int, tree: Sequence[tuple[int, int]]) -> ColoredMultigraph:
    """n-1 differently colored copies of one spanning tree."""
    triples = [(a, b, c) for c in range(n - 1) for a, b in tree]
    return ColoredMultigraph.from_triples(n, triples, n - 1)


def shuffled_edges(g: ColoredMultigraph, rng: random.Random) -> ColoredMultigraph:
    """Same multigraph with edge ids permuted."""
    triples = g.triples()
    rng.shuffle(triples)
    return ColoredMultigraph.from_triples(g.vertex_count, triples, g.color_count)


def random_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform labelled spanning tree on n vertices from a random Pruefer code."""
    if n == 2:
        return [(0, 1)]
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    a, b = [v for v in range(n) if degree[v] == 1]
    edges.append((a, b))
    return sorted(edges)


def random_latin_square(m: int, rng: random.Random) -> LatinSquare:
    """Cyclic square with rows, columns and symbols shuffled."""
    rows, cols, syms = (rng.sample(range(m), m) for _ in range(3))
    return LatinSquare(tuple(tuple(syms[(rows[i] + cols[j]) % m] for j in range(m)) for i in range(m)))


def generate(kind: str, n: int, seed: int = 0) -> ColoredMultigraph:
    if kind not in KINDS:
        raise OutOfSupportedRange(f"unknown kind {kind!r}")
    if n < 2 or (kind == "two-centers" and n < 3):
        raise OutOfSupportedRange(f"n={n} too small for {kind}")
    rng = random.Random(seed)
    m = n - 1
    if kind == "different-centers":
        centers = rng.sample(range(n), m)
    elif kind == "same-center":
        centers = [rng.randrange(n)] * m
    elif kind == "two-centers":
        k, j = rng.sample(range(n), 2)
        n_k = rng.randint(1, m - 1)
        colors = rng.sample(range(m), m)
        centers = [0] * m
        for pos, c in enumerate(colors):
            centers[c] = k if pos < n_k else j
    else:
        return tree_copies(n, random_tree(n, rng))
    return star_graph(n, centers)


def center_maps(n: int) -> Iterator[tuple[int, ...]]:
    """Every assignment of the n-1 colors to centers among n vertices."""
    return itertools.product(range(n), repeat=n - 1)


def distinct_center_maps(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(n), n - 1)


def center_multiset_representatives(n: int) -> Iterator[tuple[int, ...]]:
    """One center map per multiset of stars-per-vertex counts (a partition of n-1)."""
    seen = set()
    for cm in center_maps(n):
        counts = [0] * n
        for v in cm:
            counts[v] += 1
        key = tuple(sorted(counts, reverse=True))
        if key not in seen:
            seen.add(key)
            yield cm
