"""Edge-colored multigraphs, structural validation and decomposition certificates.

Vertices are ``0..n-1`` and colors ``0..m-1``.  Edges carry an integer id equal
to their position in ``ColoredMultigraph.edges``; every certificate refers to
edges by id so that parallel edges stay distinguishable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphFormatError, NotAStarConfiguration

STAR = "star"
TREE = "tree"
PATH = "path"
SHAPES = (STAR, TREE, PATH)


class DisjointSet:
    """Union-find over ``0..size-1`` with path halving."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class ColoredEdge:
    id: int
    u: int
    v: int
    color: int

    def __post_init__(self):
        if self.u == self.v:
            raise GraphFormatError(f"loop at vertex {self.u}", where=f"edges[{self.id}]")

    @property
    def ends(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class ColoredMultigraph:
    vertex_count: int
    edges: tuple[ColoredEdge, ...]
    color_count: int

    def __post_init__(self):
        if self.vertex_count < 1:
            raise GraphFormatError("vertex count must be positive", where="n")
        if self.color_count < 0:
            raise GraphFormatError("color count must be non-negative")
        object.__setattr__(self, "edges", tuple(self.edges))
        for pos, e in enumerate(self.edges):
            where = f"edges[{pos}]"
            if e.id != pos:
                raise GraphFormatError(f"edge id {e.id} does not match position", where=where)
            for x in (e.u, e.v):
                if not 0 <= x < self.vertex_count:
                    raise GraphFormatError(
                        f"vertex {x} out of range [0, {self.vertex_count})", where=where
                    )
            if not 0 <= e.color < self.color_count:
                raise GraphFormatError(
                    f"color {e.color} out of range [0, {self.color_count})", where=where
                )

    @classmethod
    def from_triples(
        cls, n: int, triples: Iterable[Sequence[int]], color_count: int | None = None
    ) -> "ColoredMultigraph":
        edges = tuple(ColoredEdge(i, int(u), int(v), int(c)) for i, (u, v, c) in enumerate(triples))
        if color_count is None:
            color_count = max((e.color for e in edges), default=-1) + 1
        return cls(n, edges, color_count)

    def triples(self) -> list[tuple[int, int, int]]:
        return [(e.u, e.v, e.color) for e in self.edges]

    @property
    def n(self) -> int:
        return self.vertex_count

    def color_class(self, color: int) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges if e.color == color)

    def color_classes(self) -> tuple["ColorClass", ...]:
        buckets: list[list[int]] = [[] for _ in range(self.color_count)]
        for e in self.edges:
            buckets[e.color].append(e.id)
        return tuple(ColorClass(c, tuple(ids)) for c, ids in enumerate(buckets))

    def degree(self, x: int) -> int:
        return sum((e.u == x) + (e.v == x) for e in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for e in self.edges:
            deg[e.u] += 1
            deg[e.v] += 1
        return deg

    def is_connected(self) -> bool:
        ds = DisjointSet(self.vertex_count)
        groups = self.vertex_count
        for e in self.edges:
            if ds.union(e.u, e.v):
                groups -= 1
        return groups == 1

    def find_edge(self, color: int, a: int, b: int) -> int:
        """Id of the unique edge of ``color`` joining ``a`` and ``b``."""
        key = (a, b) if a < b else (b, a)
        found = [e.id for e in self.edges if e.color == color and e.ends == key]
        if len(found) != 1:
            raise KeyError(f"expected one edge of color {color} between {a} and {b}, found {len(found)}")
        return found[0]


@dataclass(frozen=True)
class ColorClass:
    color: int
    edges: tuple[int, ...]


@dataclass(frozen=True)
class ShapeInfo:
    """Shape classification of an edge set as a spanning structure."""

    size: int
    is_tree: bool
    is_star: bool
    is_path: bool
    centers: tuple[int, ...]

    @property
    def label(self) -> str:
        if self.is_star:
            return STAR
        if self.is_path:
            return PATH
        if self.is_tree:
            return TREE
        return "other"


def classify_edges(n: int, pairs: Sequence[tuple[int, int]]) -> ShapeInfo:
    """Classify ``pairs`` (endpoint pairs on ``n`` vertices) as a spanning tree/star/path."""
    size = len(pairs)
    is_tree = size == n - 1 and n >= 1
    if is_tree:
        ds = DisjointSet(n)
        for a, b in pairs:
            if not ds.union(a, b):
                is_tree = False
                break
    centers: tuple[int, ...] = ()
    is_star = is_path = False
    if is_tree and n >= 2:
        common = set(pairs[0])
        for p in pairs[1:]:
            common &= set(p)
        centers = tuple(sorted(common))
        is_star = bool(centers)
        deg = Counter(x for p in pairs for x in p)
        is_path = max(deg.values()) <= 2
    elif is_tree:
        is_star = is_path = True
    return ShapeInfo(size, is_tree, is_star, is_path, centers)


@dataclass(frozen=True)
class ClassReport:
    color: int
    size: int
    shape: str
    is_tree: bool
    is_star: bool
    is_path: bool
    centers: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "color": self.color,
            "size": self.size,
            "shape": self.shape,
            "tree": self.is_tree,
            "star": self.is_star,
            "path": self.is_path,
            "centers": list(self.centers),
        }


@dataclass(frozen=True)
class ValidationReport:
    vertex_count: int
    edge_count: int
    color_count: int
    connected: bool
    loop_free: bool
    colors_match: bool
    classes: tuple[ClassReport, ...]

    @property
    def all_stars(self) -> bool:
        return bool(self.classes) and all(c.is_star for c in self.classes)

    @property
    def all_trees(self) -> bool:
        return bool(self.classes) and all(c.is_tree for c in self.classes)

    @property
    def all_paths(self) -> bool:
        return bool(self.classes) and all(c.is_path for c in self.classes)

    def to_dict(self) -> dict:
        return {
            "n": self.vertex_count,
            "edges": self.edge_count,
            "colors": self.color_count,
            "connected": self.connected,
            "loop_free": self.loop_free,
            "color_count_is_n_minus_1": self.colors_match,
            "classes": [c.to_dict() for c in self.classes],
        }


def validate_graph(g: ColoredMultigraph) -> ValidationReport:
    n = g.vertex_count
    classes = []
    for cls in g.color_classes():
        info = classify_edges(n, [g.edges[i].ends for i in cls.edges])
        classes.append(
            ClassReport(cls.color, info.size, info.label, info.is_tree, info.is_star, info.is_path, info.centers)
        )
    return ValidationReport(
        vertex_count=n,
        edge_count=len(g.edges),
        color_count=g.color_count,
        connected=g.is_connected(),
        loop_free=all(e.u != e.v for e in g.edges),
        colors_match=g.color_count == n - 1,
        classes=tuple(classes),
    )


@dataclass(frozen=True)
class StarConfiguration:
    graph: ColoredMultigraph
    centers: tuple[int, ...]  # indexed by color

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    def stars_per_vertex(self) -> list[int]:
        counts = [0] * self.n
        for c in self.centers:
            counts[c] += 1
        return counts

    def colors_at(self, vertex: int) -> list[int]:
        return [c for c, v in enumerate(self.centers) if v == vertex]


def as_star_configuration(g: ColoredMultigraph) -> StarConfiguration:
    """Read off the center of every color class.

    Raises NotAStarConfiguration naming the first class that is not a
    spanning star.  A one-edge star (n=2) takes its lower endpoint as center.
    """
    n = g.vertex_count
    if n < 2:
        raise NotAStarConfiguration(0, "graph needs at least 2 vertices")
    if g.color_count != n - 1:
        raise NotAStarConfiguration(
            min(g.color_count, n - 1), f"expected {n - 1} colors, found {g.color_count}"
        )
    report = validate_graph(g)
    if not report.connected:
        raise NotAStarConfiguration(0, "graph is not connected")
    centers = []
    for cls in report.classes:
        if not cls.is_star:
            raise NotAStarConfiguration(cls.color, f"color class is a {cls.shape}, not a spanning star")
        centers.append(cls.centers[0])
    return StarConfiguration(g, tuple(centers))


def vertex_degree_profile(cfg: StarConfiguration) -> dict[int, tuple[int, int]]:
    """Map each vertex to (stars centered there, predicted multigraph degree)."""
    n = cfg.n
    return {k: (s, (s + 1) * (n - 2) + 1) for k, s in enumerate(cfg.stars_per_vertex())}


@dataclass(frozen=True, order=True)
class RainbowSubgraph:
    edges: tuple[int, ...]
    shape: str = field(default=TREE, compare=False)


@dataclass(frozen=True)
class RainbowCollection:
    parts: tuple[RainbowSubgraph, ...]
    shape: str = TREE

    @classmethod
    def from_edge_lists(cls, parts: Iterable[Iterable[int]], shape: str = TREE) -> "RainbowCollection":
        return canonicalize(cls(tuple(RainbowSubgraph(tuple(p), shape) for p in parts), shape))

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.edges for p in self.parts)

    def to_lists(self) -> list[list[int]]:
        return [list(p.edges) for p in self.parts]


def canonicalize(coll: RainbowCollection) -> RainbowCollection:
    parts = sorted(RainbowSubgraph(tuple(sorted(p.edges)), p.shape) for p in coll.parts)
    return RainbowCollection(tuple(parts), coll.shape)


def decomposition_problems(g: ColoredMultigraph, coll: RainbowCollection, shape: str | None = None) -> list[str]:
    """Everything wrong with ``coll`` as a rainbow decomposition of ``g``; empty if valid."""
    shape = shape or coll.shape
    n = g.vertex_count
    problems = []
    if len(coll.parts) != n - 1:
        problems.append(f"expected {n - 1} parts, found {len(coll.parts)}")
    seen: Counter[int] = Counter()
    for i, part in enumerate(coll.parts):
        ids = part.edges
        bad = [x for x in ids if not 0 <= x < len(g.edges)]
        if bad:
            problems.append(f"part {i}: unknown edge ids {bad}")
            continue
        seen.update(ids)
        colors = [g.edges[x].color for x in ids]
        if len(set(colors)) != len(colors):
            problems.append(f"part {i}: not rainbow")
        info = classify_edges(n, [g.edges[x].ends for x in ids])
        if not info.is_tree:
            problems.append(f"part {i}: not a spanning tree")
        elif shape == STAR and not info.is_star:
            problems.append(f"part {i}: not a star")
        elif shape == PATH and not info.is_path:
            problems.append(f"part {i}: not a path")
    repeated = sorted(x for x, k in seen.items() if k > 1)
    if repeated:
        problems.append(f"edges used more than once: {repeated}")
    missing = sorted(set(range(len(g.edges))) - set(seen))
    if missing:
        problems.append(f"edges not covered: {missing}")
    return problems


def is_valid_decomposition(g: ColoredMultigraph, coll: RainbowCollection, shape: str | None = None) -> bool:
    return not decomposition_problems(g, coll, shape)
