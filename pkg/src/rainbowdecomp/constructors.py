"""Constructive rainbow decompositions for the star and identical-tree cases.

Each constructor returns a canonical ``RainbowCollection``; none of them
mutates its input.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    CentersNotAllEqual,
    CentersNotDistinct,
    ClassesNotIdentical,
    InvalidLatinSquare,
    InvalidTwoCenterConfig,
)
from .graph import (
    STAR,
    TREE,
    ColoredMultigraph,
    RainbowCollection,
    StarConfiguration,
    validate_graph,
)
from .latin import LatinSquare


def construct_different_centers(cfg: StarConfiguration) -> RainbowCollection:
    """One rainbow star per center.

    The star at the center of color c takes its own color-c edge to the
    vertex that hosts no center, and from every other center the edge of
    that center's color pointing back at it.
    """
    g, centers = cfg.graph, cfg.centers
    if len(set(centers)) != len(centers):
        raise CentersNotDistinct(f"centers {list(centers)} repeat a vertex")
    (free,) = set(range(g.vertex_count)) - set(centers)
    parts = []
    for c, hub in enumerate(centers):
        part = [g.find_edge(c, hub, free)]
        part.extend(g.find_edge(other, hub, centers[other]) for other in range(len(centers)) if other != c)
        parts.append(part)
    return RainbowCollection.from_edge_lists(parts, STAR)


def construct_same_center(cfg: StarConfiguration) -> RainbowCollection:
    """Rotate colors around the common center.

    With leaves l_0 < ... < l_{m-1}, star j gets the color-k edge to leaf
    l_{(j + k) mod m}, so its rainbow matrix is the cyclic Latin square.
    """
    g, centers = cfg.graph, cfg.centers
    if len(set(centers)) != 1:
        raise CentersNotAllEqual(f"centers {list(centers)} are not all equal")
    hub = centers[0]
    leaves = [v for v in range(g.vertex_count) if v != hub]
    m = len(leaves)
    parts = [[g.find_edge(k, hub, leaves[(j + k) % m]) for k in range(m)] for j in range(m)]
    return RainbowCollection.from_edge_lists(parts, STAR)


def tree_template(g: ColoredMultigraph) -> list[tuple[int, int]]:
    """Endpoint pairs shared by every color class, sorted; the edge slots.

    Raises ClassesNotIdentical unless each class spans the same tree.
    """
    n = g.vertex_count
    report = validate_graph(g)
    if g.color_count != n - 1:
        raise ClassesNotIdentical(f"expected {n - 1} colors, found {g.color_count}")
    template = None
    for cls in g.color_classes():
        ends = sorted(g.edges[i].ends for i in cls.edges)
        if not report.classes[cls.color].is_tree:
            raise ClassesNotIdentical(f"color {cls.color} is not a spanning tree")
        if template is None:
            template = ends
        elif ends != template:
            raise ClassesNotIdentical(f"color {cls.color} spans a different tree than color 0")
    return template or []


def construct_identical_trees(g: ColoredMultigraph, square) -> RainbowCollection:
    """Part i puts the color square[i][e] copy on template slot e."""
    slots = tree_template(g)
    m = len(slots)
    if not isinstance(square, LatinSquare):
        square = LatinSquare(tuple(tuple(r) for r in square))
    if square.side != m:
        raise InvalidLatinSquare(f"square has side {square.side}, need {m}")
    parts = [[g.find_edge(square[i, e], *slots[e]) for e in range(m)] for i in range(m)]
    return RainbowCollection.from_edge_lists(parts, TREE)


@dataclass(frozen=True)
class TwoCenterConfig:
    cfg: StarConfiguration
    center_k: int
    center_j: int
    colors_k: tuple[int, ...]
    colors_j: tuple[int, ...]

    def __post_init__(self):
        centers = self.cfg.centers
        k, j = self.center_k, self.center_j
        if k == j:
            raise InvalidTwoCenterConfig("the two centers must differ")
        if not self.colors_k or not self.colors_j:
            raise InvalidTwoCenterConfig("each center must host at least one star")
        listed = Counter(self.colors_k) + Counter(self.colors_j)
        if sorted(listed) != list(range(len(centers))) or max(listed.values()) > 1:
            raise InvalidTwoCenterConfig("every color must appear in exactly one list")
        for c in self.colors_k:
            if centers[c] != k:
                raise InvalidTwoCenterConfig(f"color {c} is not centered at {k}")
        for c in self.colors_j:
            if centers[c] != j:
                raise InvalidTwoCenterConfig(f"color {c} is not centered at {j}")


def two_center_config(
    cfg: StarConfiguration,
    order_k: Sequence[int] | None = None,
    order_j: Sequence[int] | None = None,
) -> TwoCenterConfig:
    """Build a TwoCenterConfig; center_k is the lower-indexed center.

    Color orders default to ascending color ids.
    """
    hubs = sorted(set(cfg.centers))
    if len(hubs) != 2:
        raise InvalidTwoCenterConfig(f"stars sit on {len(hubs)} distinct centers, need exactly 2")
    k, j = hubs
    colors_k = tuple(order_k) if order_k is not None else tuple(cfg.colors_at(k))
    colors_j = tuple(order_j) if order_j is not None else tuple(cfg.colors_at(j))
    return TwoCenterConfig(cfg, k, j, colors_k, colors_j)


def construct_two_centers(tc: TwoCenterConfig) -> RainbowCollection:
    """n-1 rainbow trees, one per color c, each holding the color-c edge k-j.

    Colors are placed on the cycle colors_k + colors_j and non-center
    vertices are taken in ascending order.  In the tree of color c, a color
    a at cyclic distance d from c attaches the d-th non-center vertex to
    a's own center.  Within each tree every non-center vertex gets one edge,
    and for each color the distances to the other n-2 trees are distinct, so
    no edge is used twice.
    """
    g = tc.cfg.graph
    k, j = tc.center_k, tc.center_j
    cycle = list(tc.colors_k) + list(tc.colors_j)
    m = len(cycle)
    leaves = [v for v in range(g.vertex_count) if v not in (k, j)]
    hub = {c: k for c in tc.colors_k} | {c: j for c in tc.colors_j}
    parts = []
    for t, c in enumerate(cycle):
        part = [g.find_edge(c, k, j)]
        for s, a in enumerate(cycle):
            if a != c:
                part.append(g.find_edge(a, hub[a], leaves[(s - t) % m - 1]))
        parts.append(part)
    return RainbowCollection.from_edge_lists(parts, TREE)
