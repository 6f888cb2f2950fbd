"""Exhaustive backtracking search for rainbow decompositions.

Every part of a decomposition holds exactly one edge of each color, so the
search fixes color 0 (its i-th edge opens part i, which also orders the
parts and makes each unordered collection appear once) and then, color by
color, matches that color's edges to the parts.  Partial parts are pruned on
cycles, on a vanishing common vertex (stars) and on degree 3 (paths).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CountUnavailable, HypothesisViolation, InstanceTooLarge, OutOfSupportedRange
from .graph import (
    PATH,
    SHAPES,
    STAR,
    ColoredMultigraph,
    RainbowCollection,
    StarConfiguration,
    classify_edges,
)
from .latin import count_omega

EXISTS = "exists"
COUNT = "count"
ENUMERATE = "enumerate"
MODES = (EXISTS, COUNT, ENUMERATE)
DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SearchRequest:
    graph: ColoredMultigraph
    shape: str = "tree"
    mode: str = COUNT
    limit: int | None = None
    budget: int = DEFAULT_BUDGET
    prune: bool = True

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be non-negative")


@dataclass
class SearchReport:
    shape: str
    mode: str
    count: int
    certificates: list[RainbowCollection] = field(default_factory=list)
    exhausted: bool = True
    nodes: int = 0
    budget_exhausted: bool = False

    @property
    def exists(self) -> bool:
        return self.count > 0

    def to_dict(self) -> dict:
        out = {
            "shape": self.shape,
            "mode": self.mode,
            "count": self.count,
            "exhausted": self.exhausted,
            "nodes": self.nodes,
        }
        if self.mode == EXISTS:
            out["exists"] = self.exists
        if self.budget_exhausted:
            out["budget_exhausted"] = True
        out["certificates"] = [c.to_lists() for c in self.certificates]
        return out


def _check_input(g: ColoredMultigraph) -> list[list[int]]:
    n = g.vertex_count
    if n < 2:
        raise HypothesisViolation("need at least 2 vertices")
    if g.color_count != n - 1:
        raise HypothesisViolation(f"expected {n - 1} colors, found {g.color_count}")
    if not g.is_connected():
        raise HypothesisViolation("graph is not connected")
    classes = [list(cls.edges) for cls in g.color_classes()]
    for c, ids in enumerate(classes):
        if len(ids) != n - 1:
            raise HypothesisViolation(f"color {c} has {len(ids)} edges, expected {n - 1}")
    return classes


class _Stop(Exception):
    pass


def search(req: SearchRequest) -> SearchReport:
    g = req.graph
    classes = _check_input(g)
    n = g.vertex_count
    m = n - 1
    shape, mode, prune = req.shape, req.mode, req.prune
    ends = [e.ends for e in g.edges]
    ends_mask = [(1 << a) | (1 << b) for a, b in ends]

    parts: list[list[int]] = [[classes[0][p]] for p in range(m)]
    labels = [list(range(n)) for _ in range(m)]
    common = [ends_mask[classes[0][p]] for p in range(m)]
    degree = [[0] * n for _ in range(m)]
    for p in range(m):
        a, b = ends[classes[0][p]]
        labels[p][b] = a
        degree[p][a] += 1
        degree[p][b] += 1

    report = SearchReport(shape, mode, 0)
    cap = req.limit if mode == ENUMERATE else (1 if mode == EXISTS else 0)
    budget = req.budget
    nodes = 0

    def leaf():
        if not prune:
            for part in parts:
                info = classify_edges(n, [ends[x] for x in part])
                if not info.is_tree or (shape == STAR and not info.is_star) or (shape == PATH and not info.is_path):
                    return
        report.count += 1
        if cap is None or len(report.certificates) < cap:
            report.certificates.append(RainbowCollection.from_edge_lists([list(p) for p in parts], shape))
        if mode == EXISTS:
            raise _Stop

    def place(color, p, used):
        nonlocal nodes
        if p == m:
            if color + 1 == m:
                leaf()
            else:
                place(color + 1, 0, 0)
            return
        lab, deg, part = labels[p], degree[p], parts[p]
        for idx, eid in enumerate(classes[color]):
            bit = 1 << idx
            if used & bit:
                continue
            nodes += 1
            if nodes > budget:
                raise InstanceTooLarge(budget)
            a, b = ends[eid]
            la, lb = lab[a], lab[b]
            if prune:
                if la == lb:
                    continue
                if shape == STAR and not common[p] & ends_mask[eid]:
                    continue
                if shape == PATH and (deg[a] >= 2 or deg[b] >= 2):
                    continue
            saved_labels = lab[:]
            saved_common = common[p]
            if la != lb:
                for v in range(n):
                    if lab[v] == lb:
                        lab[v] = la
            common[p] &= ends_mask[eid]
            deg[a] += 1
            deg[b] += 1
            part.append(eid)
            place(color, p + 1, used | bit)
            part.pop()
            deg[a] -= 1
            deg[b] -= 1
            common[p] = saved_common
            labels[p] = lab = saved_labels

    try:
        if m == 1:
            leaf()
        else:
            place(1, 0, 0)
    except _Stop:
        report.exhausted = False
    except InstanceTooLarge as exc:
        report.exhausted = False
        report.budget_exhausted = True
        report.nodes = nodes
        if mode != ENUMERATE:
            exc.partial = report
            raise
    report.nodes = nodes
    return report


def search_decompositions(
    graph: ColoredMultigraph,
    shape: str = "tree",
    mode: str = COUNT,
    limit: int | None = None,
    budget: int = DEFAULT_BUDGET,
    prune: bool = True,
) -> SearchReport:
    """Find, count or enumerate every decomposition of ``graph`` into n-1
    edge-disjoint rainbow spanning subgraphs of ``shape``.

    Collections are unordered: each is counted once.  ``limit`` caps the
    certificates kept in enumerate mode; the count is still exact.  When
    more than ``budget`` placements are tried, enumerate mode returns the
    partial report and the other modes raise InstanceTooLarge.
    """
    return search(SearchRequest(graph, shape, mode, limit, budget, prune))


def stars_to_stars_feasible(cfg: StarConfiguration) -> bool:
    """True iff the stars can be rearranged into rainbow stars.

    That happens exactly when no vertex hosts two stars unless one vertex
    hosts all of them.
    """
    s = cfg.stars_per_vertex()
    return max(s) <= 1 or max(s) == cfg.n - 1


def count_rainbow_star_decompositions_fast(cfg: StarConfiguration) -> int:
    s = cfg.stars_per_vertex()
    if max(s) <= 1:
        return 1
    if max(s) == cfg.n - 1:
        try:
            return count_omega(cfg.n)
        except OutOfSupportedRange as exc:
            raise CountUnavailable(cfg.n) from exc
    return 0
