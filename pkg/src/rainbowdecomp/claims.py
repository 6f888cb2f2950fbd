"""Replayable checks for every worked example, count and counterexample.

``run_claims`` evaluates each claim against a fixture catalog and returns
(claim id, description, passed) rows; an exception inside a claim counts as
a failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .constructors import (
    construct_different_centers,
    construct_identical_trees,
    construct_same_center,
    construct_two_centers,
    two_center_config,
)
from .graph import (
    ColoredMultigraph,
    RainbowCollection,
    as_star_configuration,
    is_valid_decomposition,
    validate_graph,
    vertex_degree_profile,
)
from .latin import count_latin_squares, count_latin_via_permanent, count_omega, rainbow_matrix_of
from .search import count_rainbow_star_decompositions_fast, search_decompositions, stars_to_stars_feasible

R, B, G, Y = 0, 1, 2, 3

OMEGA_TABLE = {1: 1, 2: 1, 3: 1, 4: 2, 5: 24, 6: 1344, 7: 1128960, 8: 12198297600}

# Drawn collections as (color, u, v) per part, in the bundled fixtures' vertex labels.
DEPICTED = {
    "different_centers_n4": [
        [(R, 0, 3), (B, 1, 0), (G, 2, 0)],
        [(B, 1, 3), (R, 0, 1), (G, 2, 1)],
        [(G, 2, 3), (R, 0, 2), (B, 1, 2)],
    ],
    "same_center_n4": [
        [(R, 0, 1), (B, 0, 2), (G, 0, 3)],
        [(G, 0, 1), (R, 0, 2), (B, 0, 3)],
        [(B, 0, 1), (G, 0, 2), (R, 0, 3)],
    ],
    "identical_trees_n4/left": [
        [(R, 0, 2), (B, 0, 3), (G, 1, 3)],
        [(G, 0, 2), (R, 0, 3), (B, 1, 3)],
        [(B, 0, 2), (G, 0, 3), (R, 1, 3)],
    ],
    "identical_trees_n4/right": [
        [(R, 0, 2), (G, 0, 3), (B, 1, 3)],
        [(B, 0, 2), (R, 0, 3), (G, 1, 3)],
        [(G, 0, 2), (B, 0, 3), (R, 1, 3)],
    ],
    "shared_center_counterexample_n4": [
        [(R, 0, 2), (B, 0, 1), (G, 1, 3)],
        [(R, 0, 3), (B, 0, 2), (G, 1, 0)],
        [(R, 0, 1), (B, 0, 3), (G, 1, 2)],
    ],
    "two_centers_n5": [
        [(R, 0, 1), (B, 0, 2), (G, 1, 3), (Y, 1, 4)],
        [(B, 0, 1), (R, 0, 4), (G, 1, 2), (Y, 1, 3)],
        [(G, 0, 1), (Y, 1, 2), (R, 0, 3), (B, 0, 4)],
        [(Y, 0, 1), (R, 0, 2), (B, 0, 3), (G, 1, 4)],
    ],
}

SQUARE_LEFT = ((R, B, G), (G, R, B), (B, G, R))
SQUARE_RIGHT = ((R, G, B), (B, R, G), (G, B, R))

# raw labeled count of rainbow tree decompositions of the shared-center graph;
# the two collections differ by exchanging the roles of red and blue
SHARED_CENTER_TREE_COUNT = 2


def resolve(g: ColoredMultigraph, parts, shape: str) -> RainbowCollection:
    return RainbowCollection.from_edge_lists([[g.find_edge(c, u, v) for c, u, v in part] for part in parts], shape)


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    check: Callable[[dict], bool]


def _graph(cat, name):
    return cat[name].graph


def _star_cfg(cat, name):
    return as_star_configuration(_graph(cat, name))


def _unique_star_matches_construction(cat, name):
    g = _graph(cat, name)
    rep = search_decompositions(g, "star", "enumerate")
    built = construct_different_centers(as_star_configuration(g))
    return rep.count == 1 and rep.certificates[0] == built and is_valid_decomposition(g, built)


def _claims() -> list[Claim]:
    claims = [
        Claim(
            "distinct-centers/validate",
            "three-star n=4 graph: connected, 3 colors, stars with distinct centers",
            lambda cat: (
                (r := validate_graph(_graph(cat, "different_centers_n4"))).connected
                and r.colors_match
                and r.all_stars
                and len({c.centers[0] for c in r.classes}) == 3
            ),
        ),
        Claim(
            "distinct-centers/construct",
            "distinct centers n=4: construction gives the 3 depicted rainbow stars",
            lambda cat: construct_different_centers(_star_cfg(cat, "different_centers_n4"))
            == resolve(_graph(cat, "different_centers_n4"), DEPICTED["different_centers_n4"], "star"),
        ),
        Claim(
            "distinct-centers/n5",
            "distinct centers n=5: 4 rainbow stars, equal to the search result",
            lambda cat: _unique_star_matches_construction(cat, "different_centers_n5"),
        ),
        Claim(
            "distinct-centers/unique",
            "distinct centers n=4: exactly one collection of rainbow stars",
            lambda cat: _unique_star_matches_construction(cat, "different_centers_n4"),
        ),
        Claim(
            "same-center/centers",
            "same-center n=4: all three centers coincide",
            lambda cat: len(set(_star_cfg(cat, "same_center_n4").centers)) == 1,
        ),
        Claim(
            "same-center/rotation",
            "same-center n=4: rotation construction gives the depicted collection",
            lambda cat: construct_same_center(_star_cfg(cat, "same_center_n4"))
            == resolve(_graph(cat, "same_center_n4"), DEPICTED["same_center_n4"], "star"),
        ),
        Claim(
            "same-center/matrix",
            "same-center n=4: rainbow star matrix is [[R,B,G],[G,R,B],[B,G,R]]",
            lambda cat: rainbow_matrix_of(
                _graph(cat, "same_center_n4"), construct_same_center(_star_cfg(cat, "same_center_n4"))
            ).cells
            == SQUARE_LEFT,
        ),
        Claim(
            "same-center/count-n4",
            "same-center n=4: exactly 2 unordered collections of rainbow stars",
            lambda cat: search_decompositions(_graph(cat, "same_center_n4"), "star", "count").count == 2,
        ),
        Claim(
            "same-center/count-n5",
            "same-center n=5: 24 collections by search",
            lambda cat: search_decompositions(_graph(cat, "same_center_n5"), "star", "count").count == 24,
        ),
        Claim(
            "same-center/degrees",
            "same-center n=4: center s=3, D=9; leaves s=0, D=3",
            lambda cat: vertex_degree_profile(_star_cfg(cat, "same_center_n4"))
            == {0: (3, 9), 1: (0, 3), 2: (0, 3), 3: (0, 3)},
        ),
        Claim(
            "latin/omega-table",
            "Omega(n) for n=1..8 is 1, 1, 1, 2, 24, 1344, 1128960, 12198297600",
            lambda cat: all(count_omega(n) == v for n, v in OMEGA_TABLE.items()),
        ),
        Claim(
            "latin/counts",
            "L_3 = 12 and L_5 = 161280",
            lambda cat: count_latin_squares(3) == 12 and count_latin_squares(5) == 161280,
        ),
        Claim(
            "latin/permanent-formula",
            "permanent formula matches reduced-square counts for sides 1..4",
            lambda cat: all(count_latin_via_permanent(m) == count_latin_squares(m) for m in range(1, 5)),
        ),
        Claim(
            "identical-trees/left",
            "identical trees n=4: left matrix gives the top depicted collection",
            lambda cat: construct_identical_trees(_graph(cat, "identical_trees_n4"), SQUARE_LEFT)
            == resolve(_graph(cat, "identical_trees_n4"), DEPICTED["identical_trees_n4/left"], "tree"),
        ),
        Claim(
            "identical-trees/right",
            "identical trees n=4: right matrix gives the bottom depicted collection",
            lambda cat: construct_identical_trees(_graph(cat, "identical_trees_n4"), SQUARE_RIGHT)
            == resolve(_graph(cat, "identical_trees_n4"), DEPICTED["identical_trees_n4/right"], "tree"),
        ),
        Claim(
            "shared-center/validate",
            "shared-center graph: all classes stars, centers {v, v, w}",
            lambda cat: (r := validate_graph(_graph(cat, "shared_center_counterexample_n4"))).all_stars
            and sorted(_star_cfg(cat, "shared_center_counterexample_n4").stars_per_vertex()) == [0, 0, 1, 2],
        ),
        Claim(
            "shared-center/no-stars",
            "shared-center graph: no decomposition into rainbow stars",
            lambda cat: not search_decompositions(_graph(cat, "shared_center_counterexample_n4"), "star", "exists").exists,
        ),
        Claim(
            "shared-center/trees",
            f"shared-center graph: {SHARED_CENTER_TREE_COUNT} labeled tree decompositions incl. the depicted one",
            lambda cat: (
                (rep := search_decompositions(_graph(cat, "shared_center_counterexample_n4"), "tree", "enumerate")).count
                == SHARED_CENTER_TREE_COUNT
                and resolve(
                    _graph(cat, "shared_center_counterexample_n4"), DEPICTED["shared_center_counterexample_n4"], "tree"
                )
                in rep.certificates
            ),
        ),
        Claim(
            "two-centers/construct",
            "two centers n=5: construction gives the 4 depicted rainbow trees",
            lambda cat: construct_two_centers(two_center_config(_star_cfg(cat, "two_centers_n5")))
            == resolve(_graph(cat, "two_centers_n5"), DEPICTED["two_centers_n5"], "tree"),
        ),
        Claim(
            "characterization/feasible",
            "stars-to-stars: distinct centers yes, same center yes, shared center no",
            lambda cat: stars_to_stars_feasible(_star_cfg(cat, "different_centers_n4"))
            and stars_to_stars_feasible(_star_cfg(cat, "same_center_n4"))
            and not stars_to_stars_feasible(_star_cfg(cat, "shared_center_counterexample_n4")),
        ),
        Claim(
            "characterization/fast-count",
            "closed-form star counts: distinct n=5 -> 1, same n=5 -> 24, shared -> 0",
            lambda cat: count_rainbow_star_decompositions_fast(_star_cfg(cat, "different_centers_n5")) == 1
            and count_rainbow_star_decompositions_fast(_star_cfg(cat, "same_center_n5")) == 24
            and count_rainbow_star_decompositions_fast(_star_cfg(cat, "shared_center_counterexample_n4")) == 0,
        ),
        Claim(
            "paths/validate",
            "paths graph: every class a spanning path",
            lambda cat: validate_graph(_graph(cat, "paths_counterexample_n4")).all_paths,
        ),
        Claim(
            "paths/no-paths",
            "paths graph: no decomposition into rainbow paths",
            lambda cat: search_decompositions(_graph(cat, "paths_counterexample_n4"), "path", "count").count == 0,
        ),
    ]
    return claims


CLAIMS = _claims()


def run_claims(cat: dict) -> list[tuple[str, str, bool]]:
    rows = []
    for claim in CLAIMS:
        try:
            ok = bool(claim.check(cat))
        except Exception:
            ok = False
        rows.append((claim.id, claim.description, ok))
    return rows
