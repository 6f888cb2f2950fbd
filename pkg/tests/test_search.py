import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import assert_decomposition
from oracles import all_decompositions
from rainbowdecomp.claims import DEPICTED, SHARED_CENTER_TREE_COUNT, resolve
from rainbowdecomp.errors import CountUnavailable, HypothesisViolation, InstanceTooLarge
from rainbowdecomp.fixtures import NAMES
from rainbowdecomp.generate import center_maps, center_multiset_representatives, shuffled_edges, star_graph
from rainbowdecomp.graph import ColoredMultigraph, as_star_configuration
from rainbowdecomp.search import (
    SearchRequest,
    count_rainbow_star_decompositions_fast,
    search,
    search_decompositions,
    stars_to_stars_feasible,
)

SHAPES = ("star", "tree", "path")


def test_distinct_centers_unique(cat):
    assert search_decompositions(cat["different_centers_n4"].graph, "star", "count").count == 1


def test_same_center_two_collections(cat):
    assert search_decompositions(cat["same_center_n4"].graph, "star", "count").count == 2
    assert search_decompositions(cat["same_center_n5"].graph, "star", "count").count == 24


def test_shared_center_no_stars(cat):
    rep = search_decompositions(cat["shared_center_counterexample_n4"].graph, "star", "exists")
    assert not rep.exists and rep.exhausted


def test_shared_center_trees_pinned(cat):
    g = cat["shared_center_counterexample_n4"].graph
    rep = search_decompositions(g, "tree", "enumerate")
    assert rep.count == SHARED_CENTER_TREE_COUNT == 2
    assert resolve(g, DEPICTED["shared_center_counterexample_n4"], "tree") in rep.certificates
    # the two collections trade the red and blue edges at the shared center
    a, b = (set(map(frozenset, c.to_lists())) for c in rep.certificates)
    assert a != b


def test_paths_fixture(cat):
    g = cat["paths_counterexample_n4"].graph
    assert not search_decompositions(g, "path", "exists").exists
    # the tree question is left open in the source; the oracle's answer is 2
    assert search_decompositions(g, "tree", "count").count == len(all_decompositions(g, "tree")) == 2


def test_single_edge():
    g = ColoredMultigraph.from_triples(2, [(0, 1, 0)])
    rep = search_decompositions(g, "star", "enumerate")
    assert rep.count == 1 and rep.certificates[0].to_lists() == [[0]]


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("shape", SHAPES)
def test_fixture_counts_match_oracle(cat, name, shape):
    g = cat[name].graph
    oracle = all_decompositions(g, shape)
    rep = search_decompositions(g, shape, "enumerate")
    assert rep.exhausted
    assert sorted(c.key() for c in rep.certificates) == oracle
    for c in rep.certificates:
        assert_decomposition(g, c, shape)


@pytest.mark.parametrize("name", [x for x in NAMES if x.endswith("n4")])
@pytest.mark.parametrize("shape", SHAPES)
def test_pruning_does_not_change_results(cat, name, shape):
    g = cat[name].graph
    on = search_decompositions(g, shape, "enumerate")
    off = search_decompositions(g, shape, "enumerate", prune=False)
    assert on.certificates == off.certificates
    assert on.nodes <= off.nodes


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(list(center_maps(4))), st.sampled_from(SHAPES), st.integers(0, 10**6))
def test_random_star_graphs_match_oracle(cm, shape, seed):
    g = shuffled_edges(star_graph(4, cm), random.Random(seed))
    rep = search_decompositions(g, shape, "enumerate")
    assert sorted(c.key() for c in rep.certificates) == all_decompositions(g, shape)
    assert rep.count == search_decompositions(g, shape, "count", prune=False).count


def test_deterministic(cat):
    g = cat["different_centers_n5"].graph
    first = search_decompositions(g, "tree", "enumerate").to_dict()
    assert all(search_decompositions(g, "tree", "enumerate").to_dict() == first for _ in range(3))


def test_enumerate_limit_keeps_exact_count(cat):
    g = cat["same_center_n5"].graph
    rep = search_decompositions(g, "star", "enumerate", limit=5)
    assert rep.count == 24 and len(rep.certificates) == 5 and rep.exhausted
    full = search_decompositions(g, "star", "enumerate")
    assert rep.certificates == full.certificates[:5]


def test_exists_stops_early(cat):
    rep = search_decompositions(cat["same_center_n5"].graph, "star", "exists")
    assert rep.exists and rep.count == 1 and not rep.exhausted
    assert rep.to_dict()["exists"] is True


def test_budget(cat):
    g = cat["different_centers_n5"].graph
    with pytest.raises(InstanceTooLarge) as info:
        search_decompositions(g, "tree", "count", budget=50)
    assert info.value.partial.budget_exhausted
    rep = search_decompositions(g, "tree", "enumerate", budget=50)
    assert rep.budget_exhausted and not rep.exhausted
    assert rep.count <= 216


def test_preconditions():
    with pytest.raises(HypothesisViolation, match="not connected"):
        search_decompositions(ColoredMultigraph.from_triples(3, [(0, 1, 0), (0, 1, 1)]))
    with pytest.raises(HypothesisViolation, match="expected 2 colors"):
        search_decompositions(ColoredMultigraph.from_triples(3, [(0, 1, 0), (1, 2, 0)]))
    with pytest.raises(HypothesisViolation, match="has 3 edges"):
        search_decompositions(ColoredMultigraph.from_triples(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0), (0, 1, 1)]))
    with pytest.raises(ValueError):
        SearchRequest(star_graph(3, [0, 0]), shape="cycle")


def test_search_request_object(cat):
    rep = search(SearchRequest(cat["same_center_n4"].graph, "star", "count"))
    assert rep.count == 2


@pytest.mark.parametrize("n", [3, 4, 5])
def test_characterization_exhaustive(n):
    for cm in center_maps(n):
        cfg = as_star_configuration(star_graph(n, cm))
        count = search_decompositions(cfg.graph, "star", "count").count
        assert stars_to_stars_feasible(cfg) == (count > 0)
        assert count_rainbow_star_decompositions_fast(cfg) == count


def test_fast_count_examples(cat):
    fast = count_rainbow_star_decompositions_fast
    assert fast(as_star_configuration(cat["different_centers_n5"].graph)) == 1
    assert fast(as_star_configuration(cat["same_center_n5"].graph)) == 24
    assert fast(as_star_configuration(cat["shared_center_counterexample_n4"].graph)) == 0
    assert fast(as_star_configuration(star_graph(8, [0] * 7))) == 12198297600


def test_fast_count_unavailable():
    with pytest.raises(CountUnavailable):
        count_rainbow_star_decompositions_fast(as_star_configuration(star_graph(9, [0] * 8)))


def test_multiset_representatives_cover_partitions():
    # partitions of 4 into at most 5 parts: 5
    assert len(list(center_multiset_representatives(5))) == 5
