"""Bundled example graphs, one JSON document per figure-derived instance."""

from __future__ import annotations

from importlib import resources

from ..io import GraphDocument, parse_graph

NAMES = (
    "different_centers_n4",
    "different_centers_n5",
    "same_center_n4",
    "same_center_n5",
    "shared_center_counterexample_n4",
    "identical_trees_n4",
    "two_centers_n5",
    "paths_counterexample_n4",
)


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}")
    return resources.files(__name__).joinpath(f"{name}.json").read_text()


def load_fixture(name: str) -> GraphDocument:
    return parse_graph(fixture_text(name))


def catalog() -> dict[str, GraphDocument]:
    return {name: load_fixture(name) for name in NAMES}
