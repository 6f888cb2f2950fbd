import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import decomposition_ok  # noqa: E402
from rainbowdecomp.fixtures import catalog  # noqa: E402
from rainbowdecomp.graph import decomposition_problems  # noqa: E402


@pytest.fixture(scope="session")
def cat():
    return catalog()


def assert_decomposition(g, coll, shape=None):
    shape = shape or coll.shape
    problems = decomposition_problems(g, coll, shape)
    assert not problems, problems
    assert decomposition_ok(g, coll.to_lists(), shape)
