import json
import pathlib

import pytest

from compcs.search import build_graph, maximal_cliques

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def graph2():
    return build_graph(2, "both")


@pytest.fixture(scope="session")
def graph3():
    return build_graph(3, "both")


@pytest.fixture(scope="session")
def cliques3(graph3):
    return maximal_cliques(graph3)


@pytest.fixture(scope="session")
def counts():
    return json.loads((FIXTURES / "counts.json").read_text())
