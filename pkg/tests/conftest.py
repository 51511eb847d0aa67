import logging
import os
import random

import networkx as nx
import pytest
from _pytest import monkeypatch

from zeongraph import Enumerator
from zeongraph.graphs import builtin_graph
from zeongraph.graphs import Graph
from zeongraph.graphs import IntMatrix


@pytest.fixture(scope="session", autouse=True)
def _standard_os_environ():
    """Set up ``os.environ`` at the start of the test session without
    any ``ZEONGRAPH_`` variables. Returns a list of operations that is
    used by :func:`._reset_os_environ` after each test.
    """
    mp = monkeypatch.MonkeyPatch()
    out = [
        (os.environ, key, monkeypatch.notset)
        for key in os.environ
        if key.startswith("ZEONGRAPH_")
    ]

    for _, key, _ in out:
        mp.delenv(key, False)

    yield out
    mp.undo()


@pytest.fixture(autouse=True)
def _reset_os_environ(monkeypatch, _standard_os_environ):
    """Reset ``os.environ`` to the standard environ after each test,
    in case a test changed something without cleaning up.
    """
    monkeypatch._setitem.extend(_standard_os_environ)


@pytest.fixture(autouse=True)
def _reset_test_logger():
    """Debug mode sets the level of the global logger the test
    enumerator uses, don't let it leak into the next test.
    """
    yield
    logger = logging.getLogger("zeongraph_test")
    logger.handlers = []
    logger.setLevel(logging.NOTSET)


@pytest.fixture
def enumerator():
    return Enumerator("zeongraph_test", root_path=os.path.dirname(__file__))


@pytest.fixture
def runner(enumerator):
    return enumerator.test_cli_runner()


@pytest.fixture
def k3():
    return builtin_graph("k3")


@pytest.fixture
def k4():
    return builtin_graph("k4")


@pytest.fixture
def petersen():
    return builtin_graph("petersen")


@pytest.fixture(scope="session")
def atlas():
    """Factory for every graph on ``min_n`` to ``max_n`` vertices, up to
    isomorphism, from the networkx graph atlas.
    """
    graphs = nx.graph_atlas_g()

    def factory(min_n=0, max_n=7, connected=False):
        rv = []

        for g in graphs:
            n = g.number_of_nodes()

            if not min_n <= n <= max_n:
                continue

            if connected and (n == 0 or not nx.is_connected(g)):
                continue

            rv.append(Graph.from_networkx(g))

        return rv

    return factory


@pytest.fixture(scope="session")
def random_connected():
    """Factory for ``count`` connected ``G(n, p)`` graphs, the same for
    the same ``seed``.
    """

    def factory(n, count, seed, p=0.5):
        rng = random.Random(seed)
        rv = []

        while len(rv) < count:
            g = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))

            if nx.is_connected(g):
                rv.append(Graph.from_networkx(g))

        return rv

    return factory


@pytest.fixture
def random_matrix():
    """Factory for integer matrices with entries in ``low..high``."""

    def factory(rng, rows, cols=None, low=-3, high=3):
        if cols is None:
            cols = rows

        return IntMatrix(
            [[rng.randint(low, high) for _ in range(cols)] for _ in range(rows)],
            cols=cols,
        )

    return factory
