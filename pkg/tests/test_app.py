import pytest

import zeongraph
from zeongraph.app import MethodInfo
from zeongraph.errors import UnknownMethodError
from zeongraph.methods import BUILTIN_METHODS
from zeongraph.testing import ZeonGraphCliRunner


def test_builtin_methods(enumerator):
    quantities = {"spanning-trees", "hamiltonian", "cycle-matching"}
    assert set(enumerator.methods) == quantities
    assert sum(len(r) for r in enumerator.methods.values()) == len(BUILTIN_METHODS)

    for quantity in enumerator.methods:
        oracle = enumerator.oracle_for(quantity)
        assert oracle is not None
        assert oracle.name == "oracle"


def test_without_builtin_methods():
    enumerator = zeongraph.Enumerator("bare", add_builtin_methods=False)
    assert enumerator.methods == {}
    assert enumerator.oracle_for("hamiltonian") is None


def test_method_decorator(enumerator, k4):
    @enumerator.method("hamiltonian", "constant")
    def constant(graph, *, level, anchor, options):
        """Always three.

        Not a real method.
        """
        return 3

    info = enumerator.get_method("hamiltonian", "constant")
    expected = MethodInfo("hamiltonian", "constant", constant, False, "Always three.")
    assert info == expected
    assert enumerator.count(k4, "hamiltonian", "constant").value == 3


def test_new_quantity(enumerator, k4):
    @enumerator.method("edges", "oracle", oracle=True)
    def edge_oracle(graph, **kwargs):
        return graph.m

    @enumerator.method("edges", "degree-sum", doc="Half the degree sum.")
    def degree_sum(graph, **kwargs):
        return sum(graph.degree(v) for v in range(graph.n)) // 2

    assert enumerator.get_method("edges", "degree-sum").doc == "Half the degree sum."
    report = enumerator.verify(k4)
    assert report.passed
    values = {(r.quantity, r.method): r.value for r in report.results}
    assert values["edges", "oracle"] == values["edges", "degree-sum"] == 6


def test_duplicate_method(enumerator):
    with pytest.raises(AssertionError, match="already registered"):
        enumerator.add_method("hamiltonian", "liu", lambda graph, **kwargs: 0)


def test_second_oracle(enumerator):
    with pytest.raises(AssertionError, match="already has an oracle"):
        enumerator.add_method(
            "hamiltonian", "other-oracle", lambda graph, **kwargs: 0, oracle=True
        )


def test_unknown(enumerator):
    with pytest.raises(UnknownMethodError, match="hamiltonian"):
        enumerator.get_method("cycles", "liu")

    with pytest.raises(UnknownMethodError, match="fz-trace"):
        enumerator.get_method("hamiltonian", "ryser")


def test_count_result(enumerator, petersen):
    result = enumerator.count(petersen, "spanning-trees", "fermion-trace")
    assert result.value == 2000
    assert (result.quantity, result.method) == ("spanning-trees", "fermion-trace")
    assert (result.n, result.m) == (10, 15)
    assert result.elapsed_ms >= 0


def test_default_anchor(enumerator):
    calls = []

    @enumerator.method("hamiltonian", "spy")
    def spy(graph, *, level, anchor, options):
        calls.append((level, anchor, options))
        return 0

    graph = zeongraph.builtin_graph("k4")
    enumerator.config["DEFAULT_ANCHOR"] = 2
    enumerator.config["WORKERS"] = 3
    enumerator.count(graph, "hamiltonian", "spy")
    enumerator.count(graph, "hamiltonian", "spy", level=1, anchor=0)
    assert [c[:2] for c in calls] == [(None, 2), (1, 0)]
    assert calls[0][2].workers == 3


def test_cycle_matching_levels(enumerator, k4):
    for level in range(5):
        trace = enumerator.count(k4, "cycle-matching", "zeon-trace", level=level)
        oracle = enumerator.count(k4, "cycle-matching", "oracle", level=level)
        assert trace.value == oracle.value

    assert enumerator.count(k4, "cycle-matching", "oracle").value == 9


@pytest.mark.parametrize("n", [0, 1, 2])
def test_hamiltonian_methods_on_tiny_graphs(enumerator, n):
    graph = zeongraph.Graph(n, [(0, 1)] if n == 2 else [])

    for name in enumerator.methods["hamiltonian"]:
        assert enumerator.count(graph, "hamiltonian", name).value == 0


def test_verify_order(enumerator, k3):
    report = enumerator.verify(k3)
    assert report.passed
    assert (report.n, report.m) == (3, 3)
    hamiltonian = [r.method for r in report.results if r.quantity == "hamiltonian"]
    assert hamiltonian[0] == "oracle"
    assert sorted(hamiltonian[1:]) == [
        "fz-integral",
        "fz-trace",
        "goulden-jackson",
        "liu",
        "nilpotent",
    ]


def test_repr(enumerator):
    assert repr(enumerator) == "<Enumerator 'zeongraph_test'>"


def test_test_cli_runner(enumerator):
    runner = enumerator.test_cli_runner()
    assert isinstance(runner, ZeonGraphCliRunner)
    assert runner.enumerator is enumerator
