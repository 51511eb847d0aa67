import pytest

import zeongraph
from zeongraph.errors import SizeLimitError
from zeongraph.operators import kirchhoff_cofactor


def test_count_signals(enumerator, k4):
    recorded = []

    def started(sender, graph, quantity, method):
        recorded.append(("started", graph, quantity, method))

    def finished(sender, result):
        recorded.append(("finished", result))

    zeongraph.count_started.connect(started, enumerator)
    zeongraph.count_finished.connect(finished, enumerator)
    try:
        result = enumerator.count(k4, "spanning-trees", "kirchhoff-cofactor")
        assert recorded == [
            ("started", k4, "spanning-trees", "kirchhoff-cofactor"),
            ("finished", result),
        ]
        assert result.value == 16
    finally:
        zeongraph.count_started.disconnect(started, enumerator)
        zeongraph.count_finished.disconnect(finished, enumerator)


def test_no_finished_signal_on_error(enumerator):
    recorded = []

    def finished(sender, result):
        recorded.append(result)

    enumerator.config["MAX_LATTICE_N"] = 3
    zeongraph.count_finished.connect(finished, enumerator)
    try:
        with pytest.raises(SizeLimitError):
            enumerator.count(zeongraph.builtin_graph("k4"), "hamiltonian", "liu")

        assert recorded == []
    finally:
        zeongraph.count_finished.disconnect(finished, enumerator)


def test_signals_are_per_sender(enumerator, k3):
    other = zeongraph.Enumerator("other")
    recorded = []

    def finished(sender, result):
        recorded.append(sender)

    zeongraph.count_finished.connect(finished, other)
    try:
        enumerator.count(k3, "hamiltonian", "oracle")
        assert recorded == []
        other.count(k3, "hamiltonian", "oracle")
        assert recorded == [other]
    finally:
        zeongraph.count_finished.disconnect(finished, other)


def test_verification_failed(enumerator, k4):
    @enumerator.method("spanning-trees", "off-by-one")
    def off_by_one(graph, **kwargs):
        return kirchhoff_cofactor(graph) + 1

    recorded = []

    def failed(sender, graph, mismatches):
        recorded.append((graph, mismatches))

    zeongraph.verification_failed.connect(failed, enumerator)
    try:
        report = enumerator.verify(k4)
        assert not report.passed
        assert len(recorded) == 1
        graph, mismatches = recorded[0]
        assert graph is k4
        assert [(m.method, m.value, m.oracle_value) for m in mismatches] == [
            ("off-by-one", 17, 16)
        ]
    finally:
        zeongraph.verification_failed.disconnect(failed, enumerator)


def test_verification_passed_sends_nothing(enumerator, k4):
    recorded = []

    def failed(sender, graph, mismatches):
        recorded.append(graph)

    zeongraph.verification_failed.connect(failed, enumerator)
    try:
        assert enumerator.verify(k4).passed
        assert recorded == []
    finally:
        zeongraph.verification_failed.disconnect(failed, enumerator)
