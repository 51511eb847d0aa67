import dataclasses
import io
from fractions import Fraction

import pytest

from zeongraph import json
from zeongraph.algebra import MultiIndex
from zeongraph.app import CountResult
from zeongraph.json.provider import DefaultJSONProvider
from zeongraph.lattice import LatticeOptions


@pytest.mark.parametrize(
    ("value", "expected"),
    [
        (Fraction(3, 16), '"3/16"'),
        (Fraction(4, 2), '"2"'),
        (MultiIndex.from_indices([2, 0], 3), '"{0,2}"'),
        (MultiIndex.empty(2), '"{}"'),
    ],
)
def test_extra_types(enumerator, value, expected):
    assert enumerator.json.dumps(value) == expected
    assert json.dumps(value) == expected


def test_dataclass(enumerator):
    value = LatticeOptions(workers=2)
    assert enumerator.json.loads(enumerator.json.dumps(value)) == dataclasses.asdict(
        value
    )


def test_to_report_wins_over_dataclass(enumerator):
    result = CountResult("hamiltonian", "liu", 10**40, 30, 60, 1.23456)
    data = enumerator.json.loads(enumerator.json.dumps(result))
    assert data == {
        "graph": {"n": 30, "m": 60},
        "quantity": "hamiltonian",
        "method": "liu",
        "value": "1" + "0" * 40,
        "elapsed_ms": 1.235,
    }


def test_unknown_type(enumerator):
    with pytest.raises(TypeError, match="not JSON serializable"):
        enumerator.json.dumps(object())


def test_sort_keys(enumerator):
    assert enumerator.json.dumps({"b": 1, "a": 2}) == '{"a": 2, "b": 1}'


def test_dump_to_file(enumerator):
    test_data = {"name": "Petersen", "spanning-trees": 2000}
    out = io.StringIO()
    enumerator.json.dump(test_data, out)
    out.seek(0)
    assert enumerator.json.load(out) == test_data

    out = io.StringIO()
    json.dump(test_data, out)
    out.seek(0)
    assert json.load(out) == test_data


def test_loads_bytes(enumerator):
    assert enumerator.json.loads(b'{"value": "3"}') == {"value": "3"}


@pytest.mark.parametrize(
    ("debug", "config", "indented"),
    [
        (False, None, False),
        (True, None, True),
        (False, False, True),
        (True, True, False),
    ],
)
def test_report_layout(enumerator, debug, config, indented):
    enumerator.debug = debug
    enumerator.config["JSON_COMPACT"] = config
    output = enumerator.json.report({"a": [1, 2]})
    assert output.endswith("\n")

    if indented:
        assert output == '{\n  "a": [\n    1,\n    2\n  ]\n}\n'
    else:
        assert output == '{"a":[1,2]}\n'


def test_provider_compact_attribute(enumerator):
    class Provider(DefaultJSONProvider):
        compact = False

    enumerator.json = Provider(enumerator)
    assert enumerator.json.report({"a": 1}) == '{\n  "a": 1\n}\n'


def test_custom_provider(enumerator):
    class Provider(DefaultJSONProvider):
        sort_keys = False

        def default(self, o):
            if isinstance(o, complex):
                return [o.real, o.imag]

            return super().default(o)

    enumerator.json = Provider(enumerator)
    assert enumerator.json.dumps({"z": 1j, "a": Fraction(1, 2)}) == (
        '{"z": [0.0, 1.0], "a": "1/2"}'
    )
