import json
import os
import tomllib

import pytest

import zeongraph
from zeongraph.config import import_string
from zeongraph.lattice import LatticeOptions

# config keys used for the TestConfig
TEST_KEY = "foo"
WORKERS = 2
DEFAULT_ANCHOR = 1

static_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), "static")


def common_object_test(enumerator):
    assert enumerator.config["TEST_KEY"] == "foo"
    assert enumerator.config["WORKERS"] == 2
    assert enumerator.config["DEFAULT_ANCHOR"] == 1
    assert "TestConfig" not in enumerator.config


def test_defaults():
    enumerator = zeongraph.Enumerator(__name__)
    assert enumerator.config["DEBUG"] is False
    assert enumerator.config["MAX_LATTICE_N"] == 24
    assert enumerator.config["WORKERS"] == 1
    assert not enumerator.debug
    enumerator.debug = True
    assert enumerator.config["DEBUG"] is True


def test_config_from_object():
    enumerator = zeongraph.Enumerator(__name__)
    enumerator.config.from_object(__name__)
    common_object_test(enumerator)


def test_config_from_file_json():
    enumerator = zeongraph.Enumerator(__name__)
    enumerator.config.from_file(os.path.join(static_path, "config.json"), json.load)
    common_object_test(enumerator)


def test_config_from_file_toml():
    enumerator = zeongraph.Enumerator(__name__)
    enumerator.config.from_file(
        os.path.join(static_path, "config.toml"), tomllib.load, text=False
    )
    common_object_test(enumerator)


@pytest.mark.parametrize("filename", ["config.json", "config.toml"])
def test_config_from_config_file(filename):
    enumerator = zeongraph.Enumerator(__name__, root_path=static_path)
    assert enumerator.config.from_config_file(filename)
    common_object_test(enumerator)


def test_from_prefixed_env(monkeypatch):
    monkeypatch.setenv("ZEONGRAPH_STRING", "value")
    monkeypatch.setenv("ZEONGRAPH_BOOL", "true")
    monkeypatch.setenv("ZEONGRAPH_INT", "1")
    monkeypatch.setenv("ZEONGRAPH_FLOAT", "1.2")
    monkeypatch.setenv("ZEONGRAPH_LIST", "[1, 2]")
    monkeypatch.setenv("ZEONGRAPH_DICT", '{"k": "v"}')
    monkeypatch.setenv("NOT_ZEONGRAPH_OTHER", "other")

    enumerator = zeongraph.Enumerator(__name__)
    enumerator.config.from_prefixed_env()

    assert enumerator.config["STRING"] == "value"
    assert enumerator.config["BOOL"] is True
    assert enumerator.config["INT"] == 1
    assert enumerator.config["FLOAT"] == 1.2
    assert enumerator.config["LIST"] == [1, 2]
    assert enumerator.config["DICT"] == {"k": "v"}
    assert "OTHER" not in enumerator.config


def test_from_prefixed_env_custom_prefix(monkeypatch):
    monkeypatch.setenv("ZEONGRAPH_A", "a")
    monkeypatch.setenv("NOT_ZEONGRAPH_A", "b")

    enumerator = zeongraph.Enumerator(__name__)
    enumerator.config.from_prefixed_env("NOT_ZEONGRAPH")

    assert enumerator.config["A"] == "b"


def test_from_prefixed_env_nested(monkeypatch):
    monkeypatch.setenv("ZEONGRAPH_EXIST__ok", "other")
    monkeypatch.setenv("ZEONGRAPH_EXIST__inner__ik", "2")
    monkeypatch.setenv("ZEONGRAPH_EXIST__new__more", '{"k": false}')
    monkeypatch.setenv("ZEONGRAPH_NEW__K", "v")

    enumerator = zeongraph.Enumerator(__name__)
    enumerator.config["EXIST"] = {"ok": "value", "flag": True, "inner": {"ik": 1}}
    enumerator.config.from_prefixed_env()

    if os.name != "nt":
        assert enumerator.config["EXIST"] == {
            "ok": "other",
            "flag": True,
            "inner": {"ik": 2},
            "new": {"more": {"k": False}},
        }
    else:
        # Windows env var keys are always uppercase.
        assert enumerator.config["EXIST"] == {
            "ok": "value",
            "OK": "other",
            "flag": True,
            "inner": {"ik": 1},
            "INNER": {"IK": 2},
            "NEW": {"MORE": {"k": False}},
        }

    assert enumerator.config["NEW"] == {"K": "v"}


def test_config_from_mapping():
    enumerator = zeongraph.Enumerator(__name__)
    enumerator.config.from_mapping(
        {"WORKERS": 2, "DEFAULT_ANCHOR": 1, "TEST_KEY": "foo"}
    )
    common_object_test(enumerator)

    enumerator = zeongraph.Enumerator(__name__)
    enumerator.config.from_mapping(
        [("WORKERS", 2), ("DEFAULT_ANCHOR", 1), ("TEST_KEY", "foo")]
    )
    common_object_test(enumerator)

    enumerator = zeongraph.Enumerator(__name__)
    enumerator.config.from_mapping(
        WORKERS=2, DEFAULT_ANCHOR=1, TEST_KEY="foo", skip_key="skip"
    )
    common_object_test(enumerator)
    assert "skip_key" not in enumerator.config

    enumerator = zeongraph.Enumerator(__name__)
    with pytest.raises(TypeError):
        enumerator.config.from_mapping({}, {})


def test_config_from_class():
    class Base:
        TEST_KEY = "foo"

    class Test(Base):
        WORKERS = 2
        DEFAULT_ANCHOR = 1

    enumerator = zeongraph.Enumerator(__name__)
    enumerator.config.from_object(Test)
    common_object_test(enumerator)


def test_config_from_envvar(monkeypatch):
    monkeypatch.setattr("os.environ", {})
    enumerator = zeongraph.Enumerator(__name__)

    with pytest.raises(RuntimeError) as e:
        enumerator.config.from_envvar("FOO_SETTINGS")

    assert "'FOO_SETTINGS' is not set" in str(e.value)
    assert not enumerator.config.from_envvar("FOO_SETTINGS", silent=True)

    monkeypatch.setattr(
        "os.environ", {"FOO_SETTINGS": os.path.join(static_path, "config.toml")}
    )
    assert enumerator.config.from_envvar("FOO_SETTINGS")
    common_object_test(enumerator)


def test_config_from_envvar_missing(monkeypatch):
    monkeypatch.setattr("os.environ", {"FOO_SETTINGS": "missing.json"})
    enumerator = zeongraph.Enumerator(__name__)
    with pytest.raises(IOError) as e:
        enumerator.config.from_envvar("FOO_SETTINGS")
    msg = str(e.value)
    assert msg.startswith(
        "[Errno 2] Unable to load configuration file (No such file or directory):"
    )
    assert msg.endswith("missing.json'")
    assert not enumerator.config.from_envvar("FOO_SETTINGS", silent=True)


def test_config_missing_file():
    enumerator = zeongraph.Enumerator(__name__)
    with pytest.raises(IOError) as e:
        enumerator.config.from_file("missing.json", load=json.load)
    msg = str(e.value)
    assert msg.startswith(
        "[Errno 2] Unable to load configuration file (No such file or directory):"
    )
    assert msg.endswith("missing.json'")
    assert not enumerator.config.from_file("missing.json", load=json.load, silent=True)


def test_custom_config_class():
    class Config(zeongraph.Config):
        pass

    class Enumerator(zeongraph.Enumerator):
        config_class = Config

    enumerator = Enumerator(__name__)
    assert isinstance(enumerator.config, Config)
    enumerator.config.from_object(__name__)
    common_object_test(enumerator)


def test_lattice_options():
    enumerator = zeongraph.Enumerator(__name__)
    assert enumerator.config.lattice_options() == LatticeOptions()
    enumerator.config.from_mapping(
        WORKERS="3", LATTICE_CHUNKS=4, ALLOW_LARGE=1, MAX_LATTICE_N=12
    )
    assert enumerator.config.lattice_options() == LatticeOptions(
        workers=3, chunks=4, allow_large=True, max_n=12
    )


def test_import_string():
    assert import_string("zeongraph.lattice:LatticeOptions") is LatticeOptions
    assert import_string("zeongraph.lattice.LatticeOptions") is LatticeOptions
    assert import_string("zeongraph.lattice") is zeongraph.lattice

    with pytest.raises(ImportError):
        import_string("zeongraph.missing")


def test_repr():
    enumerator = zeongraph.Enumerator(__name__)
    assert repr(enumerator.config).startswith("<Config {")
