from __future__ import annotations

import logging
import os
import time
import typing as t
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property
from types import MappingProxyType

from . import signals
from .config import Config
from .config import ConfigAttribute
from .errors import ConsistencyError
from .errors import SizeLimitError
from .errors import UnknownMethodError
from .graphs import Graph
from .json.provider import DefaultJSONProvider
from .json.provider import JSONProvider
from .lattice import DEFAULT_MAX_N
from .logging import create_logger
from .methods import register_builtin_methods
from .oracles import CYCLE_MATCHING_COVERS
from .oracles import SPANNING_TREES

if t.TYPE_CHECKING:  # pragma: no cover
    from .testing import ZeonGraphCliRunner
    from .typing import CountMethod

F = t.TypeVar("F", bound="CountMethod")


@dataclass(frozen=True)
class MethodInfo:
    """A counting method registered on an :class:`Enumerator`."""

    quantity: str
    name: str
    func: CountMethod
    oracle: bool = False
    doc: str = ""


@dataclass
class CountResult:
    """The outcome of :meth:`Enumerator.count`."""

    quantity: str
    method: str
    value: int
    n: int
    m: int
    elapsed_ms: float

    def to_report(self) -> dict[str, t.Any]:
        """The report written by the command line. The count is a
        decimal string so it survives JSON readers that use floats.
        """
        return {
            "graph": {"n": self.n, "m": self.m},
            "quantity": self.quantity,
            "method": self.method,
            "value": str(self.value),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass(frozen=True)
class Mismatch:
    """A method that disagreed with the oracle of its quantity."""

    quantity: str
    method: str
    value: int
    oracle_value: int

    def to_report(self) -> dict[str, t.Any]:
        return {
            "quantity": self.quantity,
            "method": self.method,
            "value": str(self.value),
            "oracle": str(self.oracle_value),
        }


@dataclass
class VerificationReport:
    """The outcome of :meth:`Enumerator.verify`. ``results`` holds the
    oracle result of each quantity followed by its other methods.
    """

    n: int
    m: int
    results: list[CountResult] = field(default_factory=list)
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_report(self) -> dict[str, t.Any]:
        return {
            "graph": {"n": self.n, "m": self.m},
            "passed": self.passed,
            "results": [r.to_report() for r in self.results],
            "mismatches": [m.to_report() for m in self.mismatches],
        }


class Enumerator:
    """The central object. It holds the configuration, the logger and
    the registry of counting methods, and runs counts and verifications
    on graphs::

        from zeongraph import Enumerator, builtin_graph

        enumerator = Enumerator()
        enumerator.count(builtin_graph("k4"), "hamiltonian", "fz-trace").value

    Methods are registered per quantity with :meth:`method`. The
    built-in methods are registered when the enumerator is created.

    :param name: The name of the enumerator, also the logger name.
    :param root_path: Relative config file names are resolved from
        here. Defaults to the current working directory.
    :param add_builtin_methods: Register the built-in methods.
    """

    #: The class used for :attr:`config`.
    config_class = Config

    #: The class used for :attr:`json`.
    json_provider_class: type[JSONProvider] = DefaultJSONProvider

    #: The :class:`~click.testing.CliRunner` subclass used by
    #: :meth:`test_cli_runner`. Defaults to
    #: :class:`~zeongraph.testing.ZeonGraphCliRunner`.
    test_cli_runner_class: type[ZeonGraphCliRunner] | None = None

    #: Default configuration values.
    default_config = MappingProxyType(
        {
            "DEBUG": False,
            "MAX_LATTICE_N": DEFAULT_MAX_N,
            "ALLOW_LARGE": False,
            "WORKERS": 1,
            "LATTICE_CHUNKS": 16,
            "DEFAULT_ANCHOR": 0,
            "JSON_COMPACT": None,
        }
    )

    #: Whether debug mode is enabled. Debug mode logs every count and
    #: indents JSON reports. This is an alias for the ``DEBUG`` key.
    debug = ConfigAttribute[bool]("DEBUG")

    def __init__(
        self,
        name: str = "zeongraph",
        root_path: str | os.PathLike[str] | None = None,
        add_builtin_methods: bool = True,
    ) -> None:
        self.name = name

        if root_path is None:
            root_path = os.getcwd()

        self.root_path = root_path

        #: The configuration dictionary as :class:`Config`. This behaves
        #: exactly like a regular dictionary but supports additional
        #: methods to load a config from files and the environment.
        self.config = self.make_config()

        #: Provides access to JSON methods. Reports are written with
        #: ``enumerator.json.report``.
        self.json: JSONProvider = self.json_provider_class(self)

        #: Registered methods, by quantity and then by method name.
        self.methods: dict[str, dict[str, MethodInfo]] = {}

        if add_builtin_methods:
            register_builtin_methods(self)

    def make_config(self) -> Config:
        return self.config_class(self.root_path, dict(self.default_config))

    @cached_property
    def logger(self) -> logging.Logger:
        """A standard Python :class:`~logging.Logger` named
        :attr:`name`, ``"zeongraph"`` by default.

        In debug mode, the logger's :attr:`~logging.Logger.level` will
        be set to :data:`~logging.DEBUG`.

        If there are no handlers configured, a default handler writing
        to standard error will be added. See :doc:`/logging` for more
        information.
        """
        return create_logger(self)

    def test_cli_runner(self, **kwargs: t.Any) -> ZeonGraphCliRunner:
        """Create a CLI runner for testing the commands against this
        enumerator.

        Returns an instance of :attr:`test_cli_runner_class`, by default
        :class:`~zeongraph.testing.ZeonGraphCliRunner`. The enumerator
        is passed as the first argument.
        """
        cls = self.test_cli_runner_class

        if cls is None:
            from .testing import ZeonGraphCliRunner as cls

        return cls(self, **kwargs)  # type: ignore

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name!r}>"

    def add_method(
        self,
        quantity: str,
        name: str,
        func: CountMethod,
        oracle: bool = False,
        doc: str | None = None,
    ) -> None:
        """Register ``func`` as method ``name`` for ``quantity``. The
        :meth:`method` decorator calls this.

        :param oracle: The method enumerates directly. A quantity has at
            most one oracle, the other methods are verified against it.
        :param doc: One line for the ``methods`` command. Defaults to
            the first line of the function's docstring.
        """
        registry = self.methods.setdefault(quantity, {})

        if name in registry:
            raise AssertionError(
                f"Method {quantity}/{name} is already registered."
            )

        if oracle and self.oracle_for(quantity) is not None:
            raise AssertionError(f"Quantity {quantity} already has an oracle.")

        if doc is None:
            doc = (func.__doc__ or "").strip().partition("\n")[0]

        registry[name] = MethodInfo(quantity, name, func, oracle, doc)

    def method(
        self,
        quantity: str,
        name: str,
        oracle: bool = False,
        doc: str | None = None,
    ) -> t.Callable[[F], F]:
        """Decorate a function to register it as a counting method::

            @enumerator.method("hamiltonian", "my-method")
            def my_method(graph, *, level, anchor, options):
                return ...

        See :meth:`add_method` for the parameters.
        """

        def decorator(f: F) -> F:
            self.add_method(quantity, name, f, oracle=oracle, doc=doc)
            return f

        return decorator

    def get_method(self, quantity: str, name: str) -> MethodInfo:
        try:
            registry = self.methods[quantity]
        except KeyError:
            raise UnknownMethodError(
                f"Unknown quantity {quantity!r}. Choose from"
                f" {', '.join(sorted(self.methods))}."
            ) from None

        try:
            return registry[name]
        except KeyError:
            raise UnknownMethodError(
                f"Unknown method {name!r} for {quantity}. Choose from"
                f" {', '.join(sorted(registry))}."
            ) from None

    def oracle_for(self, quantity: str) -> MethodInfo | None:
        for info in self.methods.get(quantity, {}).values():
            if info.oracle:
                return info

        return None

    def count(
        self,
        graph: Graph,
        quantity: str,
        method: str,
        *,
        level: int | None = None,
        anchor: int | None = None,
    ) -> CountResult:
        """Count ``quantity`` on ``graph`` with the registered ``method``.

        :param level: The subset level for ``cycle-matching``. Defaults
            to the number of vertices. Other quantities ignore it.
        :param anchor: The anchor vertex for ``goulden-jackson`` and
            ``kirchhoff-cofactor``. Defaults to the ``DEFAULT_ANCHOR``
            config value.
        :raise UnknownMethodError: ``quantity`` or ``method`` is not
            registered.
        :raise SizeLimitError: The graph is too large for the method.
        :raise ConsistencyError: An exact identity failed.
        """
        info = self.get_method(quantity, method)

        if anchor is None:
            anchor = int(self.config["DEFAULT_ANCHOR"])

        signals.count_started.send(self, graph=graph, quantity=quantity, method=method)
        start = time.perf_counter()

        try:
            value = info.func(
                graph,
                level=level,
                anchor=anchor,
                options=self.config.lattice_options(),
            )
        except SizeLimitError as e:
            self.logger.warning("Refused %s/%s on %r: %s", quantity, method, graph, e)
            raise
        except ConsistencyError as e:
            self.logger.error("Failed %s/%s on %r: %s", quantity, method, graph, e)
            raise

        elapsed_ms = (time.perf_counter() - start) * 1000
        result = CountResult(quantity, method, value, graph.n, graph.m, elapsed_ms)
        self.logger.debug(
            "Counted %s/%s on %r: %d in %.1f ms",
            quantity,
            method,
            graph,
            value,
            elapsed_ms,
        )
        signals.count_finished.send(self, result=result)
        return result

    def check_oracle_limits(self, graph: Graph) -> None:
        """Refuse graphs that are empty or beyond what every oracle can
        enumerate.
        """
        if graph.n < 1:
            raise SizeLimitError("Verification needs at least one vertex.")

        CYCLE_MATCHING_COVERS.check(graph.n)
        SPANNING_TREES.check(graph.m)

    def verify(self, graph: Graph) -> VerificationReport:
        """Run every method of every quantity that has an oracle and
        compare each result to the oracle's.

        :raise SizeLimitError: The graph is outside the oracle limits,
            see :meth:`check_oracle_limits`.
        """
        self.check_oracle_limits(graph)
        report = VerificationReport(graph.n, graph.m)

        for quantity, registry in self.methods.items():
            oracle = self.oracle_for(quantity)

            if oracle is None:
                continue

            expected = self.count(graph, quantity, oracle.name)
            report.results.append(expected)

            for name, info in registry.items():
                if info.oracle:
                    continue

                result = self.count(graph, quantity, name)
                report.results.append(result)

                if result.value != expected.value:
                    report.mismatches.append(
                        Mismatch(quantity, name, result.value, expected.value)
                    )

        if report.mismatches:
            self.logger.error(
                "Verification of %r failed: %s",
                graph,
                ", ".join(f"{m.quantity}/{m.method}" for m in report.mismatches),
            )
            signals.verification_failed.send(
                self, graph=graph, mismatches=report.mismatches
            )

        return report
