from __future__ import annotations

import importlib.metadata
import platform
import typing as t
from functools import update_wrapper
from operator import itemgetter

import click
from click.core import ParameterSource

from .app import Enumerator
from .app import VerificationReport
from .errors import ZeonGraphError
from .graphs import BUILTIN_GRAPHS
from .graphs import builtin_graph
from .graphs import Graph
from .graphs import parse_edge_list

F = t.TypeVar("F", bound=t.Callable[..., t.Any])


class CommandError(click.ClickException):
    """Reports a :class:`~zeongraph.errors.ZeonGraphError` on standard
    error and exits with its :attr:`~zeongraph.errors.ZeonGraphError.exit_code`.
    """

    def __init__(self, error: ZeonGraphError) -> None:
        super().__init__(str(error))
        self.exit_code = error.exit_code


def handle_errors(f: F) -> F:
    """Wrap a command callback so library errors become
    :class:`CommandError`.
    """

    def decorator(*args: t.Any, **kwargs: t.Any) -> t.Any:
        try:
            return f(*args, **kwargs)
        except ZeonGraphError as e:
            raise CommandError(e) from e

    return update_wrapper(decorator, f)  # type: ignore[return-value]


def get_version(ctx: click.Context, param: click.Parameter, value: t.Any) -> None:
    if not value or ctx.resilient_parsing:
        return

    zeongraph_version = importlib.metadata.version("zeongraph")
    networkx_version = importlib.metadata.version("networkx")

    click.echo(
        f"Python {platform.python_version()}\n"
        f"zeongraph {zeongraph_version}\n"
        f"networkx {networkx_version}",
        color=ctx.color,
    )
    ctx.exit()


version_option = click.Option(
    ["--version"],
    help="Show the zeongraph version.",
    expose_value=False,
    callback=get_version,
    is_flag=True,
    is_eager=True,
)


class ScriptInfo:
    """Carries what the group options asked for to the commands, and
    creates the :class:`~zeongraph.Enumerator` they run on. It is
    created by :class:`ZeonGraphGroup`, but can also be passed as the
    click ``obj`` to use a prepared enumerator.

    :param create_enumerator: Called without arguments to create the
        enumerator. Defaults to :class:`~zeongraph.Enumerator`.
    """

    def __init__(
        self, create_enumerator: t.Callable[[], Enumerator] | None = None
    ) -> None:
        self.create_enumerator = create_enumerator
        #: A config file given with ``--config``.
        self.config_file: str | None = None
        #: Set by ``--debug/--no-debug``, ``None`` if not given.
        self.debug: bool | None = None
        self._loaded_enumerator: Enumerator | None = None

    def load_enumerator(self) -> Enumerator:
        """Create and configure the enumerator if not yet done and
        return it. ``ZEONGRAPH_*`` environment variables are applied
        first, then the config file, then ``--debug``.
        """
        if self._loaded_enumerator is not None:
            return self._loaded_enumerator

        if self.create_enumerator is not None:
            enumerator = self.create_enumerator()
        else:
            enumerator = Enumerator()

        enumerator.config.from_prefixed_env()

        if self.config_file is not None:
            try:
                enumerator.config.from_config_file(self.config_file)
            except (OSError, ValueError) as e:
                raise click.UsageError(
                    f"Could not load config file {self.config_file!r}: {e}"
                ) from None

        if self.debug is not None:
            enumerator.debug = self.debug

        self._loaded_enumerator = enumerator
        return enumerator


pass_script_info = click.make_pass_decorator(ScriptInfo, ensure=True)


def _set_config(ctx: click.Context, param: click.Option, value: str | None) -> None:
    if value is not None:
        ctx.ensure_object(ScriptInfo).config_file = value


_config_option = click.Option(
    ["--config"],
    metavar="FILE",
    type=click.Path(exists=True, dir_okay=False),
    help="Load configuration from a JSON or TOML file.",
    expose_value=False,
    callback=_set_config,
)


def _set_debug(ctx: click.Context, param: click.Option, value: bool) -> None:
    # Without the flag, leave debug to the config.
    source = ctx.get_parameter_source(param.name)  # type: ignore[arg-type]

    if source is not None and source in (
        ParameterSource.DEFAULT,
        ParameterSource.DEFAULT_MAP,
    ):
        return

    ctx.ensure_object(ScriptInfo).debug = value


_debug_option = click.Option(
    ["--debug/--no-debug"],
    help="Log every count and indent JSON output.",
    expose_value=False,
    callback=_set_debug,
)


class ZeonGraphGroup(click.Group):
    """The ``zeongraph`` command group. It adds the ``--config``,
    ``--debug`` and ``--version`` options and the default commands.

    :param add_default_commands: Add ``count``, ``verify`` and
        ``methods``.
    :param create_enumerator: Passed to :class:`ScriptInfo`.
    :param add_version_option: Add the ``--version`` option.
    """

    def __init__(
        self,
        add_default_commands: bool = True,
        create_enumerator: t.Callable[[], Enumerator] | None = None,
        add_version_option: bool = True,
        **extra: t.Any,
    ) -> None:
        params: list[click.Parameter] = list(extra.pop("params", None) or ())
        params.extend((_config_option, _debug_option))

        if add_version_option:
            params.append(version_option)

        super().__init__(params=params, **extra)
        self.create_enumerator = create_enumerator

        if add_default_commands:
            self.add_command(count_command)
            self.add_command(verify_command)
            self.add_command(methods_command)

    def make_context(
        self,
        info_name: str | None,
        args: list[str],
        parent: click.Context | None = None,
        **extra: t.Any,
    ) -> click.Context:
        if "obj" not in extra and "obj" not in self.context_settings:
            extra["obj"] = ScriptInfo(create_enumerator=self.create_enumerator)

        return super().make_context(info_name, args, parent=parent, **extra)


def graph_options(f: F) -> F:
    """Add the options that select the input graph."""
    f = click.option(
        "--vertices",
        type=click.IntRange(min=0),
        help="Number of vertices, for isolated vertices past the last edge.",
    )(f)
    f = click.option(
        "--builtin",
        type=click.Choice(sorted(BUILTIN_GRAPHS)),
        help="Use a built-in graph.",
    )(f)
    f = click.option(
        "--input",
        "-i",
        "input_file",
        type=click.File("rb"),
        help="Edge list file, '-' for standard input.",
    )(f)
    return f


def load_graph(
    input_file: t.BinaryIO | None, builtin: str | None, vertices: int | None
) -> Graph:
    if (input_file is None) == (builtin is None):
        raise click.UsageError("Give exactly one of '--input' and '--builtin'.")

    if input_file is not None:
        return parse_edge_list(input_file.read(), vertices)

    if vertices is not None:
        raise click.UsageError("'--vertices' only applies to '--input'.")

    return builtin_graph(t.cast(str, builtin))


_format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(("json", "text")),
    default="json",
    show_default=True,
    help="Output format.",
)


@click.command("count", short_help="Count a quantity with one method.")
@click.argument("quantity")
@click.option("--method", "-m", required=True, help="The counting method.")
@graph_options
@click.option(
    "--level",
    type=click.IntRange(min=0),
    help="Subset level for cycle-matching. Defaults to all vertices.",
)
@click.option(
    "--anchor",
    type=click.IntRange(min=0),
    help="Anchor vertex for goulden-jackson and kirchhoff-cofactor.",
)
@_format_option
@click.option(
    "--allow-large",
    is_flag=True,
    help="Sum over subset lattices past the configured size limit.",
)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    help="Worker processes for subset-lattice sums.",
)
@pass_script_info
@handle_errors
def count_command(
    info: ScriptInfo,
    quantity: str,
    method: str,
    input_file: t.BinaryIO | None,
    builtin: str | None,
    vertices: int | None,
    level: int | None,
    anchor: int | None,
    output_format: str,
    allow_large: bool,
    workers: int | None,
) -> None:
    """Count QUANTITY (spanning-trees, hamiltonian or cycle-matching)
    on a graph with one method. Run the 'methods' command to list them.
    """
    enumerator = info.load_enumerator()

    if allow_large:
        enumerator.config["ALLOW_LARGE"] = True

    if workers is not None:
        enumerator.config["WORKERS"] = workers

    graph = load_graph(input_file, builtin, vertices)
    result = enumerator.count(graph, quantity, method, level=level, anchor=anchor)

    if output_format == "json":
        click.echo(enumerator.json.report(result), nl=False)
    else:
        click.echo(f"{result.quantity} {result.method} {result.value}")


def _echo_verification(name: str | None, report: VerificationReport) -> None:
    failed = {(m.quantity, m.method) for m in report.mismatches}
    prefix = f"{name} " if name is not None else ""

    for result in report.results:
        if result.method == "oracle":
            status = "ORACLE"
        elif (result.quantity, result.method) in failed:
            status = "FAIL"
        else:
            status = "PASS"

        click.echo(
            f"{prefix}{result.quantity} {result.method} {result.value} {status}"
        )


@click.command("verify", short_help="Check every method against the oracles.")
@graph_options
@click.option(
    "--corpus",
    is_flag=True,
    help="Verify every built-in graph.",
)
@_format_option
@pass_script_info
@handle_errors
def verify_command(
    info: ScriptInfo,
    input_file: t.BinaryIO | None,
    builtin: str | None,
    vertices: int | None,
    corpus: bool,
    output_format: str,
) -> None:
    """Run every counting method on a graph and compare each one to the
    oracle of its quantity. Exits with status 1 if any method disagrees.
    """
    enumerator = info.load_enumerator()

    if corpus:
        if input_file is not None or builtin is not None or vertices is not None:
            raise click.UsageError("'--corpus' can't be combined with a graph.")

        reports = {
            name: enumerator.verify(builtin_graph(name))
            for name in sorted(BUILTIN_GRAPHS)
        }
    else:
        reports = {None: enumerator.verify(load_graph(input_file, builtin, vertices))}

    passed = all(report.passed for report in reports.values())

    if output_format == "json":
        if corpus:
            obj: t.Any = {
                "graphs": {name: report for name, report in reports.items()},
                "passed": passed,
            }
        else:
            obj = reports[None]

        click.echo(enumerator.json.report(obj), nl=False)
    else:
        for name, report in reports.items():
            _echo_verification(name, report)

        click.echo("PASS" if passed else "FAIL")

    if not passed:
        for report in reports.values():
            for m in report.mismatches:
                click.echo(
                    f"{m.quantity} {m.method} gave {m.value}, oracle gave"
                    f" {m.oracle_value}",
                    err=True,
                )

        raise click.exceptions.Exit(1)


@click.command("methods", short_help="Show the registered counting methods.")
@click.option(
    "--sort",
    "-s",
    type=click.Choice(("quantity", "method")),
    default="quantity",
    help="Column to sort the table by.",
)
@pass_script_info
def methods_command(info: ScriptInfo, sort: str) -> None:
    """Show all registered counting methods by quantity."""
    enumerator = info.load_enumerator()
    rows = [
        [method.quantity, name, "yes" if method.oracle else "", method.doc]
        for registry in enumerator.methods.values()
        for name, method in registry.items()
    ]

    if not rows:
        click.echo("No methods were registered.")
        return

    headers = ["Quantity", "Method", "Oracle", "Description"]
    sorts = ["quantity", "method"]
    rows.sort(key=itemgetter(sorts.index(sort)))
    rows.insert(0, headers)
    widths = [max(len(row[i]) for row in rows) for i in range(len(headers))]
    rows.insert(1, ["-" * w for w in widths])
    template = "  ".join(f"{{{i}:<{w}}}" for i, w in enumerate(widths))

    for row in rows:
        click.echo(template.format(*row).rstrip())


cli = ZeonGraphGroup(
    name="zeongraph",
    help="""\
Exact counts of spanning trees, Hamiltonian cycles and cycle-matching
covers, computed through zeon and Clifford algebra operators and checked
against brute-force enumeration.

Graphs are read from edge list files, one edge of two vertex ids per
line.
""",
)


def main() -> None:
    cli.main()


if __name__ == "__main__":
    main()
