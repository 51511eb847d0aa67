from __future__ import annotations

import typing as t

from click.testing import CliRunner
from click.testing import Result

from .cli import cli as zeongraph_cli
from .cli import ScriptInfo

if t.TYPE_CHECKING:  # pragma: no cover
    from .app import Enumerator


class ZeonGraphCliRunner(CliRunner):
    """Runs ``zeongraph`` commands in isolation against one enumerator,
    usually made by :meth:`~zeongraph.Enumerator.test_cli_runner`.
    """

    def __init__(self, enumerator: Enumerator, **kwargs: t.Any) -> None:
        self.enumerator = enumerator
        super().__init__(**kwargs)

    def invoke(  # type: ignore
        self, cli: t.Any = None, args: t.Any = None, **kwargs: t.Any
    ) -> Result:
        """:meth:`CliRunner.invoke <click.testing.CliRunner.invoke>`
        with the :data:`zeongraph.cli.cli` group as the default command
        and, unless ``obj`` is given, a
        :class:`~zeongraph.cli.ScriptInfo` that hands out
        :attr:`enumerator` instead of creating one.
        """
        kwargs.setdefault(
            "obj", ScriptInfo(create_enumerator=lambda: self.enumerator)
        )
        return super().invoke(zeongraph_cli if cli is None else cli, args, **kwargs)
