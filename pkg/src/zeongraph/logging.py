from __future__ import annotations

import logging
import sys
import typing as t

if t.TYPE_CHECKING:  # pragma: no cover
    from .app import Enumerator


def has_level_handler(logger: logging.Logger) -> bool:
    """Whether some handler on the way from ``logger`` to the root will
    accept records at the logger's effective level.
    """
    level = logger.getEffectiveLevel()
    current: logging.Logger | None = logger

    while current is not None:
        if any(h.level <= level for h in current.handlers):
            return True

        current = current.parent if current.propagate else None

    return False


class _StderrStream:
    """Forwards to whatever :data:`sys.stderr` is at write time, so
    redirecting it after import, as the CLI test runner does, is
    respected.
    """

    def write(self, s: str) -> int:
        return sys.stderr.write(s)

    def flush(self) -> None:
        sys.stderr.flush()


#: The stream :data:`default_handler` writes to. Refer to it as
#: ``ext://zeongraph.logging.stderr_stream`` in a logging dict config.
stderr_stream = _StderrStream()

#: Log messages to :data:`stderr_stream` with the format
#: ``[%(asctime)s] %(levelname)s in %(module)s: %(message)s``.
default_handler = logging.StreamHandler(stderr_stream)  # type: ignore[arg-type]
default_handler.setFormatter(
    logging.Formatter("[%(asctime)s] %(levelname)s in %(module)s: %(message)s")
)


def create_logger(enumerator: Enumerator) -> logging.Logger:
    """Get the enumerator's logger and configure it if needed.

    The logger name is :attr:`enumerator.name <zeongraph.Enumerator.name>`,
    ``"zeongraph"`` by default.

    When :attr:`~zeongraph.Enumerator.debug` is enabled, set the logger
    level to :data:`logging.DEBUG` if it is not set.

    If there is no handler for the logger's effective level, add
    :data:`default_handler`.
    """
    logger = logging.getLogger(enumerator.name)

    if enumerator.debug and not logger.level:
        logger.setLevel(logging.DEBUG)

    if not has_level_handler(logger):
        logger.addHandler(default_handler)

    return logger
